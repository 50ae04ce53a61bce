#include "hodgeball/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hodgeball {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const GaussianRational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Mat operator*(const GaussianRational& s, Mat a) {
    for (auto& x : a.data_) x *= s;
    return a;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::conj() const {
    Mat r = *this;
    for (auto& x : r.data_) x = x.conj();
    return r;
}

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void Mat::set_submatrix(std::size_t r0, std::size_t c0, const Mat& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) at(r0 + i, c0 + j) = block.at(i, j);
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("shape mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    r.set_submatrix(0, 0, a);
    r.set_submatrix(0, a.cols(), b);
    return r;
}

namespace {

// Row echelon form in place. Returns rank and the list of pivot columns.
std::size_t echelon(Mat& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
        GaussianRational inv = m.at(rank, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t Mat::rank() const {
    Mat m = *this;
    return echelon(m);
}

GaussianRational Mat::det() const {
    if (!is_square()) throw std::invalid_argument("det of non-square matrix");
    Mat m = *this;
    GaussianRational d(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t piv = col;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) return GaussianRational(0);
        if (piv != col) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        GaussianRational inv = m.at(col, col).inverse();
        for (std::size_t r = col + 1; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    Mat aug = hcat(*this, identity(rows_));
    std::vector<std::size_t> pivots;
    std::size_t r = echelon(aug, &pivots);
    // Pivots escaping into the identity half mean the left block is singular.
    if (r != rows_ || (r > 0 && pivots[r - 1] >= rows_)) throw std::domain_error("singular matrix");
    return aug.submatrix(0, rows_, rows_, rows_);
}

Mat Mat::kernel() const {
    Mat m = *this;
    std::vector<std::size_t> pivots;
    echelon(m, &pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(cols_, free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k.at(fc, fi) = GaussianRational(1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(pivots[pi], fi) = -m.at(pi, fc);
    }
    return k;
}

bool same_column_span(const Mat& a, const Mat& b) {
    std::size_t ra = a.rank(), rb = b.rank();
    if (ra != rb) return false;
    return Mat::hcat(a, b).rank() == ra;
}

Mat column_span_intersection(const Mat& a, const Mat& b) {
    // Kernel of [A | -B] gives pairs (x, y) with A x = B y.
    Mat stacked = Mat::hcat(a, -b);
    Mat k = stacked.kernel();
    Mat xs = k.submatrix(0, 0, a.cols(), k.cols());
    Mat inter = a * xs;
    // Reduce to an independent column subset.
    Mat m = inter;
    std::vector<std::size_t> pivots;
    {
        Mat tmp = m;
        echelon(tmp, &pivots);
    }
    Mat result(inter.rows(), pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        result.set_submatrix(0, i, inter.submatrix(0, pivots[i], inter.rows(), 1));
    return result;
}

}  // namespace hodgeball
