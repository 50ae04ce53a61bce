#include "hodgeball/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hodgeball {

int multiindex_degree(const MultiIndex& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string multiindex_key(const MultiIndex& e) {
    std::ostringstream out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out << ',';
        out << e[i];
    }
    return out.str();
}

MultiIndex parse_multiindex(const std::string& key, int nvars) {
    MultiIndex e;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size() || v < 0) throw std::invalid_argument("bad multi-index: " + key);
        e.push_back(v);
    }
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("multi-index arity mismatch: " + key);
    return e;
}

BlockSeries::BlockSeries(int nvars, int order, std::size_t rows, std::size_t cols)
    : nvars_(nvars), order_(order), rows_(rows), cols_(cols) {
    if (nvars < 0 || order < 0) throw std::invalid_argument("bad series shape");
}

BlockSeries BlockSeries::constant(int nvars, int order, Mat value) {
    BlockSeries s(nvars, order, value.rows(), value.cols());
    s.set_coeff(MultiIndex(nvars, 0), std::move(value));
    return s;
}

BlockSeries BlockSeries::coordinate(int nvars, int order, int mu) {
    if (mu < 0 || mu >= nvars) throw std::invalid_argument("coordinate index out of range");
    BlockSeries s(nvars, order, 1, 1);
    if (order >= 1) {
        MultiIndex e(nvars, 0);
        e[mu] = 1;
        Mat one(1, 1);
        one.at(0, 0) = GaussianRational(1);
        s.set_coeff(e, std::move(one));
    }
    return s;
}

Mat BlockSeries::coeff(const MultiIndex& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Mat(rows_, cols_) : it->second;
}

void BlockSeries::set_coeff(const MultiIndex& e, Mat value) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("multi-index arity mismatch");
    if (value.rows() != rows_ || value.cols() != cols_)
        throw std::invalid_argument("coefficient shape mismatch");
    if (multiindex_degree(e) > order_) return;
    if (value.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = std::move(value);
}

bool BlockSeries::is_zero() const { return coeffs_.empty(); }

void BlockSeries::check_compatible(const BlockSeries& o) const {
    if (nvars_ != o.nvars_ || order_ != o.order_)
        throw std::invalid_argument("series variable count or order mismatch");
}

BlockSeries BlockSeries::operator-() const {
    BlockSeries out = *this;
    for (auto& [e, c] : out.coeffs_) c = -c;
    return out;
}

BlockSeries operator+(const BlockSeries& a, const BlockSeries& b) {
    a.check_compatible(b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("series shape mismatch");
    BlockSeries out = a;
    for (const auto& [e, c] : b.coeffs_) out.set_coeff(e, out.coeff(e) + c);
    return out;
}

BlockSeries operator-(const BlockSeries& a, const BlockSeries& b) { return a + (-b); }

BlockSeries operator*(const BlockSeries& a, const BlockSeries& b) {
    a.check_compatible(b);
    bool a_scalar = a.rows_ == 1 && a.cols_ == 1 && !(b.rows_ == 1 && b.cols_ == 1);
    bool b_scalar = b.rows_ == 1 && b.cols_ == 1 && !a_scalar && !(a.rows_ == 1 && a.cols_ == 1);
    if (!a_scalar && !b_scalar && a.cols_ != b.rows_)
        throw std::invalid_argument("series inner dimension mismatch");
    std::size_t rows = a_scalar ? b.rows_ : a.rows_;
    std::size_t cols = b_scalar ? a.cols_ : b.cols_;

    BlockSeries out(a.nvars_, a.order_, rows, cols);
    for (const auto& [ea, ca] : a.coeffs_) {
        int da = multiindex_degree(ea);
        for (const auto& [eb, cb] : b.coeffs_) {
            if (da + multiindex_degree(eb) > a.order_) continue;
            MultiIndex e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            Mat prod = a_scalar   ? ca.at(0, 0) * cb
                       : b_scalar ? cb.at(0, 0) * ca
                                  : ca * cb;
            out.set_coeff(e, out.coeff(e) + prod);
        }
    }
    return out;
}

BlockSeries operator*(const GaussianRational& s, const BlockSeries& a) {
    BlockSeries out(a.nvars_, a.order_, a.rows_, a.cols_);
    for (const auto& [e, c] : a.coeffs_) out.set_coeff(e, s * c);
    return out;
}

BlockSeries BlockSeries::derivative(int mu) const {
    if (mu < 0 || mu >= nvars_) throw std::invalid_argument("derivative index out of range");
    BlockSeries out(nvars_, order_, rows_, cols_);
    for (const auto& [e, c] : coeffs_) {
        if (e[mu] == 0) continue;
        MultiIndex shifted = e;
        --shifted[mu];
        out.set_coeff(shifted, GaussianRational(e[mu]) * c);
    }
    return out;
}

BlockSeries BlockSeries::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
    BlockSeries out(nvars_, order_, nr, nc);
    for (const auto& [e, c] : coeffs_) out.set_coeff(e, c.submatrix(r0, c0, nr, nc));
    return out;
}

BlockSeries BlockSeries::truncated(int new_order) const {
    BlockSeries out(nvars_, new_order, rows_, cols_);
    for (const auto& [e, c] : coeffs_)
        if (multiindex_degree(e) <= new_order) out.set_coeff(e, c);
    return out;
}

Mat BlockSeries::evaluate(const std::vector<GaussianRational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point arity mismatch");
    Mat sum(rows_, cols_);
    for (const auto& [e, c] : coeffs_) {
        GaussianRational scale(1);
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j) scale *= point[i];
        sum += scale * c;
    }
    return sum;
}

BlockSeries exp_linear(const std::vector<Mat>& ops, int order) {
    if (ops.empty()) throw std::invalid_argument("exp_linear needs at least one operator");
    const std::size_t m = ops[0].rows();
    const int nvars = static_cast<int>(ops.size());
    for (const auto& op : ops)
        if (op.rows() != m || op.cols() != m)
            throw std::invalid_argument("exp_linear operators must be square of equal size");

    BlockSeries linear(nvars, order, m, m);
    for (int mu = 0; mu < nvars; ++mu) {
        MultiIndex e(nvars, 0);
        e[mu] = 1;
        linear.set_coeff(e, ops[mu]);
    }

    BlockSeries sum = BlockSeries::constant(nvars, order, Mat::identity(m));
    BlockSeries power = sum;
    for (int j = 1; j <= order; ++j) {
        power = GaussianRational(Rational(Int(1), Int(j))) * (power * linear);
        if (power.is_zero()) break;
        sum = sum + power;
    }
    return sum;
}

BlockSeries compose(const BlockSeries& f, const BlockSeries& args) {
    if (static_cast<int>(args.rows()) != f.nvars() || args.cols() != 1)
        throw std::invalid_argument("compose needs one argument series per variable");
    if (!args.coeff(MultiIndex(args.nvars(), 0)).is_zero())
        throw std::invalid_argument("compose arguments must have zero constant term");

    const int nvars = args.nvars();
    const int order = args.order();
    BlockSeries out(nvars, order, f.rows(), f.cols());
    // Cache powers of each argument component as scalar series.
    std::vector<std::vector<BlockSeries>> powers(f.nvars());
    auto component_power = [&](int mu, int e) -> const BlockSeries& {
        auto& cache = powers[mu];
        if (cache.empty()) {
            Mat one(1, 1);
            one.at(0, 0) = GaussianRational(1);
            cache.push_back(BlockSeries::constant(nvars, order, std::move(one)));
            cache.push_back(args.submatrix(mu, 0, 1, 1));
        }
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };

    for (const auto& [e, c] : f.coeffs()) {
        if (multiindex_degree(e) > order) continue;  // maps into degree >= |e|
        Mat one(1, 1);
        one.at(0, 0) = GaussianRational(1);
        BlockSeries scale = BlockSeries::constant(nvars, order, std::move(one));
        for (int mu = 0; mu < f.nvars(); ++mu)
            if (e[mu] > 0) scale = scale * component_power(mu, e[mu]);
        out = out + scale * BlockSeries::constant(nvars, order, c);
    }
    return out;
}

BlockSeries invert_coordinates(const BlockSeries& phi) {
    const int nvars = phi.nvars();
    const int order = phi.order();
    if (static_cast<int>(phi.rows()) != nvars || phi.cols() != 1)
        throw std::invalid_argument("coordinate series must be a column of height nvars");
    if (!phi.coeff(MultiIndex(nvars, 0)).is_zero())
        throw std::invalid_argument("coordinate series must vanish at the origin");

    Mat a(nvars, nvars);
    for (int mu = 0; mu < nvars; ++mu) {
        MultiIndex e(nvars, 0);
        e[mu] = 1;
        Mat col = phi.coeff(e);
        for (int i = 0; i < nvars; ++i) a.at(i, mu) = col.at(i, 0);
    }
    Mat a_inv;
    try {
        a_inv = a.inverse();
    } catch (const std::domain_error&) {
        throw std::domain_error("coordinate series has singular linear part");
    }

    // w as the identity column-vector series in the new variables.
    BlockSeries w(nvars, order, nvars, 1);
    for (int mu = 0; mu < nvars; ++mu) {
        MultiIndex e(nvars, 0);
        e[mu] = 1;
        Mat col(nvars, 1);
        col.at(mu, 0) = GaussianRational(1);
        w.set_coeff(e, std::move(col));
    }

    BlockSeries linear(nvars, order, nvars, 1);
    for (int mu = 0; mu < nvars; ++mu) {
        MultiIndex e(nvars, 0);
        e[mu] = 1;
        linear.set_coeff(e, phi.coeff(e));
    }
    BlockSeries higher = phi - linear;

    BlockSeries inv_const = BlockSeries::constant(nvars, order, a_inv);
    // z^{(d+1)} = A^{-1}(w - H(z^{(d)})); each pass fixes one more degree.
    BlockSeries z = inv_const * w;
    for (int pass = 0; pass < order; ++pass) z = inv_const * (w - compose(higher, z));
    return z;
}

}  // namespace hodgeball
