#pragma once

#include "hodgeball/scalar.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace hodgeball {

/// Dense matrix over the Gaussian rationals. All operations are exact.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const GaussianRational& s, Mat a);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const;
    Mat conj() const;
    Mat conj_transpose() const { return conj().transpose(); }

    Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_submatrix(std::size_t r0, std::size_t c0, const Mat& block);

    /// Horizontal concatenation [A | B].
    static Mat hcat(const Mat& a, const Mat& b);

    std::size_t rank() const;
    GaussianRational det() const;
    /// Exact inverse; throws std::domain_error if singular.
    Mat inverse() const;
    /// Basis of the right kernel, as columns.
    Mat kernel() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Rank of the span union: rank([A | B]) == rank(A) == rank(B) means equal spans.
bool same_column_span(const Mat& a, const Mat& b);

/// Column basis of the intersection of the column spans of A and B.
Mat column_span_intersection(const Mat& a, const Mat& b);

}  // namespace hodgeball
