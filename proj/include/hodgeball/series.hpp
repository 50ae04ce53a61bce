#pragma once

#include "hodgeball/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace hodgeball {

/// Exponent vector of a series monomial z_1^{e_1} ... z_N^{e_N}.
using MultiIndex = std::vector<int>;

int multiindex_degree(const MultiIndex& e);
std::string multiindex_key(const MultiIndex& e);  // "e1,...,eN"
MultiIndex parse_multiindex(const std::string& key, int nvars);

/// Truncated power series with matrix coefficients, cut off strictly above
/// total degree `order`. Scalar series are the 1 x 1 case.
class BlockSeries {
public:
    BlockSeries() = default;
    BlockSeries(int nvars, int order, std::size_t rows, std::size_t cols);

    static BlockSeries constant(int nvars, int order, Mat value);
    /// The coordinate series z_mu (0-based), as a 1 x 1 series.
    static BlockSeries coordinate(int nvars, int order, int mu);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const std::map<MultiIndex, Mat>& coeffs() const { return coeffs_; }
    /// Coefficient of z^e; zero matrix if absent.
    Mat coeff(const MultiIndex& e) const;
    void set_coeff(const MultiIndex& e, Mat value);

    bool is_zero() const;

    friend bool operator==(const BlockSeries& a, const BlockSeries& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.rows_ == b.rows_ &&
               a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BlockSeries& a, const BlockSeries& b) { return !(a == b); }

    BlockSeries operator-() const;
    friend BlockSeries operator+(const BlockSeries& a, const BlockSeries& b);
    friend BlockSeries operator-(const BlockSeries& a, const BlockSeries& b);
    /// Truncated convolution; inner matrix dimensions must agree.
    friend BlockSeries operator*(const BlockSeries& a, const BlockSeries& b);
    friend BlockSeries operator*(const GaussianRational& s, const BlockSeries& a);

    BlockSeries scaled(const GaussianRational& s) const { return s * *this; }
    /// Formal partial derivative in z_mu.
    BlockSeries derivative(int mu) const;
    /// Entrywise submatrix of every coefficient.
    BlockSeries submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Drop terms of total degree > new_order.
    BlockSeries truncated(int new_order) const;

    /// Exact evaluation at a point (one value per variable).
    Mat evaluate(const std::vector<GaussianRational>& point) const;

private:
    int nvars_ = 0;
    int order_ = 0;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<MultiIndex, Mat> coeffs_;

    void check_compatible(const BlockSeries& o) const;
};

/// exp(sum_mu z_mu ops[mu]) truncated at `order`. Operators need not commute;
/// the linear form is exponentiated as a single matrix series.
BlockSeries exp_linear(const std::vector<Mat>& ops, int order);

/// Invert w = phi(z) where phi has zero constant term and invertible linear
/// part; returns z as a column-vector series in w up to the order of phi.
BlockSeries invert_coordinates(const BlockSeries& phi);

/// Substitute the column-vector series `args` (one row per variable of f,
/// all with zero constant term) into f.
BlockSeries compose(const BlockSeries& f, const BlockSeries& args);

}  // namespace hodgeball
