#pragma once

#include "hodgeball/matrix.hpp"
#include "hodgeball/polyring.hpp"

#include <string>
#include <vector>

namespace hodgeball {

/// Character of a finite abelian group given by residue tuples; values are
/// root-of-unity indices mod the group exponent, never complex numbers.
struct Character {
    std::vector<int> orders;    // group = Z/d_1 x ... x Z/d_r
    std::vector<int> residues;  // chi component indices, residues[i] mod orders[i]

    Character(std::vector<int> group_orders, std::vector<int> chi);

    int exponent() const;  // lcm of the orders
    /// Index of chi(g) as a power of the primitive exponent()-th root.
    int index_of(const std::vector<int>& element) const;
};

/// Diagonal-action eigenspace: basis vector r carries eigen-index
/// indices[i][r] for generator i. Returns the matching basis positions.
std::vector<int> eigenspace_diagonal(const std::vector<std::vector<int>>& indices,
                                     const Character& chi);

/// Dense path for representations diagonalizable over Q(i): basis of
/// {v : rep[i] v = values[i] v for all i}. Throws on non-commuting generators.
Mat eigenspace_dense(const std::vector<Mat>& rep, const std::vector<GaussianRational>& values);

/// Number of standard monomials of the given degree whose weighted exponent
/// sum is congruent to chi_index mod modulus. Monomial ideals only.
int eigen_graded_dim(const GradedQuotientRing& ring, const std::vector<int>& weights, int degree,
                     int chi_index, int modulus);

Int binomial(int n, int k);

/// h^{p,q}_chi = C(|mu|-1, p) * C(m-1-|mu|, q), p + q = n.
Int dm_hodge_numbers(int m, int n, int mu_sum, int p, int q);

/// dim H^n_chi = C(m-2, n); needs m >= n+2.
Int dm_total_dim(int m, int n);

/// Hyperplane arrangement with Deligne-Mostow weights.
struct ArrangementData {
    int m = 0;  // hyperplane count
    int n = 0;  // ambient projective dimension
    Mat coeffs; // m x (n+1) rational coefficient matrix
    std::vector<Rational> mu;

    /// Validates 0 < mu_i < 1, integral |mu|, full rank; certifies general
    /// position by checking all (n+1)-row minors unless skipped.
    ArrangementData(int m_count, int dim, Mat a, std::vector<Rational> weights,
                    bool certify_general_position = true);

    int mu_sum() const;
    Int hodge_number(int p, int q) const { return dm_hodge_numbers(m, n, mu_sum(), p, q); }
};

/// The n+1 degree-d equations sum_i a_{ij} z_i^d with d = lcd(mu).
std::vector<Polynomial> arrangement_variety(const ArrangementData& data);

struct EigenBallReport {
    bool vanishing_above = false;  // (i)  dims[j] = 0 for j >= k+1
    bool top_is_line = false;      // (ii) dims[k] = 1
    bool tangent_matches = false;  // (iii) tangent = dims[k-1] - 1
    bool stable_below = false;     // (iv) dims[j] = dims[k-1] for j <= k-1
    bool pass() const { return vanishing_above && top_is_line && tangent_matches && stable_below; }
};

/// dims[j] = dim F_chi^j for j = 0 .. dims.size()-1, non-increasing.
EigenBallReport eigen_ball_conditions(const std::vector<int>& dims, int k, int tangent_dim);

}  // namespace hodgeball
