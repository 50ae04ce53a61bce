#pragma once

#include "hodgeball/period_domain.hpp"
#include "hodgeball/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodgeball {

/// Commuting grade -1 infinitesimal-isometry tuple in adapted coordinates.
/// Flags are verified at construction, never assumed.
struct HorizontalData {
    HodgeNumbers numbers;
    Mat q;                 // polarization matrix in the same coordinates
    std::vector<Mat> ops;  // N_1, ..., N_N

    bool commuting = false;
    bool grade_minus_one = false;
    bool isometry = false;
    std::string violation;  // names the failing pair/operator when a flag is false

    bool valid() const { return commuting && grade_minus_one && isometry; }
    int nvars() const { return static_cast<int>(ops.size()); }
};

HorizontalData make_horizontal(HodgeNumbers numbers, Mat q, std::vector<Mat> ops);

/// Phi(z) = exp(sum z_i N_i) truncated at `order`; throws std::invalid_argument
/// naming the violated flag if the data is not valid.
BlockSeries nilpotent_orbit(const HorizontalData& data, int order);

struct TransversalityWitness {
    int alpha = 0, beta = 0, mu = 0;
    MultiIndex index;
};

struct TransversalityReport {
    bool pass = true;
    std::optional<TransversalityWitness> witness;  // lexicographically least failure
    std::string detail;
};

/// Verifies d Phi^{(a,b)} / dz_mu = Phi^{(a,b+1)} . d Phi^{(b+1,b)} / dz_mu for
/// all 0 <= b < a <= n and all mu, as truncated series up to order T-1.
TransversalityReport check_transversality(const BlockSeries& phi, const HodgeNumbers& numbers);

struct OrderBoundReport {
    bool pass = true;
    int alpha = 0, beta = 0;
    MultiIndex index;  // offending monomial of degree < alpha - beta
};

OrderBoundReport check_order_bounds(const BlockSeries& phi, const HodgeNumbers& numbers);

struct CanonicalCoordinates {
    BlockSeries coords;  // N x 1 column of the component series z^c_i(z)
    Mat jacobian;        // degree-1 Jacobian
    bool invertible = false;
};

/// z^c = transpose of block (n-k+1, n-k) of Phi; needs h^{k,n-k} = 1.
CanonicalCoordinates canonical_coordinates(const BlockSeries& phi, const HodgeNumbers& numbers,
                                           int k);

struct SectionExpansion {
    BlockSeries omega;  // m x 1 section column re-expanded in z^c
    /// Degree-2 coefficients match the symmetrized operator products applied to
    /// the base vector, and are supported on level n-k+2.
    bool degree2_matches_products = false;
    bool degree2_in_level = false;
};

SectionExpansion section_expansion(const HorizontalData& data, int k, int order);

struct BallTypeOrbitReport {
    bool star1 = false;             // {N_i Omega_0} linearly independent
    bool star2 = false;             // N_i N_j annihilates the whole top block
    bool linear_expansion = false;  // every coefficient of degree >= 2 vanishes
    bool level1_constant = false;   // level-1 coefficient functions constant in z^c
    std::optional<std::pair<int, int>> witness_pair;  // first (i,j) violating (*2)
    bool pass() const { return star1 && star2 && linear_expansion && level1_constant; }
};

BallTypeOrbitReport ball_type_verify(const HorizontalData& data, int k, int order);

struct RefinedPoint {
    std::vector<GaussianRational> values;
};

/// Level-(n-k+1) entries of an evaluated section column; the level-(n-k) entry
/// must be 1 and every other entry 0, else "not ball type at this point".
RefinedPoint refined_period(const Mat& column, const HodgeNumbers& numbers, int k);

/// Value of the normalized HR2 Hermitian form diag(+1, -1, ..., -1) on
/// (1, P_1, ..., P_N); positive iff the point lies in the open unit ball.
Rational refined_hr2_value(const RefinedPoint& p);

bool ball_membership(const RefinedPoint& p);

/// Weight-3 data with h = (1, N, N, 1); operators have N_i N_j = 0, so the
/// section expansion is exactly linear.
HorizontalData random_ball_type_data(std::uint64_t seed, int n);

/// Weight-3 Calabi-Yau-like data built from a random nonzero symmetric
/// 3-tensor; generically not ball type.
HorizontalData random_cy_data(std::uint64_t seed, int n);

}  // namespace hodgeball
