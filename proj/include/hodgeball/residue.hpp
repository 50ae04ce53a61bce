#pragma once

#include "hodgeball/polyring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hodgeball {

/// Smooth hypersurface X = (F = 0) in P^{n+1}, dim X = n, deg F = d.
struct Hypersurface {
    int dim;             // n
    int degree;          // d
    Polynomial defining; // homogeneous of degree d in n+2 variables

    Hypersurface(int n, Polynomial f);
};

GradedQuotientRing jacobian_ring(const Hypersurface& x);

/// True iff the Jacobian ideal is zero-dimensional (finite quotient).
bool smoothness_check(const Hypersurface& x);

struct HodgePiece {
    int k;                       // piece H^{k, n-k}
    int target_degree;           // d(n+1-k) - n - 2
    std::vector<Monomial> basis; // standard monomial basis (empty if degree < 0)
};

/// Primitive Hodge numbers h^{k,n-k} via graded Jacobian pieces, k = n..0.
std::vector<HodgePiece> hodge_numbers(const Hypersurface& x);

/// F + x_new^r with r = deg F; raises the ambient dimension by one.
Hypersurface cyclic_cover(const Hypersurface& x, int r);

/// Macaulay non-degeneracy range 0 <= d(n+2-k)-n-2 <= (n+2)(d-2).
bool macaulay_range_check(int n, int d, int k);

struct BallTypeReport {
    int k = -1;
    std::string omega;          // chosen generator, empty if none passes (*1)
    int star1_rank = 0;
    int tangent_dim = 0;
    bool star1 = false;
    bool star2 = false;
    std::vector<std::string> witnesses; // non-vanishing double-contraction products
    bool holds() const { return star1 && star2; }
};

struct BallTypeOptions {
    /// Tangent piece degree; defaults to d.
    std::optional<int> tangent_degree;
    /// Number of leading variables spanning the tangent sub-ring; defaults to all.
    std::optional<int> tangent_vars;
    /// Test every basis element of H^{k,n-k} as Omega, not just the first passing one.
    bool exhaustive_omega = false;
};

/// Ball-type criterion: (*1) injective contraction into H^{k-1,n-k+1},
/// (*2) vanishing double contraction of the whole top piece. Contraction is
/// realized as ring multiplication through the residue identification.
BallTypeReport ball_type_check(const Hypersurface& x, const BallTypeOptions& opts = {});

}  // namespace hodgeball
