#include "hodgeball/residue.hpp"

#include "hodgeball/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hodgeball {

Hypersurface::Hypersurface(int n, Polynomial f) : dim(n), degree(f.degree()), defining(std::move(f)) {
    if (defining.is_zero()) throw std::invalid_argument("zero defining polynomial");
    if (!defining.is_homogeneous()) throw std::invalid_argument("defining polynomial not homogeneous");
    if (defining.nvars() != n + 2)
        throw std::invalid_argument("hypersurface in P^" + std::to_string(n + 1) + " needs " +
                                    std::to_string(n + 2) + " variables");
}

GradedQuotientRing jacobian_ring(const Hypersurface& x) {
    std::vector<Polynomial> partials;
    for (int v = 0; v < x.defining.nvars(); ++v) {
        Polynomial d = x.defining.derivative(v);
        if (!d.is_zero()) partials.push_back(std::move(d));
    }
    if (partials.empty()) throw std::invalid_argument("all partials vanish");
    return GradedQuotientRing(std::move(partials), x.defining.order());
}

bool smoothness_check(const Hypersurface& x) {
    return jacobian_ring(x).zero_dimensional();
}

std::vector<HodgePiece> hodge_numbers(const Hypersurface& x) {
    GradedQuotientRing ring = jacobian_ring(x);
    if (!ring.zero_dimensional())
        throw std::domain_error("Jacobian ideal not zero-dimensional");
    const int n = x.dim, d = x.degree;
    std::vector<HodgePiece> pieces;
    for (int k = n; k >= 0; --k) {
        HodgePiece piece;
        piece.k = k;
        piece.target_degree = d * (n + 1 - k) - n - 2;
        if (piece.target_degree >= 0) piece.basis = ring.graded_basis(piece.target_degree);
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

Hypersurface cyclic_cover(const Hypersurface& x, int r) {
    if (r < 2) throw std::invalid_argument("degenerate cover");
    if (r != x.degree) throw std::invalid_argument("inhomogeneous cover");
    int nv = x.defining.nvars() + 1;
    Polynomial f(nv, x.defining.order());
    for (const auto& [m, c] : x.defining.terms()) {
        auto exps = m.exponents();
        exps.push_back(0);
        f.add_term(Monomial(std::move(exps)), c);
    }
    f += Polynomial::monomial(Monomial::variable(nv, nv - 1, x.degree), Rational(1),
                              x.defining.order());
    return Hypersurface(x.dim + 1, std::move(f));
}

bool macaulay_range_check(int n, int d, int k) {
    if (k < 1 || k > n || d < 2) throw std::invalid_argument("macaulay_range_check: need 1<=k<=n, d>=2");
    int lhs = d * (n + 2 - k) - n - 2;
    return 0 <= lhs && lhs <= (n + 2) * (d - 2);
}

namespace {

// Coordinates of a reduced ring element in a monomial basis; throws if a term
// falls outside the basis (cannot happen for normal forms of the right degree).
std::vector<Rational> coordinates(const Polynomial& f, const std::vector<Monomial>& basis) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].str()] = i;
    std::vector<Rational> coords(basis.size());
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m.str());
        if (it == index.end()) throw std::logic_error("term outside graded basis");
        coords[it->second] = c;
    }
    return coords;
}

}  // namespace

BallTypeReport ball_type_check(const Hypersurface& x, const BallTypeOptions& opts) {
    if (!smoothness_check(x)) throw std::domain_error("Jacobian ideal not zero-dimensional");
    GradedQuotientRing ring = jacobian_ring(x);
    auto pieces = hodge_numbers(x);

    BallTypeReport report;
    // k = largest l with nonzero piece; everything above it vanishes.
    const HodgePiece* top = nullptr;
    for (const auto& p : pieces) {
        if (!p.basis.empty()) {
            top = &p;
            break;  // pieces are listed k = n..0
        }
    }
    if (top == nullptr) return report;
    report.k = top->k;

    const int tangent_degree = opts.tangent_degree.value_or(x.degree);
    const int tangent_vars = opts.tangent_vars.value_or(ring.nvars());
    if (tangent_vars < 1 || tangent_vars > ring.nvars())
        throw std::invalid_argument("tangent variable count out of range");

    // Tangent basis: standard monomials of the tangent degree supported on the
    // leading tangent_vars variables.
    std::vector<Monomial> tangent;
    for (const auto& m : ring.graded_basis(tangent_degree)) {
        bool in_subring = true;
        for (int v = tangent_vars; v < ring.nvars(); ++v)
            if (m.exponent(v) > 0) in_subring = false;
        if (in_subring) tangent.push_back(m);
    }
    report.tangent_dim = static_cast<int>(tangent.size());

    // Target piece H^{k-1, n-k+1} for the contraction images.
    int image_degree = top->target_degree + tangent_degree;
    std::vector<Monomial> image_basis = ring.graded_basis(image_degree);

    auto star1_rank_for = [&](const Monomial& omega) -> int {
        if (tangent.empty() || image_basis.empty()) return 0;
        Mat images(image_basis.size(), tangent.size());
        for (std::size_t j = 0; j < tangent.size(); ++j) {
            Polynomial prod = ring.multiply_mod(
                Polynomial::monomial(tangent[j], Rational(1), ring.order()),
                Polynomial::monomial(omega, Rational(1), ring.order()));
            auto coords = coordinates(prod, image_basis);
            for (std::size_t i = 0; i < coords.size(); ++i)
                images.at(i, j) = GaussianRational(coords[i]);
        }
        return static_cast<int>(images.rank());
    };

    // (*1): first basis element of the top piece whose contraction map has full rank.
    bool found = false;
    for (const auto& omega : top->basis) {
        int rank = star1_rank_for(omega);
        bool passes = rank == report.tangent_dim && report.tangent_dim > 0;
        if (!found || (passes && !report.star1)) {
            report.omega = omega.str();
            report.star1_rank = rank;
            report.star1 = passes;
            found = true;
        }
        if (passes && !opts.exhaustive_omega) break;
    }

    // (*2): theta_i * theta_j * omega = 0 for every top-piece basis element.
    report.star2 = true;
    for (std::size_t i = 0; i < tangent.size(); ++i) {
        for (std::size_t j = i; j < tangent.size(); ++j) {
            Polynomial pair = ring.multiply_mod(
                Polynomial::monomial(tangent[i], Rational(1), ring.order()),
                Polynomial::monomial(tangent[j], Rational(1), ring.order()));
            if (pair.is_zero()) continue;
            for (const auto& omega : top->basis) {
                Polynomial triple = ring.multiply_mod(
                    pair, Polynomial::monomial(omega, Rational(1), ring.order()));
                if (!triple.is_zero()) {
                    report.star2 = false;
                    report.witnesses.push_back(tangent[i].str() + " * " + tangent[j].str() + " * " +
                                               omega.str() + " = " + triple.str());
                }
            }
        }
    }
    return report;
}

}  // namespace hodgeball
