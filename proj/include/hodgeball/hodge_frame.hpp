#pragma once

#include "hodgeball/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace hodgeball {

/// Weight and Hodge numbers (h^{n,0}, ..., h^{0,n}) with the derived partial
/// sums f^i = h^{n,0} + ... + h^{i,n-i}, f^{n+1} = 0, m = f^0.
struct HodgeNumbers {
    int weight = 0;
    std::vector<int> h;

    HodgeNumbers() = default;
    HodgeNumbers(int n, std::vector<int> numbers);

    int m() const;                 // total dimension f^0
    int f(int i) const;            // partial sum, 0 <= i <= weight+1
    /// Dimension of the alpha-th block H^{n-alpha, alpha}.
    int block_size(int alpha) const { return h.at(alpha); }
    /// Row/column offset of the alpha-th block: f^{weight+1-alpha}.
    int block_offset(int alpha) const;

    friend bool operator==(const HodgeNumbers& a, const HodgeNumbers& b) {
        return a.weight == b.weight && a.h == b.h;
    }
};

/// Re-index H^{p,q} -> H^{p+s, q+s}; new weight is n - 2s. Throws if a nonzero
/// Hodge number would fall outside the new range.
HodgeNumbers tate_twist(const HodgeNumbers& numbers, int shift);

struct Polarization {
    int weight = 0;
    Mat Q;  // m x m, symmetric for even weight, skew for odd; nondegenerate

    Polarization() = default;
    Polarization(int n, Mat q);
};

struct HodgeRiemannResult {
    bool hr1 = false;
    bool hr2 = false;
    std::vector<std::string> failures;
    bool pass() const { return hr1 && hr2; }
};

/// Polarized Hodge structure given by an adapted basis: column block alpha of
/// `basis` spans H^{n-alpha, alpha}.
class HodgeFrame {
public:
    HodgeFrame(HodgeNumbers numbers, Polarization q, Mat adapted_basis);

    const HodgeNumbers& numbers() const { return numbers_; }
    const Polarization& polarization() const { return q_; }
    const Mat& basis() const { return basis_; }
    int weight() const { return numbers_.weight; }
    int m() const { return numbers_.m(); }

    /// Columns spanning H^{n-alpha, alpha}.
    Mat block_basis(int alpha) const;
    /// Columns spanning F^k = H^{n,0} + ... + H^{k,n-k}.
    Mat filtration_basis(int k) const;

    /// Conjugate-symmetry H^{i,n-i} = conj(H^{n-i,i}) as span equality.
    bool conjugate_symmetric() const;

    /// Hermitian matrix of the HR2 form h(u,v) = i^{2k-n} Q(u, conj v) on block alpha,
    /// in that block's basis (k = n - alpha).
    Mat hr2_form(int alpha) const;

private:
    HodgeNumbers numbers_;
    Polarization q_;
    Mat basis_;
};

/// Build the decomposition from filtration bases F^n subset ... subset F^0.
/// `filtration[k]` holds a basis of F^k as columns; dim F^k must equal f^k.
HodgeFrame filtration_to_decomposition(const std::vector<Mat>& filtration, const Polarization& q);

/// HR1 as exact block orthogonality, HR2 by exact leading-principal-minor signs.
HodgeRiemannResult hodge_riemann_check(const HodgeFrame& frame);

/// Endomorphism split by block offset: component k maps block beta to block beta - k
/// (i.e. H^{r,n-r} -> H^{r+k, n-r-k}). Components are in adapted-basis coordinates.
struct GradedEndomorphism {
    std::map<int, Mat> components;
    Mat reconstruct(int m) const;
};

GradedEndomorphism lie_grade(const Mat& a, const HodgeFrame& frame);

/// True iff A^T Q + Q A = 0.
bool infinitesimal_isometry_check(const Mat& a, const Mat& q);

/// Exact positive-definiteness of a Hermitian Gaussian-rational matrix via
/// leading principal minors: every minor must be real and > 0.
bool positive_definite_hermitian(const Mat& h);

}  // namespace hodgeball
