#include "hodgeball/hodge_frame.hpp"

#include <numeric>
#include <stdexcept>

namespace hodgeball {

HodgeNumbers::HodgeNumbers(int n, std::vector<int> numbers) : weight(n), h(std::move(numbers)) {
    if (weight < 0) throw std::invalid_argument("negative weight");
    if (static_cast<int>(h.size()) != weight + 1)
        throw std::invalid_argument("need weight+1 Hodge numbers");
    for (int v : h)
        if (v < 0) throw std::invalid_argument("negative Hodge number");
}

int HodgeNumbers::m() const { return std::accumulate(h.begin(), h.end(), 0); }

int HodgeNumbers::f(int i) const {
    if (i < 0 || i > weight + 1) throw std::out_of_range("filtration index");
    // f^i = h^{n,0} + ... + h^{i,n-i}; block alpha holds h^{n-alpha,alpha}.
    int sum = 0;
    for (int p = weight; p >= i; --p) sum += h[weight - p];
    return sum;
}

int HodgeNumbers::block_offset(int alpha) const { return f(weight + 1 - alpha) ; }

HodgeNumbers tate_twist(const HodgeNumbers& numbers, int shift) {
    int new_weight = numbers.weight - 2 * shift;
    if (new_weight < 0) throw std::domain_error("twist truncates support");
    // New h'^{p,q} = h^{p+shift, q+shift}: drop `shift` entries at each end.
    std::vector<int> out;
    for (int alpha = 0; alpha <= numbers.weight; ++alpha) {
        int p = numbers.weight - alpha;
        int new_p = p - shift;
        if (new_p < 0 || new_p > new_weight) {
            if (numbers.h[alpha] != 0) throw std::domain_error("twist truncates support");
        } else {
            out.push_back(numbers.h[alpha]);
        }
    }
    if (static_cast<int>(out.size()) != new_weight + 1) throw std::domain_error("twist truncates support");
    return HodgeNumbers(new_weight, std::move(out));
}

Polarization::Polarization(int n, Mat q) : weight(n), Q(std::move(q)) {
    if (!Q.is_square()) throw std::invalid_argument("polarization not square");
    Mat qt = Q.transpose();
    bool even = weight % 2 == 0;
    if (even ? (qt != Q) : (qt != -Q))
        throw std::invalid_argument(even ? "polarization must be symmetric"
                                         : "polarization must be skew-symmetric");
    if (Q.det().is_zero()) throw std::invalid_argument("degenerate polarization");
}

HodgeFrame::HodgeFrame(HodgeNumbers numbers, Polarization q, Mat adapted_basis)
    : numbers_(std::move(numbers)), q_(std::move(q)), basis_(std::move(adapted_basis)) {
    int m = numbers_.m();
    if (q_.weight != numbers_.weight) throw std::invalid_argument("weight mismatch");
    if (static_cast<int>(basis_.rows()) != m || static_cast<int>(basis_.cols()) != m)
        throw std::invalid_argument("adapted basis shape mismatch");
    if (static_cast<int>(q_.Q.rows()) != m) throw std::invalid_argument("polarization size mismatch");
    if (basis_.det().is_zero()) throw std::invalid_argument("adapted basis singular");
}

Mat HodgeFrame::block_basis(int alpha) const {
    return basis_.submatrix(0, numbers_.block_offset(alpha), m(), numbers_.block_size(alpha));
}

Mat HodgeFrame::filtration_basis(int k) const {
    // F^k collects blocks alpha = 0 .. weight-k, i.e. the leading f^k columns.
    return basis_.submatrix(0, 0, m(), numbers_.f(k));
}

bool HodgeFrame::conjugate_symmetric() const {
    for (int alpha = 0; alpha <= numbers_.weight; ++alpha) {
        int beta = numbers_.weight - alpha;
        if (!same_column_span(block_basis(alpha).conj(), block_basis(beta))) return false;
    }
    return true;
}

Mat HodgeFrame::hr2_form(int alpha) const {
    int k = numbers_.weight - alpha;
    GaussianRational w = weil_factor(k, numbers_.weight);
    Mat b = block_basis(alpha);
    return w * (b.transpose() * q_.Q * b.conj());
}

HodgeFrame filtration_to_decomposition(const std::vector<Mat>& filtration, const Polarization& q) {
    const int n = q.weight;
    if (static_cast<int>(filtration.size()) != n + 1)
        throw std::invalid_argument("need filtration bases F^0..F^n");
    const int m = static_cast<int>(q.Q.rows());

    std::vector<int> h(n + 1, 0);
    for (int alpha = 0; alpha <= n; ++alpha) {
        int p = n - alpha;
        int dim_fp = static_cast<int>(filtration[p].cols());
        int dim_fp1 = p + 1 <= n ? static_cast<int>(filtration[p + 1].cols()) : 0;
        h[alpha] = dim_fp - dim_fp1;
        if (h[alpha] < 0) throw std::invalid_argument("filtration dimensions not nested");
    }
    HodgeNumbers numbers(n, h);
    if (numbers.m() != m) throw std::invalid_argument("filtration does not fill the space");

    // Transversality: H = F^i (+) conj(F^{n-i+1}) for 0 <= i <= n.
    for (int i = 0; i <= n; ++i) {
        int ci = n - i + 1;
        Mat other = ci <= n ? filtration[ci].conj() : Mat(m, 0);
        if (static_cast<int>(filtration[i].cols() + other.cols()) != m ||
            static_cast<int>(Mat::hcat(filtration[i], other).rank()) != m)
            throw std::domain_error("not a Hodge filtration");
    }

    Mat basis(m, m);
    int col = 0;
    for (int alpha = 0; alpha <= n; ++alpha) {
        int p = n - alpha;
        // H^{p,q} = F^p intersect conj(F^q).
        Mat piece = q.weight == 0 && n == 0
                        ? filtration[0]
                        : column_span_intersection(filtration[p], filtration[n - p].conj());
        if (static_cast<int>(piece.cols()) != h[alpha])
            throw std::domain_error("not a Hodge filtration");
        basis.set_submatrix(0, col, piece);
        col += h[alpha];
    }
    return HodgeFrame(std::move(numbers), q, std::move(basis));
}

bool positive_definite_hermitian(const Mat& h) {
    if (h != h.conj_transpose()) return false;
    for (std::size_t k = 1; k <= h.rows(); ++k) {
        GaussianRational minor = h.submatrix(0, 0, k, k).det();
        if (!minor.is_real() || minor.re().sign() <= 0) return false;
    }
    return true;
}

HodgeRiemannResult hodge_riemann_check(const HodgeFrame& frame) {
    HodgeRiemannResult result;
    const auto& numbers = frame.numbers();
    const int n = numbers.weight;

    result.hr1 = true;
    for (int alpha = 0; alpha <= n; ++alpha) {
        for (int beta = 0; beta <= n; ++beta) {
            if (alpha + beta == n) continue;  // the only allowed pairing
            Mat pairing = frame.block_basis(alpha).transpose() * frame.polarization().Q *
                          frame.block_basis(beta);
            if (!pairing.is_zero()) {
                result.hr1 = false;
                result.failures.push_back("HR1 fails on blocks (" + std::to_string(alpha) + "," +
                                          std::to_string(beta) + ")");
            }
        }
    }

    result.hr2 = true;
    for (int alpha = 0; alpha <= n; ++alpha) {
        if (numbers.block_size(alpha) == 0) continue;
        if (!positive_definite_hermitian(frame.hr2_form(alpha))) {
            result.hr2 = false;
            result.failures.push_back("HR2 fails on block " + std::to_string(alpha));
        }
    }
    return result;
}

Mat GradedEndomorphism::reconstruct(int m) const {
    Mat sum(m, m);
    for (const auto& [k, c] : components) sum += c;
    return sum;
}

GradedEndomorphism lie_grade(const Mat& a, const HodgeFrame& frame) {
    const auto& numbers = frame.numbers();
    const int n = numbers.weight;
    Mat p_inv = frame.basis().inverse();
    Mat ad = p_inv * a * frame.basis();

    GradedEndomorphism graded;
    for (int alpha = 0; alpha <= n; ++alpha) {
        for (int beta = 0; beta <= n; ++beta) {
            Mat block = ad.submatrix(numbers.block_offset(alpha), numbers.block_offset(beta),
                                     numbers.block_size(alpha), numbers.block_size(beta));
            if (block.is_zero()) continue;
            int k = beta - alpha;  // maps H^{n-beta,beta} into H^{n-beta+k, beta-k}
            auto [it, inserted] = graded.components.try_emplace(k, Mat(numbers.m(), numbers.m()));
            it->second.set_submatrix(numbers.block_offset(alpha), numbers.block_offset(beta), block);
        }
    }
    return graded;
}

bool infinitesimal_isometry_check(const Mat& a, const Mat& q) {
    return (a.transpose() * q + q * a).is_zero();
}

}  // namespace hodgeball
