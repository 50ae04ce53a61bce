#include "hodgeball/period_domain.hpp"

#include <stdexcept>
#include <string>

namespace hodgeball {

Mat BlockShape::block(const Mat& a, int alpha, int beta) const {
    return a.submatrix(offset(alpha), offset(beta), size(alpha), size(beta));
}

Mat BlockShape::leading(const Mat& a, int k) const {
    int dim = offset(k) + size(k);
    return a.submatrix(0, 0, dim, dim);
}

PeriodMatrix::PeriodMatrix(Mat a, BlockShape s) : entries(std::move(a)), shape(std::move(s)) {
    if (static_cast<int>(entries.rows()) != shape.m() ||
        static_cast<int>(entries.cols()) != shape.m())
        throw std::invalid_argument("period matrix size mismatch");
}

NPlusResult nplus_membership(const PeriodMatrix& a) {
    NPlusResult result;
    for (int k = 0; k < a.shape.blocks(); ++k) {
        if (a.shape.leading(a.entries, k).det().is_zero()) {
            result.failing_k = k;
            return result;
        }
    }
    result.member = true;
    return result;
}

BlockLU block_lu(const PeriodMatrix& a) {
    auto membership = nplus_membership(a);
    if (!membership.member)
        throw std::domain_error("no block LU: leading principal block submatrix " +
                                std::to_string(*membership.failing_k) + " is singular");

    const BlockShape& shape = a.shape;
    const int m = shape.m();
    Mat lower = Mat::identity(m);
    Mat upper = a.entries;

    // Block Gaussian elimination without pivoting; each diagonal block of the
    // working matrix is invertible because membership holds.
    for (int k = 0; k + 1 < shape.blocks(); ++k) {
        int r0 = shape.offset(k), sk = shape.size(k);
        if (sk == 0) continue;
        Mat pivot_inv = upper.submatrix(r0, r0, sk, sk).inverse();
        for (int below = k + 1; below < shape.blocks(); ++below) {
            int r1 = shape.offset(below), sb = shape.size(below);
            if (sb == 0) continue;
            Mat factor = upper.submatrix(r1, r0, sb, sk) * pivot_inv;
            if (factor.is_zero()) continue;
            lower.set_submatrix(r1, r0, lower.submatrix(r1, r0, sb, sk) + factor);
            for (int c = r0; c < m; ++c)
                for (int r = 0; r < sb; ++r) {
                    GaussianRational acc;
                    for (int t = 0; t < sk; ++t)
                        acc += factor.at(r, t) * upper.at(r0 + t, c);
                    upper.at(r1 + r, c) -= acc;
                }
        }
    }
    return BlockLU{std::move(lower), std::move(upper)};
}

LocusScan complement_locus_scan(const std::vector<PeriodMatrix>& samples) {
    LocusScan scan;
    scan.total = samples.size();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (nplus_membership(samples[i]).member)
            ++scan.inside;
        else
            scan.failure_indices.push_back(i);
    }
    return scan;
}

bool nplus_rank_oracle(const PeriodMatrix& a) {
    const BlockShape& shape = a.shape;
    for (int k = 0; k < shape.blocks(); ++k) {
        int dim = shape.offset(k) + shape.size(k);
        // Projection of the leading dim columns onto the leading dim coordinates.
        if (static_cast<int>(a.entries.submatrix(0, 0, dim, dim).rank()) != dim) return false;
    }
    return true;
}

std::uint64_t SmallRng::next() {
    // splitmix64; fixed here so sweeps reproduce across platforms.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int SmallRng::range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational SmallRng::small_rational(int max_abs_num, int max_den) {
    return Rational(Int(range(-max_abs_num, max_abs_num)), Int(range(1, max_den)));
}

Mat random_unipotent_block_lower(const BlockShape& shape, SmallRng& rng) {
    Mat out = Mat::identity(shape.m());
    for (int alpha = 0; alpha < shape.blocks(); ++alpha)
        for (int beta = 0; beta < alpha; ++beta)
            for (int r = 0; r < shape.size(alpha); ++r)
                for (int c = 0; c < shape.size(beta); ++c)
                    out.at(shape.offset(alpha) + r, shape.offset(beta) + c) =
                        GaussianRational(rng.small_rational(), rng.small_rational());
    return out;
}

Mat random_invertible_block_upper(const BlockShape& shape, SmallRng& rng) {
    const int m = shape.m();
    for (;;) {
        Mat out(m, m);
        for (int alpha = 0; alpha < shape.blocks(); ++alpha)
            for (int beta = alpha; beta < shape.blocks(); ++beta)
                for (int r = 0; r < shape.size(alpha); ++r)
                    for (int c = 0; c < shape.size(beta); ++c)
                        out.at(shape.offset(alpha) + r, shape.offset(beta) + c) =
                            GaussianRational(rng.small_rational(), rng.small_rational());
        if (!out.det().is_zero()) return out;
    }
}

}  // namespace hodgeball
