#pragma once

#include "hodgeball/hodge_frame.hpp"
#include "hodgeball/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hodgeball {

/// Block tiling of an m x m matrix induced by Hodge numbers: block (alpha, beta)
/// covers rows [f^{n+1-alpha}, f^{n-alpha}) and columns [f^{n+1-beta}, f^{n-beta}).
struct BlockShape {
    HodgeNumbers numbers;

    explicit BlockShape(HodgeNumbers n) : numbers(std::move(n)) {}
    int blocks() const { return numbers.weight + 1; }
    int m() const { return numbers.m(); }
    int offset(int alpha) const { return numbers.block_offset(alpha); }
    int size(int alpha) const { return numbers.block_size(alpha); }

    Mat block(const Mat& a, int alpha, int beta) const;
    /// Leading principal submatrix covering blocks (alpha, beta) with alpha, beta <= k.
    Mat leading(const Mat& a, int k) const;
};

struct PeriodMatrix {
    Mat entries;
    BlockShape shape;

    PeriodMatrix(Mat a, BlockShape s);
};

struct NPlusResult {
    bool member = false;
    /// Least k whose leading principal block submatrix is singular, when not a member.
    std::optional<int> failing_k;
};

/// Phi in N+ . B iff every leading principal block submatrix is nonsingular.
NPlusResult nplus_membership(const PeriodMatrix& a);

struct BlockLU {
    Mat lower;  // unipotent block lower triangular
    Mat upper;  // invertible block upper triangular
};

/// Unique factorization A = L U with L in N+; throws std::domain_error carrying
/// the failing k message when membership fails.
BlockLU block_lu(const PeriodMatrix& a);

struct LocusScan {
    std::size_t total = 0;
    std::size_t inside = 0;
    std::vector<std::size_t> failure_indices;
    double fraction() const { return total == 0 ? 0.0 : static_cast<double>(inside) / total; }
};

LocusScan complement_locus_scan(const std::vector<PeriodMatrix>& samples);

/// Rank-based oracle for N+ membership: the leading f^k columns project
/// isomorphically onto the base filtration for every k.
bool nplus_rank_oracle(const PeriodMatrix& a);

/// Deterministic random matrices for demos and property sweeps.
class SmallRng {
public:
    explicit SmallRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next();
    /// Uniform integer in [lo, hi].
    int range(int lo, int hi);
    Rational small_rational(int max_abs_num = 4, int max_den = 3);

private:
    std::uint64_t state_;
};

Mat random_unipotent_block_lower(const BlockShape& shape, SmallRng& rng);
Mat random_invertible_block_upper(const BlockShape& shape, SmallRng& rng);

}  // namespace hodgeball
