#include "hodgeball/formal_vhs.hpp"

#include <stdexcept>
#include <string>

namespace hodgeball {

namespace {

BlockSeries series_block(const BlockSeries& phi, const HodgeNumbers& numbers, int alpha, int beta) {
    return phi.submatrix(numbers.block_offset(alpha), numbers.block_offset(beta),
                         numbers.block_size(alpha), numbers.block_size(beta));
}

Mat base_section_vector(const HodgeNumbers& numbers, int k) {
    Mat v(numbers.m(), 1);
    v.at(numbers.block_offset(numbers.weight - k), 0) = GaussianRational(1);
    return v;
}

}  // namespace

HorizontalData make_horizontal(HodgeNumbers numbers, Mat q, std::vector<Mat> ops) {
    HorizontalData data;
    data.numbers = std::move(numbers);
    data.q = std::move(q);
    data.ops = std::move(ops);

    const int m = data.numbers.m();
    for (const auto& op : data.ops)
        if (static_cast<int>(op.rows()) != m || static_cast<int>(op.cols()) != m)
            throw std::invalid_argument("operator size mismatch");
    if (static_cast<int>(data.q.rows()) != m || static_cast<int>(data.q.cols()) != m)
        throw std::invalid_argument("polarization size mismatch");

    data.commuting = true;
    for (std::size_t i = 0; i < data.ops.size() && data.commuting; ++i)
        for (std::size_t j = i + 1; j < data.ops.size(); ++j)
            if (data.ops[i] * data.ops[j] != data.ops[j] * data.ops[i]) {
                data.commuting = false;
                data.violation = "operators " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " do not commute";
                break;
            }

    data.grade_minus_one = true;
    const int n = data.numbers.weight;
    for (std::size_t idx = 0; idx < data.ops.size() && data.grade_minus_one; ++idx)
        for (int alpha = 0; alpha <= n && data.grade_minus_one; ++alpha)
            for (int beta = 0; beta <= n; ++beta) {
                if (alpha == beta + 1) continue;
                Mat block = data.ops[idx].submatrix(
                    data.numbers.block_offset(alpha), data.numbers.block_offset(beta),
                    data.numbers.block_size(alpha), data.numbers.block_size(beta));
                if (!block.is_zero()) {
                    data.grade_minus_one = false;
                    if (data.violation.empty())
                        data.violation = "operator " + std::to_string(idx + 1) +
                                         " is not of pure grade -1 (block (" +
                                         std::to_string(alpha) + "," + std::to_string(beta) + "))";
                    break;
                }
            }

    data.isometry = true;
    for (std::size_t idx = 0; idx < data.ops.size(); ++idx)
        if (!infinitesimal_isometry_check(data.ops[idx], data.q)) {
            data.isometry = false;
            if (data.violation.empty())
                data.violation =
                    "operator " + std::to_string(idx + 1) + " is not an infinitesimal isometry";
            break;
        }
    return data;
}

BlockSeries nilpotent_orbit(const HorizontalData& data, int order) {
    if (!data.valid()) throw std::invalid_argument("invalid horizontal data: " + data.violation);
    return exp_linear(data.ops, order);
}

TransversalityReport check_transversality(const BlockSeries& phi, const HodgeNumbers& numbers) {
    TransversalityReport report;
    const int n = numbers.weight;
    const int check_order = phi.order() - 1;
    for (int alpha = 1; alpha <= n; ++alpha) {
        for (int beta = 0; beta < alpha; ++beta) {
            BlockSeries lhs_base = series_block(phi, numbers, alpha, beta);
            BlockSeries upper = series_block(phi, numbers, alpha, beta + 1);
            BlockSeries lower = series_block(phi, numbers, beta + 1, beta);
            for (int mu = 0; mu < phi.nvars(); ++mu) {
                BlockSeries diff = (lhs_base.derivative(mu) - upper * lower.derivative(mu))
                                       .truncated(check_order);
                if (diff.is_zero()) continue;
                report.pass = false;
                TransversalityWitness w;
                w.alpha = alpha;
                w.beta = beta;
                w.mu = mu;
                w.index = diff.coeffs().begin()->first;  // map order = lexicographic
                report.detail = "recursion fails at block (" + std::to_string(alpha) + "," +
                                std::to_string(beta) + "), d/dz" + std::to_string(mu + 1) +
                                ", monomial " + multiindex_key(w.index);
                report.witness = std::move(w);
                return report;
            }
        }
    }
    return report;
}

OrderBoundReport check_order_bounds(const BlockSeries& phi, const HodgeNumbers& numbers) {
    OrderBoundReport report;
    const int n = numbers.weight;
    for (int alpha = 1; alpha <= n; ++alpha) {
        for (int beta = 0; beta < alpha; ++beta) {
            BlockSeries block = series_block(phi, numbers, alpha, beta);
            for (const auto& [e, c] : block.coeffs()) {
                if (multiindex_degree(e) >= alpha - beta || c.is_zero()) continue;
                report.pass = false;
                report.alpha = alpha;
                report.beta = beta;
                report.index = e;
                return report;
            }
        }
    }
    return report;
}

CanonicalCoordinates canonical_coordinates(const BlockSeries& phi, const HodgeNumbers& numbers,
                                           int k) {
    const int n = numbers.weight;
    if (k < 1 || k > n || numbers.block_size(n - k) != 1)
        throw std::domain_error("not CY-type shape");
    CanonicalCoordinates out;
    out.coords = series_block(phi, numbers, n - k + 1, n - k);
    const int rows = numbers.block_size(n - k + 1);
    out.jacobian = Mat(rows, phi.nvars());
    for (int mu = 0; mu < phi.nvars(); ++mu) {
        MultiIndex e(phi.nvars(), 0);
        e[mu] = 1;
        Mat col = out.coords.coeff(e);
        for (int r = 0; r < rows; ++r) out.jacobian.at(r, mu) = col.at(r, 0);
    }
    out.invertible = rows == phi.nvars() && !out.jacobian.det().is_zero();
    return out;
}

SectionExpansion section_expansion(const HorizontalData& data, int k, int order) {
    const HodgeNumbers& numbers = data.numbers;
    const int n = numbers.weight;
    BlockSeries phi = nilpotent_orbit(data, order);
    CanonicalCoordinates cc = canonical_coordinates(phi, numbers, k);
    if (!cc.invertible) throw std::domain_error("canonical coordinates not invertible");

    BlockSeries z_of_w = invert_coordinates(cc.coords);
    BlockSeries column = phi.submatrix(0, numbers.block_offset(n - k), numbers.m(), 1);

    SectionExpansion out;
    out.omega = compose(column, z_of_w);

    // Rebased operators: canonical coordinates absorb the degree-1 Jacobian.
    Mat a_inv = cc.jacobian.inverse();
    const int nvars = data.nvars();
    std::vector<Mat> rebased(nvars, Mat(numbers.m(), numbers.m()));
    for (int j = 0; j < nvars; ++j)
        for (int l = 0; l < nvars; ++l) rebased[j] += a_inv.at(l, j) * data.ops[l];

    Mat omega0 = base_section_vector(numbers, k);
    out.degree2_matches_products = true;
    out.degree2_in_level = true;
    for (int i = 0; i < nvars; ++i) {
        for (int j = i; j < nvars; ++j) {
            MultiIndex e(nvars, 0);
            ++e[i];
            ++e[j];
            Mat expected = rebased[i] * (rebased[j] * omega0);
            if (i == j) expected = GaussianRational(Rational(Int(1), Int(2))) * expected;
            Mat actual = out.omega.coeff(e);
            if (actual != expected) out.degree2_matches_products = false;
            // Support must sit inside level n-k+2, or vanish if that level is absent.
            int level = n - k + 2;
            for (int r = 0; r < numbers.m(); ++r) {
                if (actual.at(r, 0).is_zero()) continue;
                bool in_level = level <= n && r >= numbers.block_offset(level) &&
                                r < numbers.block_offset(level) + numbers.block_size(level);
                if (!in_level) out.degree2_in_level = false;
            }
        }
    }
    return out;
}

BallTypeOrbitReport ball_type_verify(const HorizontalData& data, int k, int order) {
    BallTypeOrbitReport report;
    const HodgeNumbers& numbers = data.numbers;
    const int n = numbers.weight;
    const int nvars = data.nvars();
    if (k < 1 || k > n || numbers.block_size(n - k) != 1)
        throw std::domain_error("not CY-type shape");

    Mat omega0 = base_section_vector(numbers, k);
    Mat images(numbers.m(), nvars);
    for (int i = 0; i < nvars; ++i) {
        Mat v = data.ops[i] * omega0;
        for (int r = 0; r < numbers.m(); ++r) images.at(r, i) = v.at(r, 0);
    }
    report.star1 = nvars > 0 && static_cast<int>(images.rank()) == nvars;

    report.star2 = true;
    int top_off = numbers.block_offset(n - k);
    for (int i = 0; i < nvars; ++i)
        for (int j = i; j < nvars; ++j)
            for (int c = 0; c < numbers.block_size(n - k); ++c) {
                Mat v(numbers.m(), 1);
                v.at(top_off + c, 0) = GaussianRational(1);
                if (!(data.ops[i] * (data.ops[j] * v)).is_zero()) {
                    report.star2 = false;
                    if (!report.witness_pair) report.witness_pair = {i + 1, j + 1};
                }
            }

    try {
        SectionExpansion section = section_expansion(data, k, order);
        report.linear_expansion = true;
        for (const auto& [e, c] : section.omega.coeffs())
            if (multiindex_degree(e) >= 2 && !c.is_zero()) report.linear_expansion = false;

        // Level-(n-k+1) rows must read off the canonical coordinates exactly.
        report.level1_constant = true;
        BlockSeries level1 = section.omega.submatrix(numbers.block_offset(n - k + 1), 0,
                                                     numbers.block_size(n - k + 1), 1);
        for (const auto& [e, c] : level1.coeffs()) {
            int deg = multiindex_degree(e);
            if (deg == 0) {
                if (!c.is_zero()) report.level1_constant = false;
                continue;
            }
            if (deg >= 2) {
                if (!c.is_zero()) report.level1_constant = false;
                continue;
            }
            int mu = 0;
            while (e[mu] == 0) ++mu;
            for (int r = 0; r < static_cast<int>(c.rows()); ++r)
                if (c.at(r, 0) != (r == mu ? GaussianRational(1) : GaussianRational(0)))
                    report.level1_constant = false;
        }
    } catch (const std::domain_error&) {
        report.linear_expansion = false;
        report.level1_constant = false;
    }
    return report;
}

RefinedPoint refined_period(const Mat& column, const HodgeNumbers& numbers, int k) {
    const int n = numbers.weight;
    if (static_cast<int>(column.rows()) != numbers.m() || column.cols() != 1)
        throw std::invalid_argument("section column shape mismatch");
    if (k < 1 || k > n || numbers.block_size(n - k) != 1)
        throw std::domain_error("not CY-type shape");

    int top = numbers.block_offset(n - k);
    int lvl1 = numbers.block_offset(n - k + 1);
    int lvl1_size = numbers.block_size(n - k + 1);

    RefinedPoint point;
    for (int r = 0; r < numbers.m(); ++r) {
        const GaussianRational& v = column.at(r, 0);
        if (r == top) {
            if (v != GaussianRational(1)) throw std::domain_error("not ball type at this point");
        } else if (r >= lvl1 && r < lvl1 + lvl1_size) {
            point.values.push_back(v);
        } else if (!v.is_zero()) {
            throw std::domain_error("not ball type at this point");
        }
    }
    return point;
}

Rational refined_hr2_value(const RefinedPoint& p) {
    // diag(+1, -1, ..., -1) applied to (1, P_1, ..., P_N).
    Rational sum(1);
    for (const auto& v : p.values) sum -= v.norm();
    return sum;
}

bool ball_membership(const RefinedPoint& p) { return refined_hr2_value(p).sign() > 0; }

namespace {

Mat random_invertible(int n, SmallRng& rng) {
    for (;;) {
        Mat a(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a.at(r, c) = GaussianRational(rng.small_rational());
        if (!a.det().is_zero()) return a;
    }
}

/// Weight-3 frame with h = (1, n, n, 1) from level maps a_i (level 0 -> 1),
/// B_i (1 -> 2), c_i = -a_i^T M / s0 (2 -> 3) and the skew pairing with blocks
/// S_{03} = s0, S_{12} = M. The c_i are forced by the isometry condition.
HorizontalData assemble_weight3(const std::vector<Mat>& a_cols, const std::vector<Mat>& b_ops,
                                const Mat& pairing_m, const Rational& s0, int n) {
    int m = 2 * n + 2;
    int off1 = 1, off2 = 1 + n, off3 = 1 + 2 * n;

    Mat q(m, m);
    q.at(0, off3) = GaussianRational(s0);
    q.at(off3, 0) = GaussianRational(-s0);
    q.set_submatrix(off1, off2, pairing_m);
    q.set_submatrix(off2, off1, -pairing_m.transpose());

    std::vector<Mat> ops;
    GaussianRational s0_inv = GaussianRational(s0).inverse();
    for (int i = 0; i < n; ++i) {
        Mat op(m, m);
        op.set_submatrix(off1, 0, a_cols[i]);
        op.set_submatrix(off2, off1, b_ops[i]);
        Mat c = (-s0_inv) * (a_cols[i].transpose() * pairing_m);
        op.set_submatrix(off3, off2, c);
        ops.push_back(std::move(op));
    }
    return make_horizontal(HodgeNumbers(3, {1, n, n, 1}), std::move(q), std::move(ops));
}

}  // namespace

HorizontalData random_ball_type_data(std::uint64_t seed, int n) {
    SmallRng rng(seed);
    Mat a = random_invertible(n, rng);
    Mat pairing_m = random_invertible(n, rng);
    Rational s0(rng.range(0, 1) ? rng.range(1, 3) : -rng.range(1, 3));

    std::vector<Mat> a_cols, b_ops;
    for (int i = 0; i < n; ++i) {
        a_cols.push_back(a.submatrix(0, i, n, 1));
        b_ops.push_back(Mat(n, n));  // vanishing middle maps make N_i N_j = 0
    }
    return assemble_weight3(a_cols, b_ops, pairing_m, s0, n);
}

HorizontalData random_cy_data(std::uint64_t seed, int n) {
    SmallRng rng(seed);
    // Symmetric 3-tensor t; B_i slice (B_i)_{lj} = t_{ijl}.
    std::vector<std::vector<std::vector<Rational>>> t(
        n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int l = j; l < n; ++l) {
                Rational v(rng.range(-2, 2));
                if (!v.is_zero()) nonzero = true;
                t[i][j][l] = t[i][l][j] = t[j][i][l] = t[j][l][i] = t[l][i][j] = t[l][j][i] = v;
            }
    if (!nonzero) t[0][0][0] = Rational(1);

    std::vector<Mat> a_cols, b_ops;
    for (int i = 0; i < n; ++i) {
        Mat e(n, 1);
        e.at(i, 0) = GaussianRational(1);
        a_cols.push_back(std::move(e));
        Mat b(n, n);
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < n; ++j) b.at(l, j) = GaussianRational(t[i][j][l]);
        b_ops.push_back(std::move(b));
    }
    return assemble_weight3(a_cols, b_ops, Mat::identity(n), Rational(1), n);
}

}  // namespace hodgeball
