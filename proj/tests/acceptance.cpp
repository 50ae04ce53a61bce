// Acceptance gate: one pass/fail line per criterion, exact arithmetic throughout.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "hodgeball/cli.hpp"
#include "hodgeball/eigen.hpp"
#include "hodgeball/formal_vhs.hpp"
#include "hodgeball/json_io.hpp"
#include "hodgeball/residue.hpp"

#include <doctest.h>

#include <chrono>
#include <iostream>
#include <sstream>

using namespace hodgeball;
using nlohmann::json;

namespace {

// Accumulates a verdict while still reporting each clause through doctest.
#define ACC(expr)                \
    do {                         \
        bool acc_value = (expr); \
        CHECK(acc_value);        \
        ok &= acc_value;         \
    } while (0)

void verdict(int criterion, const std::string& name, bool ok) {
    std::cout << "criterion " << (criterion < 10 ? "0" : "") << criterion << " " << name << ": "
              << (ok ? "PASS" : "FAIL") << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json run_json(const std::vector<std::string>& args, int expected_code) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    REQUIRE(code == expected_code);
    return json::parse(out.str());
}

Polynomial fermat(int nvars, int degree) {
    Polynomial f(nvars);
    for (int v = 0; v < nvars; ++v)
        f += Polynomial::monomial(Monomial::variable(nvars, v, degree), Rational(1));
    return f;
}

int piece_dim(const json& report, int k) {
    for (const auto& row : report["pieces"])
        if (row["k"] == k) return row["h"].get<int>();
    return -1;
}

// Independent oracle: coefficient of t^target in prod (1 + t + ... + t^(e-1)).
long long product_coefficient(const std::vector<int>& exps, int target) {
    std::vector<long long> coeffs{1};
    for (int e : exps) {
        std::vector<long long> next(coeffs.size() + e - 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (int j = 0; j < e; ++j) next[i + j] += coeffs[i];
        coeffs = std::move(next);
    }
    return target < static_cast<int>(coeffs.size()) ? coeffs[target] : 0;
}

}  // namespace

TEST_CASE("criterion 1: cubic surface cover") {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    json report = run_json({"jacobian", "--poly", "x0^3+x1^3+x2^3+x3^3+x4^3", "--dim", "3",
                            "--tangent-degree", "3", "--vars", "4", "--report", "json"},
                           0);
    ACC(piece_dim(report, 2) == 5);   // h^{2,1}
    ACC(piece_dim(report, 1) == 5);   // h^{1,2}
    ACC(report["tangent_dim"] == 4);  // R^3 of the base variables
    ACC(seconds_since(start) < 1.0);
    verdict(1, "cubic-surface-cover", ok);
}

TEST_CASE("criterion 2: cubic threefold cover") {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();

    GradedQuotientRing base = jacobian_ring(Hypersurface(3, fermat(5, 3)));
    ACC(base.graded_dim(3) == 10);  // R^3

    Hypersurface cover = cyclic_cover(Hypersurface(3, fermat(5, 3)), 3);
    GradedQuotientRing covered = jacobian_ring(cover);
    ACC(covered.graded_dim(3) == 20);  // R~^3
    ACC(covered.graded_dim(0) == 1);
    ACC(covered.graded_dim(6) == 1);

    json report = run_json({"balltype", "--poly", "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", "--dim", "4",
                            "--tangent-degree", "3", "--vars", "5", "--report", "json"},
                           0);
    ACC(report["star1_rank"] == 10);
    ACC(report["star1"] == true);
    ACC(report["star2"] == true);
    ACC(report["witnesses"].empty());
    // All 55 unordered tangent products vanish in the quotient.
    BallTypeOptions opts;
    opts.tangent_degree = 3;
    opts.tangent_vars = 5;
    BallTypeReport direct = ball_type_check(cover, opts);
    ACC(direct.tangent_dim == 10);  // 55 = 10 choose 2 + 10 pairs swept
    ACC(direct.star2);
    ACC(seconds_since(start) < 2.0);
    verdict(2, "cubic-threefold-cover", ok);
}

TEST_CASE("criterion 3: quartic K3 negative control") {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    BallTypeReport report = ball_type_check(Hypersurface(2, fermat(4, 4)));
    ACC(!report.star2);
    bool witness = false;
    for (const auto& w : report.witnesses)
        if (w == "x0*x1*x2*x3 * x0*x1*x2*x3 * 1 = x0^2*x1^2*x2^2*x3^2") witness = true;
    ACC(witness);
    ACC(seconds_since(start) < 1.0);
    verdict(3, "quartic-k3-negative-control", ok);
}

TEST_CASE("criterion 4: quintic threefold against the generating-function oracle") {
    bool ok = true;
    GradedQuotientRing ring = jacobian_ring(Hypersurface(3, fermat(5, 5)));
    long long oracle = product_coefficient({4, 4, 4, 4, 4}, 5);  // (1+t+t^2+t^3)^5 at t^5
    ACC(oracle == 101);
    ACC(static_cast<long long>(ring.graded_dim(5)) == oracle);
    verdict(4, "quintic-threefold-oracle", ok);
}

TEST_CASE("criterion 5: block LU round-trips and the rank oracle") {
    bool ok = true;
    BlockShape shape(HodgeNumbers(3, {1, 4, 4, 1}));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        SmallRng rng(seed);
        Mat l = random_unipotent_block_lower(shape, rng);
        Mat u = random_invertible_block_upper(shape, rng);
        PeriodMatrix a(l * u, shape);

        bool member = nplus_membership(a).member;
        ok &= member;
        ok &= nplus_rank_oracle(a) == member;

        BlockLU lu = block_lu(a);
        ok &= lu.lower * lu.upper == a.entries;
        ok &= lu.lower == l && lu.upper == u;

        Mat u2 = random_invertible_block_upper(shape, rng);
        BlockLU lu2 = block_lu(PeriodMatrix(a.entries * u2, shape));
        ok &= lu2.lower == l;  // uniqueness of the unipotent factor
        ok &= lu2.upper == u * u2;
    }
    CHECK(ok);
    verdict(5, "block-lu", ok);
}

TEST_CASE("criterion 6: transversality equivalence at desk scale") {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        HorizontalData data = random_cy_data(seed, 3);  // h = (1,3,3,1)
        ok &= data.valid();
        ok &= check_transversality(nilpotent_orbit(data, 5), data.numbers).pass;
    }
    CHECK(ok);

    // Non-commuting counterexample: failure at block (2,0) with the 1/2 coefficient.
    Mat e21(3, 3), e32(3, 3);
    e21.at(1, 0) = GaussianRational(1);
    e32.at(2, 1) = GaussianRational(1);
    BlockSeries phi = exp_linear({e21, e32}, 4);
    HodgeNumbers numbers(2, {1, 1, 1});
    ACC(phi.coeff({1, 1}).at(2, 0) == GaussianRational(Rational(Int(1), Int(2))));
    TransversalityReport report = check_transversality(phi, numbers);
    ACC(!report.pass);
    ACC(report.witness && report.witness->alpha == 2 && report.witness->beta == 0);
    verdict(6, "transversality", ok);
}

TEST_CASE("criterion 7: order bounds") {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        HorizontalData data = random_cy_data(seed, 3);
        ok &= check_order_bounds(nilpotent_orbit(data, 5), data.numbers).pass;
    }
    CHECK(ok);

    HodgeNumbers numbers(2, {1, 1, 1});
    BlockSeries bad = BlockSeries::constant(2, 4, Mat::identity(3));
    Mat c(3, 3);
    c.at(2, 0) = GaussianRational(1);  // degree-1 term in block (2,0)
    bad.set_coeff({1, 0}, c);
    OrderBoundReport report = check_order_bounds(bad, numbers);
    ACC(!report.pass);
    ACC(report.alpha == 2 && report.beta == 0);
    verdict(7, "order-bounds", ok);
}

TEST_CASE("criterion 8: linear-expansion theorem") {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        HorizontalData data = random_ball_type_data(seed, 4);  // h = (1,4,4,1)
        BallTypeOrbitReport report = ball_type_verify(data, 3, 6);
        ok &= report.star1 && report.star2;
        ok &= report.linear_expansion;  // every degree >= 2 coefficient vanishes up to T = 6
        ok &= report.level1_constant;
    }
    CHECK(ok);

    bool cy_ok = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        HorizontalData data = random_cy_data(seed, 4);
        SectionExpansion section = section_expansion(data, 3, 6);
        cy_ok &= section.degree2_matches_products;  // = N_i N_j Omega_0 exactly
        cy_ok &= section.degree2_in_level;
        bool some_nonzero = false;
        for (const auto& [e, coeff] : section.omega.coeffs())
            if (multiindex_degree(e) == 2 && !coeff.is_zero()) some_nonzero = true;
        cy_ok &= some_nonzero;  // non-ball: the quadratic term is really there
    }
    CHECK(cy_ok);
    ok &= cy_ok;
    verdict(8, "linear-expansion", ok);
}

TEST_CASE("criterion 9: ball containment against the Hodge-Riemann sign") {
    bool ok = true;
    HorizontalData data = random_ball_type_data(17, 3);
    SectionExpansion section = section_expansion(data, 3, 5);

    SmallRng rng(99);
    int inside_count = 0, outside_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GaussianRational> w;
        for (int i = 0; i < 3; ++i)
            w.emplace_back(rng.small_rational(3, 4), rng.small_rational(3, 4));
        if (trial % 2 == 0) {
            // Pull even trials into the ball: sum . (1+sum)^-2 < 1 exactly.
            Rational raw;
            for (const auto& v : w) raw += v.norm();
            GaussianRational shrink(Rational(1) / (Rational(1) + raw));
            for (auto& v : w) v = v * shrink;
        }
        RefinedPoint p = refined_period(section.omega.evaluate(w), data.numbers, 3);

        // Independent membership: sum of squared moduli against 1, exactly.
        Rational sum;
        for (const auto& v : p.values) sum += v.norm();
        bool inside = sum < Rational(1);
        (inside ? inside_count : outside_count)++;

        Rational hr2 = refined_hr2_value(p);
        ok &= (hr2.sign() > 0) == inside;
        ok &= ball_membership(p) == inside;
        ok &= hr2 == Rational(1) - sum;
    }
    CHECK(ok);
    ACC(inside_count > 0);
    ACC(outside_count > 0);
    verdict(9, "ball-containment", ok);
}

TEST_CASE("criterion 10: nondegeneracy of the refined period") {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        HorizontalData data = random_ball_type_data(seed, 4);
        BlockSeries phi = nilpotent_orbit(data, 6);
        CanonicalCoordinates cc = canonical_coordinates(phi, data.numbers, 3);
        ok &= ball_type_verify(data, 3, 3).star1;
        ok &= static_cast<int>(cc.jacobian.rank()) == 4;
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        HorizontalData data = random_cy_data(seed, 4);
        BlockSeries phi = nilpotent_orbit(data, 6);
        CanonicalCoordinates cc = canonical_coordinates(phi, data.numbers, 3);
        ok &= ball_type_verify(data, 3, 3).star1;
        ok &= static_cast<int>(cc.jacobian.rank()) == 4;
    }
    CHECK(ok);
    verdict(10, "refined-period-nondegeneracy", ok);
}

TEST_CASE("criterion 11: Deligne-Mostow identities") {
    bool ok = true;
    for (int m = 3; m <= 14; ++m) {
        for (int n = 1; n + 2 <= m; ++n) {
            for (int mu_sum = 1; mu_sum <= m - 1; ++mu_sum) {
                Int total(0);
                for (int p = 0; p <= n; ++p) total += dm_hodge_numbers(m, n, mu_sum, p, n - p);
                ok &= total == dm_total_dim(m, n);
            }
            ok &= dm_hodge_numbers(m, n, n + 1, n, 0) == Int(1);
            ok &= dm_hodge_numbers(m, n, n + 1, n - 1, 1) == Int(n) * (m - n - 2);
        }
    }
    CHECK(ok);
    verdict(11, "deligne-mostow-identities", ok);
}

TEST_CASE("criterion 12: eigen-graded cubic surface") {
    bool ok = true;
    Hypersurface cover = cyclic_cover(Hypersurface(2, fermat(4, 3)), 3);
    GradedQuotientRing ring = jacobian_ring(cover);
    std::vector<int> weights{0, 0, 0, 0, 1};

    // chi-eigenpiece dims at the residue degrees for k = 2, 1, 0.
    int at_k2 = eigen_graded_dim(ring, weights, 1, 1, 3);
    int at_k1 = eigen_graded_dim(ring, weights, 4, 1, 3);
    int at_k0 = eigen_graded_dim(ring, weights, 7, 1, 3);
    ACC(at_k2 == 1);
    ACC(at_k1 == 4);  // the (1, 4) shape
    ACC(at_k0 == 0);

    // Cumulative filtration dims F^0 >= F^1 >= F^2 >= F^3 from the pieces.
    std::vector<int> dims{at_k2 + at_k1 + at_k0, at_k2 + at_k1, at_k2, 0};
    EigenBallReport report = eigen_ball_conditions(dims, 2, 4);
    ACC(report.vanishing_above);
    ACC(report.top_is_line);
    ACC(report.tangent_matches);
    ACC(report.stable_below);
    ACC(report.pass());
    verdict(12, "eigen-graded-cubic-surface", ok);
}
