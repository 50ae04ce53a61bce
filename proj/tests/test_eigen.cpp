#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "hodgeball/eigen.hpp"

#include <doctest.h>

using namespace hodgeball;

namespace {

GradedQuotientRing squarefree_ring(int nvars) {
    std::vector<Polynomial> gens;
    for (int v = 0; v < nvars; ++v)
        gens.push_back(Polynomial::monomial(Monomial::variable(nvars, v, 2), Rational(1)));
    return GradedQuotientRing(std::move(gens));
}

}  // namespace

TEST_CASE("character residue arithmetic") {
    Character chi({3, 4}, {1, 3});
    CHECK(chi.exponent() == 12);
    // chi(g) index = r1*g1*(12/3) + r2*g2*(12/4) mod 12
    CHECK(chi.index_of({1, 0}) == 4);
    CHECK(chi.index_of({0, 1}) == 9);
    CHECK(chi.index_of({1, 1}) == 1);
    CHECK(chi.index_of({2, 2}) == (8 + 18) % 12);
    // additivity
    CHECK((chi.index_of({1, 0}) + chi.index_of({0, 1})) % 12 == chi.index_of({1, 1}));
    CHECK(Character({3}, {-1}).residues[0] == 2);
}

TEST_CASE("diagonal eigenspace by index matching") {
    // Z/3 on C^2 with eigen-indices (1, 2).
    Character chi1({3}, {1});
    CHECK(eigenspace_diagonal({{1, 2}}, chi1) == std::vector<int>{0});
    Character chi0({3}, {0});
    CHECK(eigenspace_diagonal({{0, 0}}, chi0) == std::vector<int>{0, 1});  // trivial rep
    Character chi2({3}, {2});
    CHECK(eigenspace_diagonal({{1, 1}}, chi2).empty());  // index absent
}

TEST_CASE("dense eigenspace over Q(i)") {
    // Order-4 rotation diag(i, -i): chi = i picks the first axis.
    Mat rot(2, 2);
    rot.at(0, 0) = GaussianRational::i();
    rot.at(1, 1) = -GaussianRational::i();
    Mat space = eigenspace_dense({rot}, {GaussianRational::i()});
    CHECK(space.cols() == 1);
    CHECK_FALSE(space.at(0, 0).is_zero());
    CHECK(space.at(1, 0).is_zero());

    Mat swap(2, 2);
    swap.at(0, 1) = GaussianRational(1);
    swap.at(1, 0) = GaussianRational(1);
    Mat sym = eigenspace_dense({swap}, {GaussianRational(1)});
    CHECK(sym.cols() == 1);  // span(e1 + e2)
    CHECK(sym.at(0, 0) == sym.at(1, 0));

    Mat other(2, 2);
    other.at(0, 0) = GaussianRational(1);
    CHECK_THROWS_AS(eigenspace_dense({swap, other}, {GaussianRational(1), GaussianRational(1)}),
                    std::invalid_argument);
}

TEST_CASE("eigen-graded dims on the squarefree quotient") {
    GradedQuotientRing ring = squarefree_ring(5);
    std::vector<int> weights{0, 0, 0, 0, 1};
    CHECK(eigen_graded_dim(ring, weights, 1, 0, 3) == 4);  // x0..x3
    CHECK(eigen_graded_dim(ring, weights, 1, 1, 3) == 1);  // x4
    CHECK(eigen_graded_dim(ring, weights, 4, 1, 3) == 4);  // C(4,3) squarefree with x4
    // Partition property: chi-indexed counts sum to the full graded dimension.
    for (int degree = 0; degree <= 5; ++degree) {
        int total = 0;
        for (int chi = 0; chi < 3; ++chi)
            total += eigen_graded_dim(ring, weights, degree, chi, 3);
        CHECK(total == static_cast<int>(ring.graded_dim(degree)));
    }
}

TEST_CASE("eigen-graded dims reject non-monomial ideals") {
    GradedQuotientRing ring({parse_polynomial("x0^2 - x1^2", 2)});
    CHECK_THROWS_WITH_AS(eigen_graded_dim(ring, {0, 1}, 2, 0, 2),
                         "diagonal action requires monomial basis", std::invalid_argument);
}

TEST_CASE("binomial helper") {
    CHECK(binomial(10, 1) == Int(10));
    CHECK(binomial(4, 2) == Int(6));
    CHECK(binomial(3, 5) == Int(0));
    CHECK(binomial(5, 0) == Int(1));
    CHECK(binomial(-1, 0) == Int(0));
}

TEST_CASE("Deligne-Mostow binomial formulas") {
    // m=12, n=1, |mu|=2
    CHECK(dm_hodge_numbers(12, 1, 2, 1, 0) == Int(1));
    CHECK(dm_hodge_numbers(12, 1, 2, 0, 1) == Int(9));
    CHECK(dm_total_dim(12, 1) == Int(10));
    CHECK(dm_total_dim(6, 2) == Int(6));
    CHECK(dm_total_dim(5, 3) == Int(1));  // m = n+2
    CHECK_THROWS_AS(dm_total_dim(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(dm_hodge_numbers(12, 1, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("Vandermonde sweep and the |mu| = n+1 specialization") {
    for (int m = 3; m <= 14; ++m) {
        for (int n = 0; n + 2 <= m; ++n) {
            for (int mu_sum = 1; mu_sum <= m - 1; ++mu_sum) {
                Int total(0);
                for (int p = 0; p <= n; ++p) total += dm_hodge_numbers(m, n, mu_sum, p, n - p);
                CHECK(total == dm_total_dim(m, n));
            }
            if (n >= 1) {
                CHECK(dm_hodge_numbers(m, n, n + 1, n, 0) == Int(1));
                CHECK(dm_hodge_numbers(m, n, n + 1, n - 1, 1) == Int(n) * (m - n - 2));
            }
        }
    }
}

TEST_CASE("arrangement validation") {
    Mat a(4, 2);
    a.at(0, 0) = GaussianRational(1);
    a.at(1, 1) = GaussianRational(1);
    a.at(2, 0) = GaussianRational(1);
    a.at(2, 1) = GaussianRational(1);
    a.at(3, 0) = GaussianRational(1);
    a.at(3, 1) = GaussianRational(-1);
    Rational half(Int(1), Int(2));
    ArrangementData data(4, 1, a, {half, half, half, half});
    CHECK(data.mu_sum() == 2);

    CHECK_THROWS_AS(ArrangementData(4, 1, a, {half, half, half, Rational(1)}),
                    std::invalid_argument);  // weight not < 1
    CHECK_THROWS_AS(ArrangementData(4, 1, a, {half, half, half, Rational(Int(1), Int(3))}),
                    std::invalid_argument);  // sum not integral

    Mat bad = a;
    bad.at(3, 0) = GaussianRational(1);
    bad.at(3, 1) = GaussianRational(1);  // rows 2 and 3 now parallel
    CHECK_THROWS_AS(ArrangementData(4, 1, bad, {half, half, half, half}), std::invalid_argument);
    CHECK_NOTHROW(ArrangementData(4, 1, bad, {half, half, half, half}, false));
}

TEST_CASE("arrangement variety equations") {
    Mat a(3, 2);
    a.at(0, 0) = GaussianRational(1);
    a.at(1, 1) = GaussianRational(1);
    a.at(2, 0) = GaussianRational(1);
    a.at(2, 1) = GaussianRational(1);
    Rational third(Int(1), Int(3));
    ArrangementData data(3, 1, a, {third, third, third});
    auto eqs = arrangement_variety(data);
    REQUIRE(eqs.size() == 2);  // n+1 cubics in P^2
    for (const auto& f : eqs) {
        CHECK(f.nvars() == 3);
        CHECK(f.degree() == 3);  // d = lcd = 3
        CHECK(f.is_homogeneous());
    }
    CHECK(eqs[0] == parse_polynomial("x0^3 + x2^3", 3));
    CHECK(eqs[1] == parse_polynomial("x1^3 + x2^3", 3));
}

TEST_CASE("eigen-ball conditions on filtration shapes") {
    // Cubic-surface eigen shape: dims (5, 5, 1, 0) with k = 2, tangent 4.
    EigenBallReport good = eigen_ball_conditions({5, 5, 1, 0}, 2, 4);
    CHECK(good.vanishing_above);
    CHECK(good.top_is_line);
    CHECK(good.tangent_matches);
    CHECK(good.stable_below);
    CHECK(good.pass());

    CHECK_FALSE(eigen_ball_conditions({5, 5, 2, 0}, 2, 4).top_is_line);
    CHECK_FALSE(eigen_ball_conditions({5, 5, 1, 0}, 2, 3).tangent_matches);
    CHECK_FALSE(eigen_ball_conditions({6, 5, 1, 0}, 2, 4).stable_below);
    CHECK_FALSE(eigen_ball_conditions({5, 5, 1, 1}, 2, 4).vanishing_above);
    CHECK_THROWS_AS(eigen_ball_conditions({5, 6, 1, 0}, 2, 4), std::invalid_argument);
}
