#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "hodgeball/hodge_frame.hpp"

#include <doctest.h>

using namespace hodgeball;

namespace {

Mat sympl2() {
    Mat q(2, 2);
    q.at(0, 1) = GaussianRational(1);
    q.at(1, 0) = GaussianRational(-1);
    return q;
}

// Weight-1 frame of an elliptic curve with period tau: H^{1,0} = span(1, tau).
HodgeFrame elliptic_frame(const GaussianRational& tau) {
    Mat basis(2, 2);
    basis.at(0, 0) = GaussianRational(1);
    basis.at(1, 0) = tau;
    basis.at(0, 1) = GaussianRational(1);
    basis.at(1, 1) = tau.conj();
    return HodgeFrame(HodgeNumbers(1, {1, 1}), Polarization(1, sympl2()), basis);
}

}  // namespace

TEST_CASE("partial sums and block layout") {
    HodgeNumbers h(3, {1, 4, 4, 1});
    CHECK(h.m() == 10);
    CHECK(h.f(0) == 10);
    CHECK(h.f(1) == 9);
    CHECK(h.f(2) == 5);
    CHECK(h.f(3) == 1);
    CHECK(h.f(4) == 0);
    CHECK(h.block_offset(0) == 0);
    CHECK(h.block_offset(1) == 1);
    CHECK(h.block_offset(2) == 5);
    CHECK(h.block_offset(3) == 9);
    CHECK_THROWS_AS(HodgeNumbers(2, {1, 1}), std::invalid_argument);
}

TEST_CASE("tate twist reindexes the Hodge numbers") {
    CHECK(tate_twist(HodgeNumbers(4, {0, 1, 20, 1, 0}), 1) == HodgeNumbers(2, {1, 20, 1}));
    CHECK(tate_twist(HodgeNumbers(2, {1, 1, 1}), 0) == HodgeNumbers(2, {1, 1, 1}));
    // Nonzero entries may not be dropped.
    CHECK_THROWS_AS(tate_twist(HodgeNumbers(2, {1, 1, 1}), 1), std::domain_error);
    CHECK_THROWS_AS(tate_twist(HodgeNumbers(1, {1, 1}), 1), std::domain_error);
}

TEST_CASE("polarization parity validation") {
    CHECK_THROWS_AS(Polarization(2, sympl2()), std::invalid_argument);  // even needs symmetric
    CHECK_NOTHROW(Polarization(1, sympl2()));
    CHECK_NOTHROW(Polarization(2, Mat::identity(2)));
    CHECK_THROWS_AS(Polarization(2, Mat(2, 2)), std::invalid_argument);  // degenerate
}

TEST_CASE("elliptic frame satisfies both Hodge-Riemann relations for tau = i") {
    HodgeFrame frame = elliptic_frame(GaussianRational::i());
    CHECK(frame.conjugate_symmetric());
    // HR2 value i*Q(v, conj v) = 2 Im(tau) = 2.
    CHECK(frame.hr2_form(0).at(0, 0) == GaussianRational(2));
    HodgeRiemannResult hr = hodge_riemann_check(frame);
    CHECK(hr.hr1);
    CHECK(hr.hr2);
    CHECK(hr.pass());
}

TEST_CASE("lower-half-plane period fails HR2") {
    HodgeFrame frame = elliptic_frame(-GaussianRational::i());
    CHECK(frame.hr2_form(0).at(0, 0) == GaussianRational(-2));
    HodgeRiemannResult hr = hodge_riemann_check(frame);
    CHECK(hr.hr1);
    CHECK_FALSE(hr.hr2);
    CHECK_FALSE(hr.failures.empty());
}

TEST_CASE("filtration to decomposition round-trips the elliptic frame") {
    GaussianRational tau(Rational(1), Rational(2));  // 1 + 2i, upper half plane
    Mat f1(2, 1);
    f1.at(0, 0) = GaussianRational(1);
    f1.at(1, 0) = tau;
    HodgeFrame frame = filtration_to_decomposition({Mat::identity(2), f1}, Polarization(1, sympl2()));
    CHECK(frame.numbers() == HodgeNumbers(1, {1, 1}));
    CHECK(same_column_span(frame.block_basis(0), f1));
    CHECK(frame.conjugate_symmetric());
    CHECK(hodge_riemann_check(frame).pass());
}

TEST_CASE("real filtration is rejected as non-Hodge") {
    Mat f1(2, 1);
    f1.at(0, 0) = GaussianRational(1);
    f1.at(1, 0) = GaussianRational(2);  // real line equals its conjugate
    CHECK_THROWS_AS(filtration_to_decomposition({Mat::identity(2), f1}, Polarization(1, sympl2())),
                    std::domain_error);
}

TEST_CASE("positive definiteness by leading principal minors") {
    Mat h(2, 2);
    h.at(0, 0) = GaussianRational(2);
    h.at(1, 1) = GaussianRational(3);
    h.at(0, 1) = GaussianRational::i();
    h.at(1, 0) = -GaussianRational::i();
    CHECK(positive_definite_hermitian(h));  // minors 2, 5
    h.at(1, 1) = GaussianRational(Rational(Int(1), Int(3)));
    CHECK_FALSE(positive_definite_hermitian(h));  // det = 2/3 - 1 < 0
    Mat nh(1, 1);
    nh.at(0, 0) = GaussianRational::i();
    CHECK_FALSE(positive_definite_hermitian(nh));  // not Hermitian
}

TEST_CASE("lie grading splits endomorphisms by block offset") {
    // Weight-2 frame in standard coordinates with symmetric nondegenerate Q.
    HodgeNumbers numbers(2, {1, 1, 1});
    Mat q(3, 3);
    q.at(0, 2) = GaussianRational(1);
    q.at(2, 0) = GaussianRational(1);
    q.at(1, 1) = GaussianRational(1);
    Mat basis = Mat::identity(3);
    basis.at(0, 0) = GaussianRational(Rational(0), Rational(1));   // twist so conj() differs
    basis.at(2, 2) = GaussianRational(Rational(0), Rational(-1));
    HodgeFrame frame(numbers, Polarization(2, q), basis);

    Mat a(3, 3);
    a.at(1, 0) = GaussianRational(2);  // block (1,0): grade -1
    a.at(0, 1) = GaussianRational(5);  // block (0,1): grade +1
    GradedEndomorphism graded = lie_grade(a, frame);
    CHECK(graded.components.size() == 2);
    CHECK(graded.components.count(-1) == 1);
    CHECK(graded.components.count(1) == 1);
    CHECK(frame.basis() * graded.reconstruct(3) == a * frame.basis());
}

TEST_CASE("infinitesimal isometries of the symplectic form") {
    Mat a(2, 2);
    a.at(0, 0) = GaussianRational(1);
    a.at(1, 1) = GaussianRational(-1);
    CHECK(infinitesimal_isometry_check(a, sympl2()));  // sl2 diagonal
    Mat b = Mat::identity(2);
    CHECK_FALSE(infinitesimal_isometry_check(b, sympl2()));
}
