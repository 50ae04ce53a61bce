#pragma once

#include "hodgeball/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodgeball {

enum class MonomialOrder { grevlex, grlex, lex };

/// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(int nvars, int index, int power = 1);

    const std::vector<int>& exponents() const { return exps_; }
    int degree() const { return degree_; }
    int nvars() const { return static_cast<int>(exps_.size()); }
    int exponent(int i) const { return exps_[i]; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// this / other; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Strict "a before b" comparison placing larger monomials first under the order.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialCmp {
    MonomialOrder order = MonomialOrder::grevlex;
    // std::map ascending; we store ascending so rbegin() is the leading term.
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b, order);
    }
};

/// Sparse multivariate polynomial over Q; no zero coefficients stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialCmp>;

    explicit Polynomial(int nvars, MonomialOrder order = MonomialOrder::grevlex)
        : nvars_(nvars), terms_(MonomialCmp{order}) {}

    static Polynomial constant(int nvars, Rational c, MonomialOrder order = MonomialOrder::grevlex);
    static Polynomial monomial(Monomial m, Rational c, MonomialOrder order = MonomialOrder::grevlex);

    int nvars() const { return nvars_; }
    MonomialOrder order() const { return terms_.key_comp().order; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Monomial& m, const Rational& c);

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    Polynomial monic() const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(int var) const;

    std::string str() const;

private:
    int nvars_;
    TermMap terms_;
};

/// Terms `x<i>[^e]` joined by * within a term, terms joined by +/-.
/// If nvars < 0 the variable count is inferred from the largest index.
Polynomial parse_polynomial(const std::string& text, int nvars = -1,
                            MonomialOrder order = MonomialOrder::grevlex);

/// Reduced Groebner basis by Buchberger with the coprime-pair criterion.
/// Monomial generating sets bypass Buchberger entirely.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators,
                                       MonomialOrder order = MonomialOrder::grevlex);

/// Polynomial ring modulo an ideal, queryable by graded piece.
class GradedQuotientRing {
public:
    GradedQuotientRing(std::vector<Polynomial> generators,
                       MonomialOrder order = MonomialOrder::grevlex);

    int nvars() const { return nvars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const std::vector<Polynomial>& basis() const { return groebner_; }
    bool is_monomial_ideal() const { return is_monomial_ideal_; }
    bool is_graded() const { return graded_; }

    Polynomial normal_form(const Polynomial& f) const;
    Polynomial multiply_mod(const Polynomial& f, const Polynomial& g) const;

    /// Standard monomials of the given total degree, sorted by the active order.
    std::vector<Monomial> graded_basis(int degree) const;
    std::size_t graded_dim(int degree) const { return graded_basis(degree).size(); }

    /// True iff every variable has a pure power among the Groebner leading terms,
    /// i.e. the quotient is finite-dimensional.
    bool zero_dimensional() const;

private:
    int nvars_;
    MonomialOrder order_;
    std::vector<Polynomial> generators_;
    std::vector<Polynomial> groebner_;
    bool is_monomial_ideal_ = false;
    bool graded_ = false;
};

/// Safety cap for Groebner/graded queries, from HODGEBALL_MAX_DEGREE (default 64).
int max_degree_cap();

}  // namespace hodgeball
