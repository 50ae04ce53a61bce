#include "hodgeball/polyring.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hodgeball {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::variable(int nvars, int index, int power) {
    std::vector<int> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) return false;
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) {
        e[i] -= other.exps_[i];
        if (e[i] < 0) throw std::invalid_argument("monomial division not exact");
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
}

std::string Monomial::str() const {
    if (degree_ == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << i;
        if (exps_[i] > 1) os << "^" << exps_[i];
        first = false;
    }
    return os.str();
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    switch (order) {
        case MonomialOrder::lex:
            return a.exponents() < b.exponents();
        case MonomialOrder::grlex:
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a.exponents() < b.exponents();
        case MonomialOrder::grevlex: {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            // a < b iff the last nonzero entry of a-b is positive.
            for (int i = a.nvars() - 1; i >= 0; --i) {
                int d = a.exponent(i) - b.exponent(i);
                if (d != 0) return d > 0;
            }
            return false;
        }
    }
    return false;
}

Polynomial Polynomial::constant(int nvars, Rational c, MonomialOrder order) {
    Polynomial p(nvars, order);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, Rational c, MonomialOrder order) {
    Polynomial p(m.nvars(), order);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars(), a.order());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_, order());
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r(nvars_, order());
    if (c.is_zero()) return r;
    for (const auto& [mm, coeff] : terms_) r.terms_.emplace(mm * m, coeff * c);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_, order());
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        auto exps = m.exponents();
        exps[var] -= 1;
        r.add_term(Monomial(std::move(exps)), c * Rational(e));
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending order: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.degree() == 0) {
            os << abs.str();
        } else if (abs == Rational(1)) {
            os << m.str();
        } else {
            os << abs.str() << "*" << m.str();
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, MonomialOrder order) {
    struct RawTerm {
        Rational coeff;
        std::map<int, int> powers;
    };
    std::vector<RawTerm> raw;
    int max_index = -1;

    Parser p(text);
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= p.s.size()) {
            if (first) p.fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (p.eat('-'))
            sign = -1;
        else if (p.eat('+')) {
            if (first) p.fail("leading '+'");
        } else if (!first) {
            p.fail("expected '+' or '-'");
        }
        first = false;

        RawTerm term;
        term.coeff = Rational(sign);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            p.skip_ws();
            if (p.pos < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
                Int num = p.integer();
                Int den = 1;
                if (p.eat('/')) den = p.integer();
                term.coeff *= Rational(num, den);
                saw_factor = true;
            } else if (p.eat('x')) {
                Int idx = p.integer();
                int i = static_cast<int>(idx);
                int e = 1;
                if (p.eat('^')) e = static_cast<int>(p.integer());
                term.powers[i] += e;
                max_index = std::max(max_index, i);
                saw_factor = true;
            } else {
                p.fail("expected coefficient or variable");
            }
            expect_factor = p.eat('*');
        }
        if (!saw_factor) p.fail("empty term");
        raw.push_back(std::move(term));
    }

    int n = nvars >= 0 ? nvars : max_index + 1;
    if (max_index >= n)
        throw std::invalid_argument("variable index x" + std::to_string(max_index) +
                                    " exceeds variable count " + std::to_string(n));
    if (n <= 0) n = 1;
    Polynomial result(n, order);
    for (const auto& t : raw) {
        std::vector<int> exps(n, 0);
        for (auto [i, e] : t.powers) exps[i] = e;
        result.add_term(Monomial(std::move(exps)), t.coeff);
    }
    return result;
}

int max_degree_cap() {
    if (const char* env = std::getenv("HODGEBALL_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

namespace {

// Remainder of multivariate division by the basis.
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial rem(f.nvars(), f.order());
    Polynomial work = f;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const Rational& lc = work.leading_coefficient();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lm)) {
                Monomial q = lm / g.leading_monomial();
                work -= g.times_monomial(q, lc / g.leading_coefficient());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            // Remove the leading term and continue with the tail.
            Polynomial tail(work.nvars(), work.order());
            for (const auto& [m, c] : work.terms())
                if (m != lm) tail.add_term(m, c);
            work = std::move(tail);
        }
    }
    return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_monomial(l / f.leading_monomial(),
                                    f.leading_coefficient().inverse());
    Polynomial b = g.times_monomial(l / g.leading_monomial(),
                                    g.leading_coefficient().inverse());
    return a - b;
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, MonomialOrder order) {
    if (generators.empty()) throw std::invalid_argument("empty generating set");
    int nvars = generators.front().nvars();
    std::vector<Polynomial> basis;
    for (auto& g : generators) {
        if (g.nvars() != nvars) throw std::invalid_argument("mixed variable counts");
        if (g.order() != order) {
            Polynomial h(nvars, order);
            for (const auto& [m, c] : g.terms()) h.add_term(m, c);
            g = std::move(h);
        }
        if (!g.is_zero()) basis.push_back(g.monic());
    }
    if (basis.empty()) throw std::invalid_argument("zero ideal generators");

    bool all_monomial =
        std::all_of(basis.begin(), basis.end(), [](const Polynomial& g) { return g.is_monomial(); });

    if (!all_monomial) {
        int cap = max_degree_cap();
        std::deque<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
        while (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            // Buchberger first criterion: coprime leading terms give S-poly reducing to 0.
            if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
            Polynomial s = reduce_by(s_polynomial(basis[i], basis[j]), basis);
            if (s.is_zero()) continue;
            if (s.degree() > cap)
                throw std::runtime_error("Groebner degree exceeds HODGEBALL_MAX_DEGREE cap");
            s = s.monic();
            for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
            basis.push_back(std::move(s));
        }
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
                !(basis[j].leading_monomial() == basis[i].leading_monomial() && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails for the reduced basis.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : reduce_by(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
        return monomial_less(a.leading_monomial(), b.leading_monomial(), order);
    });
    return reduced;
}

GradedQuotientRing::GradedQuotientRing(std::vector<Polynomial> generators, MonomialOrder order)
    : nvars_(generators.empty() ? 0 : generators.front().nvars()),
      order_(order),
      generators_(std::move(generators)) {
    groebner_ = groebner_basis(generators_, order_);
    is_monomial_ideal_ =
        std::all_of(groebner_.begin(), groebner_.end(), [](const Polynomial& g) { return g.is_monomial(); });
    graded_ = std::all_of(generators_.begin(), generators_.end(),
                          [](const Polynomial& g) { return g.is_homogeneous(); });
}

Polynomial GradedQuotientRing::normal_form(const Polynomial& f) const {
    if (f.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
    if (f.order() != order_) {
        Polynomial h(nvars_, order_);
        for (const auto& [m, c] : f.terms()) h.add_term(m, c);
        return reduce_by(h, groebner_);
    }
    return reduce_by(f, groebner_);
}

Polynomial GradedQuotientRing::multiply_mod(const Polynomial& f, const Polynomial& g) const {
    return normal_form(f * g);
}

std::vector<Monomial> GradedQuotientRing::graded_basis(int degree) const {
    if (!graded_) throw std::domain_error("graded query on non-graded ring");
    if (degree < 0) return {};
    if (degree > max_degree_cap())
        throw std::runtime_error("graded degree exceeds HODGEBALL_MAX_DEGREE cap");

    std::vector<Monomial> leading;
    for (const auto& g : groebner_) leading.push_back(g.leading_monomial());

    std::vector<Monomial> result;
    std::vector<int> exps(nvars_, 0);
    // Enumerate all exponent vectors of the given total degree.
    auto recurse = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars_ - 1) {
            exps[var] = remaining;
            Monomial m{exps};
            bool standard = std::none_of(leading.begin(), leading.end(),
                                         [&](const Monomial& l) { return l.divides(m); });
            if (standard) result.push_back(std::move(m));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    if (nvars_ > 0) recurse(recurse, 0, degree);
    std::sort(result.begin(), result.end(),
              [this](const Monomial& a, const Monomial& b) { return monomial_less(a, b, order_); });
    return result;
}

bool GradedQuotientRing::zero_dimensional() const {
    for (int v = 0; v < nvars_; ++v) {
        bool has_pure_power = false;
        for (const auto& g : groebner_) {
            const Monomial& lm = g.leading_monomial();
            if (lm.exponent(v) > 0 && lm.degree() == lm.exponent(v)) {
                has_pure_power = true;
                break;
            }
        }
        if (!has_pure_power) return false;
    }
    return true;
}

}  // namespace hodgeball
