#include "hodgeball/scalar.hpp"

#include <cctype>
#include <sstream>

namespace hodgeball {

namespace {

Int gcd_abs(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

}  // namespace

Rational::Rational(Int n, Int d) {
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int g = gcd_abs(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    num_ = std::move(n);
    den_ = std::move(d);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = Rational(num_ * o.num_, den_ * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    *this = Rational(num_ * o.den_, den_ * o.num_);
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(den_, num_);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
}

double Rational::approx() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational reduce(Int n, Int d) { return Rational(std::move(n), std::move(d)); }

Int lcd(const std::vector<Rational>& values) {
    if (values.empty()) throw std::invalid_argument("lcd of empty list");
    Int l = 1;
    for (const auto& v : values) {
        Int g = gcd_abs(l, v.den());
        l = l / g * v.den();
    }
    return l;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("division by zero");
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_ == Rational(1))
        imag = "i";
    else if (im_ == Rational(-1))
        imag = "-i";
    else
        imag = im_.str() + "*i";
    if (re_.is_zero()) return imag;
    if (im_.sign() > 0) return re_.str() + "+" + imag;
    return re_.str() + imag.insert(0, "");  // imag already carries '-'
}

GaussianRational weil_factor(int k, int n) {
    int e = ((2 * k - n) % 4 + 4) % 4;
    switch (e) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

GaussianRational parse_gaussian(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty gaussian literal");

    // Split into at most two signed parts at top level.
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' &&
            s[i - 1] != '+' && s[i - 1] != '-') {
            parts.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() > 2) throw std::invalid_argument("malformed gaussian: " + text);

    Rational re(0), im(0);
    for (auto& p : parts) {
        bool neg = false;
        std::string body = p;
        if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
            neg = body[0] == '-';
            body.erase(0, 1);
        }
        Rational val;
        bool imaginary = false;
        if (!body.empty() && body.back() == 'i') {
            imaginary = true;
            body.pop_back();
            if (!body.empty() && body.back() == '*') body.pop_back();
            val = body.empty() ? Rational(1) : parse_rational(body);
        } else {
            val = parse_rational(body);
        }
        if (neg) val = -val;
        if (imaginary)
            im += val;
        else
            re += val;
    }
    return {re, im};
}

}  // namespace hodgeball
