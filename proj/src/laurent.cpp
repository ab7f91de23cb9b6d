#include "liecon/laurent.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace liecon {

// ---------------------------------------------------------------------------
// Poly

Poly Poly::monomial(const Rational& coeff, int degree) {
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_[degree] = coeff;
    }
    return p;
}

int Poly::low_degree() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

void Poly::set_coeff(int k, const Rational& v) {
    if (k < 0) throw std::invalid_argument("Poly::set_coeff: negative exponent");
    if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, Rational(0));
    c_[k] = v;
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& s) const {
    Poly r;
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rational f = r.c_.back() / b.c_.back();
        q.set_coeff(d, q.coeff(d) + f);
        r = r - Poly::monomial(f, d) * b;
    }
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.c_.back().inverse());  // monic
    return a;
}

int Poly::strip_low_degree() {
    int v = low_degree();
    if (v <= 0) return 0;
    c_.erase(c_.begin(), c_.begin() + v);
    return v;
}

Rational Poly::eval(const Rational& t) const {
    Rational r(0);
    for (size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
    return r;
}

double Poly::eval(double t) const {
    double r = 0.0;
    for (size_t k = c_.size(); k-- > 0;) r = r * t + c_[k].to_double();
    return r;
}

// ---------------------------------------------------------------------------
// ParamScalar

ParamScalar::ParamScalar(Poly num, int num_shift, Poly den, int den_shift)
    : num_(std::move(num)), num_shift_(num_shift), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("ParamScalar: zero denominator");
    num_shift_ -= den_shift;
    canonicalize();
}

void ParamScalar::canonicalize() {
    if (num_.is_zero()) {
        num_shift_ = 0;
        den_ = Poly(Rational(1));
        return;
    }
    num_shift_ += num_.strip_low_degree();
    num_shift_ -= den_.strip_low_degree();
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Rational lead = den_.coeff(0);
    if (lead != Rational(1)) {
        Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational ParamScalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("ParamScalar: not a constant");
    return num_.coeff(0);
}

ParamScalar::Limit ParamScalar::limit_at_zero_plus() const {
    if (is_zero()) return {true, Rational(0)};
    if (num_shift_ > 0) return {true, Rational(0)};
    if (num_shift_ == 0) return {true, num_.coeff(0) / den_.coeff(0)};
    return {false, Rational(0)};
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    int shift = std::min(a.num_shift_, b.num_shift_);
    Poly ta = Poly::monomial(Rational(1), a.num_shift_ - shift);
    Poly tb = Poly::monomial(Rational(1), b.num_shift_ - shift);
    return ParamScalar(ta * a.num_ * b.den_ + tb * b.num_ * a.den_, shift, a.den_ * b.den_, 0);
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    return ParamScalar(a.num_ * b.num_, a.num_shift_ + b.num_shift_, a.den_ * b.den_, 0);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

ParamScalar ParamScalar::inverse() const {
    if (is_zero()) throw std::domain_error("ParamScalar: division by zero");
    return ParamScalar(den_, -num_shift_, num_, 0);
}

Rational ParamScalar::eval(const Rational& t) const {
    if (t.is_zero()) {
        Limit l = limit_at_zero_plus();
        if (!l.finite) throw std::domain_error("ParamScalar::eval: pole at t = 0");
        return l.value;
    }
    Rational d = den_.eval(t);
    if (d.is_zero()) throw std::domain_error("ParamScalar::eval: pole at t = " + t.str());
    Rational r = num_.eval(t) / d;
    // multiply by t^shift
    Rational p(1);
    int s = num_shift_;
    Rational base = s >= 0 ? t : t.inverse();
    for (int k = std::abs(s); k > 0; --k) p *= base;
    return r * p;
}

double ParamScalar::eval(double t) const {
    double d = den_.eval(t);
    return num_.eval(t) / d * std::pow(t, static_cast<double>(num_shift_));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string laurent_str(const Poly& p, int shift) {
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        int e = k + shift;
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = c.abs();
        if (e == 0) {
            out << a.str();
        } else {
            if (a != Rational(1)) out << a.str() << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    if (first) out << "0";
    return out.str();
}

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
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("ParamScalar::parse: " + what + " near position " +
                                    std::to_string(pos) + " in '" + s + "'");
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Rational rational_literal() {
        long p = integer();
        size_t save = pos;
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws();
            // a '/' followed by '(' belongs to the num/den split, not the literal
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                long q = integer();
                return Rational(p, q);
            }
            pos = save;
        } else {
            pos = save;
        }
        return Rational(p);
    }

    // term := c | c '*'? t-part | t-part, with t-part := 't' ['^' int]
    ParamScalar term() {
        skip_ws();
        Rational coeff(1);
        bool have_coeff = false;
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            coeff = rational_literal();
            have_coeff = true;
        }
        skip_ws();
        bool star = false;
        if (have_coeff && pos < s.size() && s[pos] == '*') {
            ++pos;
            star = true;
        }
        skip_ws();
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            int e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = static_cast<int>(integer());
            }
            return ParamScalar(Poly(coeff), e, Poly(Rational(1)), 0);
        }
        if (star) fail("expected 't' after '*'");
        if (!have_coeff) fail("expected term");
        return ParamScalar(coeff);
    }

    // sum := ['+'|'-'] term (('+'|'-') term)*
    ParamScalar sum() {
        ParamScalar acc(Rational(0));
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        while (true) {
            ParamScalar tm = term();
            acc = sign > 0 ? acc + tm : acc - tm;
            skip_ws();
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
        }
        return acc;
    }

    ParamScalar top() {
        skip_ws();
        if (peek() == '(') {
            size_t save = pos;
            eat('(');
            ParamScalar numerator = sum();
            if (!eat(')')) fail("expected ')'");
            if (eat('/')) {
                if (!eat('(')) fail("expected '(' after '/'");
                ParamScalar denominator = sum();
                if (!eat(')')) fail("expected ')'");
                skip_ws();
                if (pos != s.size()) fail("trailing input");
                if (denominator.is_zero())
                    throw std::domain_error("ParamScalar::parse: zero denominator");
                return numerator / denominator;
            }
            // a parenthesized sum without a denominator; re-parse as plain sum
            pos = save;
            eat('(');
            ParamScalar v = sum();
            if (!eat(')')) fail("expected ')'");
            skip_ws();
            if (pos != s.size()) fail("trailing input");
            return v;
        }
        ParamScalar v = sum();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return v;
    }
};

}  // namespace

std::string ParamScalar::str() const {
    if (den_.degree() == 0) return laurent_str(num_, num_shift_);
    return "(" + laurent_str(num_, num_shift_) + ")/(" + laurent_str(den_, 0) + ")";
}

ParamScalar ParamScalar::parse(const std::string& text) {
    Parser p(text);
    return p.top();
}

}  // namespace liecon
