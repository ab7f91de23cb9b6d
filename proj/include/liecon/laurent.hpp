#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecon/rational.hpp"

namespace liecon {

/// Dense polynomial in t over the rationals; coeff(0) is the constant term.
/// Normalized so the highest stored coefficient is nonzero (zero poly is empty).
class Poly {
public:
    Poly() = default;
    Poly(Rational constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    static Poly monomial(const Rational& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
    int low_degree() const;
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    void set_coeff(int k, const Rational& v);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const Rational& s) const;
    /// Quotient and remainder of exact field division.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);
    /// Divide t^low_degree() out; returns the power removed.
    int strip_low_degree();

    Rational eval(const Rational& t) const;
    double eval(double t) const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Laurent rational function of the contraction parameter t.
///
/// Canonical form: numerator carries the whole t-shift (denominator has
/// valuation 0 with constant coefficient 1) and gcd(num, den) = 1.
class ParamScalar {
public:
    ParamScalar() : num_shift_(0), den_(Rational(1)) {}
    ParamScalar(Rational constant) : num_(std::move(constant)), num_shift_(0), den_(Rational(1)) {}
    ParamScalar(long n) : ParamScalar(Rational(n)) {}
    ParamScalar(Poly num, int num_shift, Poly den, int den_shift);

    /// t^k
    static ParamScalar t_power(int k) { return ParamScalar(Poly(Rational(1)), k, Poly(Rational(1)), 0); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && num_shift_ == 0 && den_.degree() == 0; }
    /// Requires is_constant().
    Rational constant_value() const;

    /// Lowest t-exponent; empty for the zero function (the +inf marker).
    std::optional<int> valuation() const {
        if (is_zero()) return std::nullopt;
        return num_shift_;
    }

    struct Limit {
        bool finite;
        Rational value;  // meaningful iff finite
    };
    /// One-sided limit at t -> 0+.
    Limit limit_at_zero_plus() const;

    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
    ParamScalar operator-() const;
    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }
    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_shift_ == b.num_shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

    ParamScalar inverse() const;

    /// Exact evaluation at a nonzero rational parameter value.
    /// Throws std::domain_error at a pole or at t = 0 with negative valuation.
    Rational eval(const Rational& t) const;
    double eval(double t) const;

    /// Text form per the file grammar: "1", "t^-1", "2/3*t^2 - 1",
    /// "(1 + t)/(2 - t)" when the denominator is nontrivial.
    std::string str() const;
    static ParamScalar parse(const std::string& text);

    const Poly& num() const { return num_; }
    int num_shift() const { return num_shift_; }
    const Poly& den() const { return den_; }

private:
    void canonicalize();
    Poly num_;       // num_[0] != 0 unless zero
    int num_shift_;  // value = t^num_shift_ * num_ / den_
    Poly den_;       // den_[0] == 1
};

}  // namespace liecon
