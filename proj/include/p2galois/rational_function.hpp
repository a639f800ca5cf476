#pragma once

#include "p2galois/polynomial.hpp"

namespace p2g {

/// Reduced rational function in one variable: gcd(numerator, denominator) = 1
/// and the denominator is monic, so equal functions are structurally equal.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
    /// Reduces to canonical form; throws std::domain_error on a zero denominator.
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// The value of a constant function; throws otherwise.
    Rational constant_value() const;

    Rational evaluate(const Rational& x) const;

    /// Formal derivative by the quotient rule, reduced.
    RationalFunction derivative() const;
    RationalFunction reciprocal() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& x) { return *this = *this + x; }
    RationalFunction& operator-=(const RationalFunction& x) { return *this = *this - x; }
    RationalFunction& operator*=(const RationalFunction& x) { return *this = *this * x; }
    RationalFunction& operator/=(const RationalFunction& x) { return *this = *this / x; }

    friend RationalFunction operator*(const Rational& c, const RationalFunction& f) {
        if (c.is_zero()) return {};
        return RationalFunction(c * f.num_, f.den_, Reduced{});
    }
    friend RationalFunction operator*(const RationalFunction& f, const Rational& c) { return c * f; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    struct Reduced {};
    RationalFunction(Polynomial numerator, Polynomial denominator, Reduced)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}

    Polynomial num_;
    Polynomial den_;
};

RationalFunction pow(const RationalFunction& base, unsigned exponent);

}  // namespace p2g
