#include "p2galois/rational_function.hpp"

namespace p2g {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
    if (denominator.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (numerator.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = poly_gcd(numerator, denominator);
    if (!g.is_one()) {
        numerator = exact_divide(numerator, g);
        denominator = exact_divide(denominator, g);
    }
    Rational lc = denominator.leading_coefficient();
    if (!lc.is_one()) {
        Rational inv = lc.reciprocal();
        numerator = inv * numerator;
        denominator = inv * denominator;
    }
    num_ = std::move(numerator);
    den_ = std::move(denominator);
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("RationalFunction: not a constant");
    return num_.coeff(0);
}

Rational RationalFunction::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    if (is_polynomial()) return RationalFunction(num_.derivative(), Polynomial(1), Reduced{});
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("RationalFunction: reciprocal of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) return a;
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-reduce first so the constructor's gcd sees coprime arguments.
    Polynomial g1 = poly_gcd(a.num_, b.den_);
    Polynomial g2 = poly_gcd(b.num_, a.den_);
    Polynomial num = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
    Polynomial den = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return a * b.reciprocal();
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
    RationalFunction result(1);
    RationalFunction acc = base;
    while (exponent) {
        if (exponent & 1u) result = result * acc;
        exponent >>= 1u;
        if (exponent) acc = acc * acc;
    }
    return result;
}

}  // namespace p2g
