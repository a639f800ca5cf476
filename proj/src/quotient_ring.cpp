#include "p2galois/quotient_ring.hpp"

#include "modular_arith.hpp"

namespace p2g {

QuotientRingElement::QuotientRingElement(Polynomial rep, Polynomial modulus) {
    if (modulus.is_zero() || modulus.degree() < 1)
        throw std::domain_error("QuotientRingElement: modulus must have degree >= 1");
    if (!poly_gcd(modulus, modulus.derivative()).is_one())
        throw std::domain_error("QuotientRingElement: modulus is not squarefree");
    mod_ = modulus.monic();
    rep_ = divmod(std::move(rep), mod_).remainder;
}

Rational QuotientRingElement::constant_value() const {
    if (!is_constant()) throw std::logic_error("QuotientRingElement: not a constant");
    return rep_.coeff(0);
}

void QuotientRingElement::require_same_modulus(const QuotientRingElement& a, const QuotientRingElement& b) {
    if (a.mod_ != b.mod_) throw std::domain_error("QuotientRingElement: mixed moduli");
}

QuotientRingElement operator+(const QuotientRingElement& a, const QuotientRingElement& b) {
    QuotientRingElement::require_same_modulus(a, b);
    return {a.rep_ + b.rep_, a.mod_};
}

QuotientRingElement operator-(const QuotientRingElement& a, const QuotientRingElement& b) {
    QuotientRingElement::require_same_modulus(a, b);
    return {a.rep_ - b.rep_, a.mod_};
}

QuotientRingElement operator*(const QuotientRingElement& a, const QuotientRingElement& b) {
    QuotientRingElement::require_same_modulus(a, b);
    return {a.rep_ * b.rep_, a.mod_};
}

QuotientRingElement quotient_reduce(const Polynomial& p, const Polynomial& modulus) {
    return {p, modulus};
}

QuotientRingElement quotient_invert(const QuotientRingElement& x) {
    auto inv = detail::invert_modulo(x.representative(), x.modulus());
    if (!inv) {
        Polynomial g = x.is_zero() ? x.modulus() : poly_gcd(x.representative(), x.modulus());
        throw NonInvertibleError(std::move(g));
    }
    return {std::move(*inv), x.modulus()};
}

}  // namespace p2g
