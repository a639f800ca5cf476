#pragma once

#include "p2galois/polynomial.hpp"

namespace p2g {

/// Raised when a quotient-ring element has no inverse; carries the nontrivial
/// gcd of representative and modulus so the caller can split the modulus.
class NonInvertibleError : public std::domain_error {
public:
    explicit NonInvertibleError(Polynomial gcd)
        : std::domain_error("quotient_invert: representative shares a factor with the modulus"),
          gcd_(std::move(gcd)) {}
    const Polynomial& common_factor() const { return gcd_; }

private:
    Polynomial gcd_;
};

/// Element of Q[z]/(m) for a squarefree modulus m of degree >= 1.
///
/// Working modulo a squarefree factor evaluates an expression at all of the
/// factor's roots simultaneously, which is how per-root Laurent data is
/// established without ever materializing the roots.
class QuotientRingElement {
public:
    /// Reduces rep mod modulus; the modulus is normalized monic. Throws
    /// std::domain_error when the modulus is constant or not squarefree.
    QuotientRingElement(Polynomial rep, Polynomial modulus);

    const Polynomial& representative() const { return rep_; }
    const Polynomial& modulus() const { return mod_; }

    bool is_zero() const { return rep_.is_zero(); }
    /// Constant representative, i.e. the same value at every root.
    bool is_constant() const { return rep_.is_constant(); }
    Rational constant_value() const;

    friend QuotientRingElement operator+(const QuotientRingElement& a, const QuotientRingElement& b);
    friend QuotientRingElement operator-(const QuotientRingElement& a, const QuotientRingElement& b);
    friend QuotientRingElement operator*(const QuotientRingElement& a, const QuotientRingElement& b);
    friend bool operator==(const QuotientRingElement& a, const QuotientRingElement& b) {
        return a.rep_ == b.rep_ && a.mod_ == b.mod_;
    }
    friend bool operator!=(const QuotientRingElement& a, const QuotientRingElement& b) { return !(a == b); }

private:
    static void require_same_modulus(const QuotientRingElement& a, const QuotientRingElement& b);
    Polynomial rep_;
    Polynomial mod_;
};

QuotientRingElement quotient_reduce(const Polynomial& p, const Polynomial& modulus);

/// Inverse in Q[z]/(m). Throws NonInvertibleError with the witnessing gcd when
/// the representative shares a factor with the modulus.
QuotientRingElement quotient_invert(const QuotientRingElement& x);

}  // namespace p2g
