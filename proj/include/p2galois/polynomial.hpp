#pragma once

#include <stdexcept>
#include <vector>

#include "p2galois/rational.hpp"

namespace p2g {

/// Dense univariate polynomial over the rationals, coefficients indexed by
/// degree. Normal form strips trailing zero coefficients, so the zero
/// polynomial has an empty coefficient vector and equality is structural.
///
/// degree() deliberately refuses the zero polynomial instead of returning a
/// -infinity stand-in; call is_zero() first where zero is a possible input.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coefficients);

    /// The monomial z.
    static Polynomial variable();
    /// c * z^k.
    static Polynomial monomial(const Rational& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !is_zero() && leading_coefficient().is_one(); }

    int degree() const;
    const Rational& leading_coefficient() const;
    /// Coefficient of z^k; zero for k beyond the degree.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;
    Polynomial derivative() const;
    /// Scales by the inverse of the leading coefficient.
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& x) { return *this = *this + x; }
    Polynomial& operator-=(const Polynomial& x) { return *this = *this - x; }
    Polynomial& operator*=(const Polynomial& x) { return *this = *this * x; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
    bool exact() const { return remainder.is_zero(); }
};

/// Euclidean division a = quotient * b + remainder with deg remainder < deg b.
/// Throws std::domain_error when b is zero.
PolyDivision divmod(const Polynomial& a, const Polynomial& b);

/// Raised by exact_divide when the division leaves a remainder; carries it.
class InexactDivisionError : public std::domain_error {
public:
    explicit InexactDivisionError(Polynomial remainder)
        : std::domain_error("exact_divide: nonzero remainder"), remainder_(std::move(remainder)) {}
    const Polynomial& remainder() const { return remainder_; }

private:
    Polynomial remainder_;
};

/// Exact quotient a / b; throws InexactDivisionError when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor. Throws std::domain_error when both inputs
/// are zero. Computed fraction-free over the integers with modular images and
/// certified by trial division, so large inputs stay cheap.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

struct SquarefreeFactor {
    Polynomial factor;  // monic, squarefree
    int multiplicity = 0;
};

struct SquarefreeDecomposition {
    Rational lead;  // a = lead * prod factor_i^multiplicity_i
    std::vector<SquarefreeFactor> factors;
    Polynomial reassemble() const;
};

/// Yun decomposition: monic pairwise-coprime squarefree factors with strictly
/// increasing multiplicities. Throws std::domain_error on the zero polynomial.
SquarefreeDecomposition squarefree_decomposition(const Polynomial& a);

}  // namespace p2g
