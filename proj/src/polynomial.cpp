#include "p2galois/polynomial.hpp"

#include <utility>

#include "modular_arith.hpp"
#include "p2galois/error.hpp"

namespace p2g {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
    if (k < 0) throw std::domain_error("Polynomial::monomial: negative exponent");
    if (c.is_zero()) return {};
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int Polynomial::degree() const {
    if (is_zero()) throw std::logic_error("Polynomial::degree: zero polynomial has no degree");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::leading_coefficient() const {
    if (is_zero()) throw std::logic_error("Polynomial::leading_coefficient: zero polynomial");
    return coeffs_.back();
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    return leading_coefficient().reciprocal() * *this;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) out[i] -= b.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return {};
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(1);
    Polynomial acc = base;
    while (exponent) {
        if (exponent & 1u) result = result * acc;
        exponent >>= 1u;
        if (exponent) acc = acc * acc;
    }
    return result;
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    PolyDivision out;
    out.remainder = a;
    if (a.is_zero() || a.degree() < b.degree()) return out;

    int db = b.degree();
    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quot(a.degree() - db + 1);
    Rational lc_inv = b.leading_coefficient().reciprocal();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k].is_zero()) continue;
        Rational q = rem[k] * lc_inv;
        quot[k - db] = q;
        for (int i = 0; i <= db; ++i) {
            const Rational& bc = b.coeff(i);
            if (!bc.is_zero()) rem[k - db + i] -= q * bc;
        }
    }
    out.quotient = Polynomial(std::move(quot));
    out.remainder = Polynomial(std::move(rem));
    return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    PolyDivision d = divmod(a, b);
    if (!d.exact()) throw InexactDivisionError(std::move(d.remainder));
    return d.quotient;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);

    mpz_class da, db;
    detail::ZPoly za = detail::clear_denominators(a, da);
    detail::ZPoly zb = detail::clear_denominators(b, db);
    return detail::to_polynomial(detail::zgcd(za, zb)).monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_divide(a * b, poly_gcd(a, b)).monic();
}

Polynomial SquarefreeDecomposition::reassemble() const {
    Polynomial out(lead);
    for (const auto& f : factors) out = out * pow(f.factor, static_cast<unsigned>(f.multiplicity));
    return out;
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& a) {
    if (a.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    SquarefreeDecomposition out;
    out.lead = a.leading_coefficient();
    if (a.is_constant()) return out;

    // Yun's algorithm on the monic normalization.
    Polynomial f = a.monic();
    Polynomial fp = f.derivative();
    Polynomial g = poly_gcd(f, fp);
    Polynomial c = exact_divide(f, g);
    Polynomial d = exact_divide(fp, g) - c.derivative();
    int multiplicity = 1;
    while (!c.is_constant()) {
        Polynomial fac = poly_gcd(c, d);
        if (!fac.is_constant()) out.factors.push_back({fac, multiplicity});
        c = exact_divide(c, fac);
        d = exact_divide(d, fac) - c.derivative();
        ++multiplicity;
    }
    return out;
}

}  // namespace p2g
