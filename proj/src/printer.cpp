#include "p2galois/printer.hpp"

namespace p2g {

namespace {

// "z^k", "c*z^k", with the unit coefficient and first-power cases contracted.
std::string format_monomial(const Rational& c, int k) {
    std::string power = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    if (k == 0) return c.str();
    if (c.is_one()) return power;
    if ((-c).is_one()) return "-" + power;
    return c.str() + "*" + power;
}

int term_count(const Polynomial& p) {
    int n = 0;
    for (const auto& c : p.coefficients())
        if (!c.is_zero()) ++n;
    return n;
}

// True when the text can stand as a denominator without parentheses: a bare
// power of z or a positive integer.
bool simple_denominator(const Polynomial& p) {
    if (term_count(p) != 1) return false;
    const Rational& lead = p.leading_coefficient();
    if (p.degree() == 0) return lead.is_integer() && lead.sign() > 0;
    return lead.is_one();
}

}  // namespace

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        if (out.empty()) {
            out = format_monomial(c, k);
        } else if (c.sign() > 0) {
            out += " + " + format_monomial(c, k);
        } else {
            out += " - " + format_monomial(-c, k);
        }
    }
    return out;
}

std::string format_rational(const RationalFunction& f) {
    if (f.is_polynomial()) return format_polynomial(f.numerator());
    std::string numerator = format_polynomial(f.numerator());
    if (term_count(f.numerator()) > 1) numerator = "(" + numerator + ")";
    std::string denominator = format_polynomial(f.denominator());
    if (!simple_denominator(f.denominator())) denominator = "(" + denominator + ")";
    return numerator + "/" + denominator;
}

}  // namespace p2g
