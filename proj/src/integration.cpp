#include "p2galois/integration.hpp"

#include "modular_arith.hpp"
#include "p2galois/error.hpp"

namespace p2g {

namespace {

Polynomial integrate_polynomial(const Polynomial& p) {
    if (p.is_zero()) return {};
    std::vector<Rational> out(p.coefficients().size() + 1);
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        out[i + 1] = p.coefficients()[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(out));
}

}  // namespace

RationalFunction integrate_rational(const RationalFunction& f) {
    PolyDivision split = divmod(f.numerator(), f.denominator());
    RationalFunction result(integrate_polynomial(split.quotient));

    // Hermite reduction: peel rational parts off A/D until what remains has a
    // squarefree denominator; that remainder integrates to pure logarithms,
    // so it must vanish entirely for a rational antiderivative.
    RationalFunction h(std::move(split.remainder), f.denominator());
    while (!h.is_zero()) {
        SquarefreeDecomposition dec = squarefree_decomposition(h.denominator());
        int k = dec.factors.empty() ? 0 : dec.factors.back().multiplicity;
        if (k <= 1) break;

        const Polynomial& v = dec.factors.back().factor;
        Polynomial u = exact_divide(h.denominator(), pow(v, static_cast<unsigned>(k)));
        // A/(u v^k) = B v'/v^k + C/(u v^(k-1)) with B = A (u v')^-1 mod v.
        auto inv = detail::invert_modulo(u * v.derivative(), v);
        if (!inv) throw InternalError("integrate_rational: squarefree factor not coprime to u*v'");
        Polynomial b = divmod(h.numerator() * *inv, v).remainder;
        Polynomial c = exact_divide(h.numerator() - b * u * v.derivative(), v);

        Rational step(1, static_cast<long>(k - 1));
        result += RationalFunction(-(step * b), pow(v, static_cast<unsigned>(k - 1)));
        h = RationalFunction(c + step * (u * b.derivative()), u * pow(v, static_cast<unsigned>(k - 1)));
    }

    if (!h.is_zero()) {
        // Denominator squarefree and coprime to the numerator: every root
        // carries a nonzero residue, so every squarefree factor obstructs.
        std::vector<Polynomial> offending;
        for (const auto& fac : squarefree_decomposition(h.denominator()).factors)
            offending.push_back(fac.factor);
        throw NonRationalAntiderivativeError(std::move(offending));
    }
    return result;
}

}  // namespace p2g
