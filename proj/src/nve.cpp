#include "p2galois/nve.hpp"

#include <string>

#include "p2galois/error.hpp"
#include "p2galois/integration.hpp"

namespace p2g {

namespace {
const Rational kHalf(1, 2);
}

RationalFunction hamiltonian_value(const RationalFunction& q, const RationalFunction& p,
                                   const RationalFunction& z, const RationalFunction& F,
                                   const Rational& alpha) {
    return kHalf * (p * p) + F - (q * q + kHalf * z) * p - (alpha + kHalf) * q;
}

ParticularSolution particular_solution(int n, const VorobevYablonskiTable& table) {
    RationalFunction w = rational_solution(n, table).w;
    RationalFunction z = RationalFunction::variable();
    RationalFunction q = w;
    RationalFunction p = w.derivative() + w * w + kHalf * z;
    RationalFunction F = integrate_rational(kHalf * p);
    Rational alpha(n);

    // Flow identities: q' = p - q^2 - z/2, p' = 2qp + alpha + 1/2, F' = p/2.
    if (q.derivative() != p - q * q - kHalf * z)
        throw InternalError("particular_solution: q' identity fails at n = " + std::to_string(n));
    if (p.derivative() != Rational(2) * (q * p) + RationalFunction(alpha + kHalf))
        throw InternalError("particular_solution: p' identity fails at n = " + std::to_string(n));
    if (F.derivative() != kHalf * p)
        throw InternalError("particular_solution: F' identity fails at n = " + std::to_string(n));

    RationalFunction h = hamiltonian_value(q, p, z, F, alpha);
    if (!h.is_constant())
        throw InternalError("particular_solution: Hamiltonian not constant along the solution at n = " +
                            std::to_string(n));
    return {n, std::move(q), std::move(p), std::move(z), std::move(F), h.is_zero() ? Rational(0) : h.constant_value()};
}

VariationalSystem variational_system(int n, const VorobevYablonskiTable& table) {
    ParticularSolution sol = particular_solution(n, table);
    const RationalFunction& w = sol.q;
    const RationalFunction& p = sol.p;

    VariationalSystem out;
    // Jacobian of (p - q^2 - z/2, 2qp + alpha + 1/2, 1, p/2) in (q, p, z, F),
    // evaluated along the solution.
    out.matrix[0] = {Rational(-2) * w, RationalFunction(1), RationalFunction(Rational(-1, 2)), RationalFunction()};
    out.matrix[1] = {Rational(2) * p, Rational(2) * w, RationalFunction(), RationalFunction()};
    out.matrix[2] = {RationalFunction(), RationalFunction(), RationalFunction(), RationalFunction()};
    out.matrix[3] = {RationalFunction(), RationalFunction(kHalf), RationalFunction(), RationalFunction()};
    out.nve_block = {{{out.matrix[0][0], out.matrix[0][1]}, {out.matrix[1][0], out.matrix[1][1]}}};
    return out;
}

NVEProblem nve_potential(int n, const VorobevYablonskiTable& table) {
    RationalFunction w = rational_solution(n, table).w;
    RationalFunction r = Rational(6) * (w * w) + RationalFunction::variable();

    NVEProblem out{n, r, r.numerator(), r.denominator()};
    if (n != 0) {
        long n2 = 2L * n * n;
        if (out.denominator_S.is_zero() || out.denominator_S.degree() != n2 ||
            out.numerator_R.degree() != n2 + 1)
            throw InternalError("nve_potential: degree invariant fails at n = " + std::to_string(n));
    }
    return out;
}

bool reduction_identity_check(int n, const VorobevYablonskiTable& table) {
    VariationalSystem sys = variational_system(n, table);
    const auto& m = sys.nve_block;
    // xi'' = (a + d) xi' + (a' + bc - ad) xi for xi' = a xi + b eta,
    // eta' = c xi + d eta. The reduction to xi'' = r xi needs a + d = 0 and
    // the xi-coefficient equal to the potential.
    RationalFunction trace = m[0][0] + m[1][1];
    RationalFunction coeff = m[0][0].derivative() + m[0][1] * m[1][0] - m[0][0] * m[1][1];

    RationalFunction w = rational_solution(n, table).w;
    RationalFunction p = w.derivative() + w * w + kHalf * RationalFunction::variable();
    RationalFunction direct = Rational(-2) * w.derivative() + Rational(2) * p + Rational(4) * (w * w);
    RationalFunction target = nve_potential(n, table).r;
    return trace.is_zero() && coeff == target && direct == target;
}

}  // namespace p2g
