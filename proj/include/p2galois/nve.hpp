#pragma once

#include <array>

#include "p2galois/hierarchy.hpp"
#include "p2galois/rational_function.hpp"

namespace p2g {

/// The extended Hamiltonian p^2/2 + F - (q^2 + z/2) p - (alpha + 1/2) q
/// evaluated symbolically.
RationalFunction hamiltonian_value(const RationalFunction& q, const RationalFunction& p,
                                   const RationalFunction& z, const RationalFunction& F,
                                   const Rational& alpha);

/// Rational particular solution of the extended Hamiltonian system at
/// integer parameter n: q = w(z,n), p = w' + w^2 + z/2, z the identity,
/// F the (rational) antiderivative of p/2 with integration constant 0.
/// All four flow identities are verified exactly at construction, and the
/// Hamiltonian is checked to be constant along the solution.
struct ParticularSolution {
    int parameter_n = 0;
    RationalFunction q;
    RationalFunction p;
    RationalFunction z;
    RationalFunction F;
    Rational hamiltonian_constant;
};

ParticularSolution particular_solution(int n, const VorobevYablonskiTable& table);

/// Linearization of the flow along the particular solution, plus its
/// upper-left 2x2 block (the normal variational equations).
struct VariationalSystem {
    std::array<std::array<RationalFunction, 4>, 4> matrix;
    std::array<std::array<RationalFunction, 2>, 2> nve_block;
};

VariationalSystem variational_system(int n, const VorobevYablonskiTable& table);

/// The second-order potential r(z) = 6 w(z,n)^2 + z with its reduced
/// numerator and denominator. Degree invariants (deg S = 2n^2,
/// deg R = 2n^2 + 1) are asserted for n >= 1.
struct NVEProblem {
    int parameter_n = 0;
    RationalFunction r;
    Polynomial numerator_R;
    Polynomial denominator_S;
};

NVEProblem nve_potential(int n, const VorobevYablonskiTable& table);

/// Checks symbolically that eliminating the second component from the 2x2
/// block yields xi'' = (6w^2 + z) xi: the trace of the block vanishes and
/// -2w' + 2p + 4w^2 reduces to 6w^2 + z.
bool reduction_identity_check(int n, const VorobevYablonskiTable& table);

}  // namespace p2g
