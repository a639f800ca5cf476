#include <doctest.h>

#include "p2galois/expression.hpp"
#include "p2galois/nve.hpp"

using p2g::hamiltonian_value;
using p2g::nve_potential;
using p2g::parse_rational_expression;
using p2g::particular_solution;
using p2g::Polynomial;
using p2g::Rational;
using p2g::RationalFunction;
using p2g::variational_system;
using p2g::VorobevYablonskiTable;

TEST_CASE("Hamiltonian evaluation") {
    RationalFunction z = RationalFunction::variable();
    CHECK(hamiltonian_value(RationalFunction(), RationalFunction(), z, RationalFunction(), Rational(0))
              .is_zero());

    // alpha = 0 solution with F = z^2/8: H = z^2/8 + z^2/8 - z^2/4 = 0
    RationalFunction p = Rational(1, 2) * z;
    RationalFunction F = Rational(1, 8) * (z * z);
    CHECK(hamiltonian_value(RationalFunction(), p, z, F, Rational(0)).is_zero());

    // linear in F
    RationalFunction shift(Rational(7, 3));
    CHECK(hamiltonian_value(RationalFunction(), p, z, F + shift, Rational(0)) -
              hamiltonian_value(RationalFunction(), p, z, F, Rational(0)) ==
          shift);
}

TEST_CASE("particular solutions") {
    VorobevYablonskiTable table;
    RationalFunction z = RationalFunction::variable();

    auto s0 = particular_solution(0, table);
    CHECK(s0.q.is_zero());
    CHECK(s0.p == Rational(1, 2) * z);
    CHECK(s0.F == Rational(1, 8) * (z * z));
    CHECK(s0.hamiltonian_constant == Rational(0));

    auto s1 = particular_solution(1, table);
    CHECK(s1.p == parse_rational_expression("2/z^2 + 1/2*z"));
    CHECK(s1.z == z);

    // flow identities for a range of parameters, including negatives
    for (int n : {-3, -1, 0, 1, 2, 3, 4, 5, 6}) {
        auto s = particular_solution(n, table);
        CHECK(s.q.derivative() == s.p - s.q * s.q - Rational(1, 2) * z);
        CHECK(s.p.derivative() == Rational(2) * (s.q * s.p) + RationalFunction(Rational(n) + Rational(1, 2)));
        CHECK(s.F.derivative() == Rational(1, 2) * s.p);
        CHECK(hamiltonian_value(s.q, s.p, s.z, s.F, Rational(n)) ==
              RationalFunction(s.hamiltonian_constant));
    }
}

TEST_CASE("variational system matches the linearized flow") {
    VorobevYablonskiTable table;
    RationalFunction z = RationalFunction::variable();

    auto v0 = variational_system(0, table);
    CHECK(v0.matrix[1][0] == z);  // 2p with p = z/2
    CHECK(v0.matrix[1][1].is_zero());

    auto v1 = variational_system(1, table);
    CHECK(v1.matrix[0][0] == parse_rational_expression("2/z"));  // -2w with w = -1/z

    for (int n : {0, 1, 4}) {
        auto v = variational_system(n, table);
        CHECK(v.matrix[0][2] == RationalFunction(Rational(-1, 2)));
        CHECK(v.matrix[0][1] == RationalFunction(Rational(1)));
        for (int j = 0; j < 4; ++j) CHECK(v.matrix[2][j].is_zero());
        CHECK(v.matrix[3][1] == RationalFunction(Rational(1, 2)));
        CHECK(v.matrix[3][0].is_zero());
        // the normal block is the upper-left 2x2 block
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(v.nve_block[i][j] == v.matrix[i][j]);
    }
}

TEST_CASE("potential r = 6w^2 + z") {
    VorobevYablonskiTable table;

    CHECK(nve_potential(0, table).r == RationalFunction::variable());
    CHECK(nve_potential(1, table).r == parse_rational_expression("(z^3 + 6)/z^2"));

    auto p2 = nve_potential(2, table);
    CHECK(p2.denominator_S.degree() == 8);
    CHECK(p2.numerator_R.degree() == 9);

    for (int n = 1; n <= 6; ++n) {
        auto problem = nve_potential(n, table);
        CHECK(problem.denominator_S.degree() == 2 * n * n);
        CHECK(problem.numerator_R.degree() == 2 * n * n + 1);
        // even in the parameter
        CHECK(nve_potential(-n, table).r == problem.r);
        // denominator = (Q_n Q_{n+1})^2: one squarefree class of multiplicity 2
        auto dec = p2g::squarefree_decomposition(problem.denominator_S);
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].multiplicity == 2);
        CHECK(dec.factors[0].factor == table.polynomial(n) * table.polynomial(n + 1));
    }
}

TEST_CASE("reduction to a single second-order equation") {
    VorobevYablonskiTable table;
    for (int n : {0, 1, 2, 3, 5}) CHECK(p2g::reduction_identity_check(n, table));
}
