#include <doctest.h>

#include <random>

#include "p2galois/integration.hpp"

using p2g::integrate_rational;
using p2g::NonRationalAntiderivativeError;
using p2g::Polynomial;
using p2g::Rational;
using p2g::RationalFunction;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = Rational(coeff(rng));
    return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("basic antiderivatives") {
    Polynomial z = Polynomial::variable();
    CHECK(integrate_rational(RationalFunction(Polynomial(1), z * z)) ==
          RationalFunction(-Polynomial(1), z));
    CHECK(integrate_rational(RationalFunction(z)) == RationalFunction(Rational(1, 2) * (z * z)));
    CHECK(integrate_rational(RationalFunction()).is_zero());
}

TEST_CASE("logarithmic obstruction names the factor") {
    Polynomial z = Polynomial::variable();
    try {
        integrate_rational(RationalFunction(Polynomial(1), z));
        CHECK(false);
    } catch (const NonRationalAntiderivativeError& e) {
        REQUIRE(e.offending_factors().size() == 1);
        CHECK(e.offending_factors()[0] == z);
    }

    // residue-free at z but not at z - 1
    RationalFunction f = RationalFunction(Polynomial(1), z * z) +
                         RationalFunction(Polynomial(1), z - Polynomial(1));
    try {
        integrate_rational(f);
        CHECK(false);
    } catch (const NonRationalAntiderivativeError& e) {
        REQUIRE(e.offending_factors().size() == 1);
        CHECK(e.offending_factors()[0] == z - Polynomial(1));
    }
}

TEST_CASE("derivative of the antiderivative is the identity") {
    std::mt19937 rng(31337);
    Polynomial z = Polynomial::variable();
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial den = random_poly(rng, 3);
        if (den.is_zero()) continue;
        // f = g' is residue-free by construction
        RationalFunction g(random_poly(rng, 4), den);
        RationalFunction f = g.derivative();
        RationalFunction anti = integrate_rational(f);
        CHECK(anti.derivative() == f);
        ++tested;
    }
    CHECK(tested > 10);
}

TEST_CASE("higher-order poles and mixed denominators") {
    Polynomial z = Polynomial::variable();
    // 1/z^3 -> -1/(2 z^2)
    CHECK(integrate_rational(RationalFunction(Polynomial(1), z * z * z)) ==
          RationalFunction(Polynomial(Rational(-1, 2)), z * z));
    // (3 z^2 + 1)/(z^3 + z)^2: derivative of -1/(z^3 + z)
    Polynomial den = (z * z * z + z) * (z * z * z + z);
    RationalFunction f(Rational(3) * (z * z) + Polynomial(1), den);
    CHECK(integrate_rational(f) == RationalFunction(-Polynomial(1), z * z * z + z));
}
