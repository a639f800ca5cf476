#include <doctest.h>

#include <random>

#include "p2galois/quotient_ring.hpp"

using p2g::NonInvertibleError;
using p2g::Polynomial;
using p2g::QuotientRingElement;
using p2g::quotient_invert;
using p2g::quotient_reduce;
using p2g::Rational;

TEST_CASE("reduction") {
    Polynomial z = Polynomial::variable();
    CHECK(quotient_reduce(z * z, z).is_zero());
    CHECK(quotient_reduce(z + Polynomial(1), z * z + Polynomial(1)).representative() == z + Polynomial(1));

    // the order-2 pole normalization at n = 1: 6*(T')^2 mod T with T = z
    Polynomial t = z;
    CHECK(quotient_reduce(Rational(6) * (t.derivative() * t.derivative()), t).constant_value() == Rational(6));
}

TEST_CASE("modulus validation") {
    Polynomial z = Polynomial::variable();
    CHECK_THROWS_AS(quotient_reduce(z, z * z), std::domain_error);      // not squarefree
    CHECK_THROWS_AS(quotient_reduce(z, Polynomial(3)), std::domain_error);  // constant modulus
    // non-monic squarefree moduli are normalized
    CHECK(quotient_reduce(z, Rational(2) * z + Polynomial(2)).modulus() == z + Polynomial(1));
}

TEST_CASE("inversion") {
    Polynomial z = Polynomial::variable();
    Polynomial mod = z * z + Polynomial(1);

    CHECK(quotient_invert(quotient_reduce(Polynomial(1), mod)).representative() == Polynomial(1));
    // z * (-z) = -z^2 = 1 mod z^2 + 1
    CHECK(quotient_invert(quotient_reduce(z, mod)).representative() == -z);

    // non-invertible: z shares the factor z with z^2 + z
    try {
        quotient_invert(quotient_reduce(z, z * z + z));
        CHECK(false);
    } catch (const NonInvertibleError& e) {
        CHECK(e.common_factor() == z);
    }
}

TEST_CASE("inverse property on random elements") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coeff(-5, 5);
    Polynomial z = Polynomial::variable();
    Polynomial mod = (z * z + Polynomial(1)) * (z - Polynomial(3));  // squarefree
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 25; ++trial) {
        std::vector<Rational> coeffs(3);
        for (auto& c : coeffs) c = Rational(coeff(rng));
        QuotientRingElement x = quotient_reduce(Polynomial(std::move(coeffs)), mod);
        try {
            QuotientRingElement inv = quotient_invert(x);
            CHECK((inv * x).representative() == Polynomial(1));
            ++tested;
        } catch (const NonInvertibleError&) {
            // fine: hit a zero divisor
        }
    }
    CHECK(tested > 0);
}
