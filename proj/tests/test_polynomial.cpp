#include <doctest.h>

#include <random>

#include "p2galois/polynomial.hpp"

using p2g::exact_divide;
using p2g::InexactDivisionError;
using p2g::Polynomial;
using p2g::poly_gcd;
using p2g::Rational;

namespace {

Polynomial from_ints(std::initializer_list<long> ascending) {
    std::vector<Rational> coeffs;
    for (long c : ascending) coeffs.emplace_back(c);
    return Polynomial(std::move(coeffs));
}

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = Rational(coeff(rng));
    return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("polynomial normal form and degree") {
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}) == Polynomial(1));
    CHECK_THROWS_AS(Polynomial().degree(), std::logic_error);
    CHECK(from_ints({4, 0, 0, 1}).degree() == 3);
    CHECK(from_ints({4, 0, 0, 1}).leading_coefficient() == Rational(1));
    CHECK(Polynomial::variable().degree() == 1);
    CHECK(Polynomial::monomial(Rational(3), 2) == from_ints({0, 0, 3}));
}

TEST_CASE("division with remainder") {
    Polynomial z = Polynomial::variable();
    auto d = p2g::divmod(z * z - Polynomial(1), z - Polynomial(1));
    CHECK(d.quotient == z + Polynomial(1));
    CHECK(d.remainder.is_zero());

    CHECK(exact_divide(from_ints({4, 0, 0, 1}), Polynomial(1)) == from_ints({4, 0, 0, 1}));
    // one hierarchy recursion step, divided by Q_2 = z
    CHECK(exact_divide(from_ints({0, -80, 0, 0, 20, 0, 0, 1}), z) == from_ints({-80, 0, 0, 20, 0, 0, 1}));

    auto inexact = p2g::divmod(z * z + Polynomial(1), z);
    CHECK(inexact.remainder == Polynomial(1));
    CHECK_THROWS_AS(exact_divide(z * z + Polynomial(1), z), InexactDivisionError);
    try {
        exact_divide(z * z + Polynomial(1), z);
    } catch (const InexactDivisionError& e) {
        CHECK(e.remainder() == Polynomial(1));
    }
    CHECK_THROWS_AS(p2g::divmod(z, Polynomial()), std::domain_error);
}

TEST_CASE("gcd basics") {
    Polynomial z = Polynomial::variable();
    CHECK(poly_gcd(z * z - Polynomial(1), z - Polynomial(1)) == z - Polynomial(1));
    // consecutive hierarchy polynomials are coprime
    CHECK(poly_gcd(z, from_ints({4, 0, 0, 1})) == Polynomial(1));
    CHECK(poly_gcd(Rational(3) * z, Polynomial()) == z);
    CHECK(poly_gcd(Polynomial(), Rational(-2) * (z * z)) == z * z);
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), std::domain_error);
}

TEST_CASE("gcd of scaled multiples and random products") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6), g = random_poly(rng, 4);
        if (g.is_zero()) continue;
        if (a.is_zero() && b.is_zero()) continue;
        Polynomial divisor = poly_gcd(a * g, b * g);
        // g divides the gcd of the scaled pair
        if (!(a * g).is_zero() || !(b * g).is_zero()) {
            CHECK(p2g::divmod(divisor, g.monic()).remainder.is_zero());
        }
    }
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("derivative rules") {
    Polynomial z = Polynomial::variable();
    CHECK(from_ints({4, 0, 0, 1}).derivative() == Rational(3) * (z * z));
    CHECK(Polynomial(7).derivative().is_zero());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial a = random_poly(rng, 5), b = random_poly(rng, 5);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("squarefree decomposition") {
    Polynomial z = Polynomial::variable();
    Polynomial q3 = from_ints({4, 0, 0, 1});

    SUBCASE("hierarchy-style denominator: all roots at multiplicity 2") {
        Polynomial s = (z * q3) * (z * q3);
        auto dec = p2g::squarefree_decomposition(s);
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].factor == z * q3);
        CHECK(dec.factors[0].multiplicity == 2);
        CHECK(dec.reassemble() == s);
    }
    SUBCASE("simple cases") {
        auto dec = p2g::squarefree_decomposition(z);
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].factor == z);
        CHECK(dec.factors[0].multiplicity == 1);

        Polynomial cube = (z - Polynomial(1)) * (z - Polynomial(1)) * (z - Polynomial(1));
        dec = p2g::squarefree_decomposition(cube);
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].factor == z - Polynomial(1));
        CHECK(dec.factors[0].multiplicity == 3);
    }
    SUBCASE("mixed multiplicities, random reassembly, squarefree parts") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 30; ++trial) {
            Polynomial a = random_poly(rng, 3), b = random_poly(rng, 2);
            if (a.is_zero() || b.is_zero()) continue;
            Polynomial p = a * (b * b);
            auto dec = p2g::squarefree_decomposition(p);
            CHECK(dec.reassemble() == p);
            int last = 0;
            for (const auto& f : dec.factors) {
                CHECK(f.factor.is_monic());
                CHECK(f.multiplicity > last);
                last = f.multiplicity;
                CHECK(poly_gcd(f.factor, f.factor.derivative()) == Polynomial(1));
            }
        }
    }
    SUBCASE("zero rejected") { CHECK_THROWS_AS(p2g::squarefree_decomposition(Polynomial()), std::domain_error); }
}
