#pragma once

// Modular-image kernel backing poly_gcd and quotient-ring inversion.
//
// Both operations are computed from images modulo word-size primes and then
// certified in exact arithmetic (trial division for gcd, residual check for
// inverses), so an unlucky prime can never leak a wrong answer; it only costs
// another prime.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "p2galois/polynomial.hpp"

namespace p2g::detail {

// Integer polynomial, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void znormalize(ZPoly& p);
int zdegree(const ZPoly& p);  // -1 for zero
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zscale(const ZPoly& a, const mpz_class& c);
ZPoly zderivative(const ZPoly& a);

// content >= 0; content of zero polynomial is 0.
mpz_class zcontent(const ZPoly& p);
// primitive part with positive leading coefficient; zero stays zero.
ZPoly zprimitive(const ZPoly& p);

// p written as (integer polynomial) / denominator with denominator > 0.
ZPoly clear_denominators(const Polynomial& p, mpz_class& denominator);
Polynomial to_polynomial(const ZPoly& p, const mpz_class& denominator = 1);

// true when b (nonzero) divides a exactly over the rationals.
bool zdivides(const ZPoly& b, const ZPoly& a);

// Deterministic sequence of ~62-bit primes.
class PrimeSequence {
public:
    PrimeSequence();
    std::uint64_t next();

private:
    mpz_class state_;
};

// Dense polynomial over GF(p), p < 2^63, ascending coefficients.
struct ModPoly {
    std::vector<std::uint64_t> c;
    std::uint64_t p = 0;
};

ModPoly reduce_mod(const ZPoly& a, std::uint64_t p);
int mdegree(const ModPoly& a);
ModPoly mmul(const ModPoly& a, const ModPoly& b);
// Monic gcd in GF(p)[z].
ModPoly mgcd(ModPoly a, ModPoly b);
// Inverse of a modulo m in GF(p)[z]; nullopt when gcd(a, m) != 1 mod p.
std::optional<ModPoly> minvert(const ModPoly& a, const ModPoly& m);

// Certified gcd of integer polynomials: primitive with positive leading
// coefficient. Assumes not both zero.
ZPoly zgcd(const ZPoly& a, const ZPoly& b);

// Certified inverse of a modulo m over Q[z]: returns b with
// a*b = 1 (mod m), deg b < deg m. Requires deg m >= 1. Returns nullopt
// when gcd(a, m) is nontrivial.
std::optional<Polynomial> invert_modulo(const Polynomial& a, const Polynomial& m);

// Rational reconstruction of residue u modulo m (Wang bounds). Returns
// nullopt when no representative with |num|, den <= sqrt(m/2) exists.
std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m);

}  // namespace p2g::detail
