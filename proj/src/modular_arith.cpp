#include "modular_arith.hpp"

#include <algorithm>

#include "p2galois/error.hpp"

namespace p2g::detail {

void znormalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdegree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    znormalize(out);
    return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly out = a;
    if (b.size() > out.size()) out.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    znormalize(out);
    return out;
}

ZPoly zscale(const ZPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

ZPoly zderivative(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mpz_class(i) * a[i];
    znormalize(out);
    return out;
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zprimitive(const ZPoly& p) {
    if (p.empty()) return {};
    mpz_class g = zcontent(p);
    if (p.back() < 0) g = -g;
    ZPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] / g;
    return out;
}

ZPoly clear_denominators(const Polynomial& p, mpz_class& denominator) {
    denominator = 1;
    for (const auto& c : p.coefficients())
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly out(p.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Rational& c = p.coefficients()[i];
        out[i] = c.numerator() * (denominator / c.denominator());
    }
    znormalize(out);
    return out;
}

Polynomial to_polynomial(const ZPoly& p, const mpz_class& denominator) {
    std::vector<Rational> coeffs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[i] = Rational(p[i], denominator);
    return Polynomial(std::move(coeffs));
}

bool zdivides(const ZPoly& b_in, const ZPoly& a_in) {
    if (a_in.empty()) return true;
    if (b_in.empty() || a_in.size() < b_in.size()) return false;
    // Gauss: primitive(b) | primitive(a) over Z iff b | a over Q, and then the
    // quotient is integral, so every leading-coefficient division is exact.
    ZPoly a = zprimitive(a_in), b = zprimitive(b_in);
    ZPoly rem = a;
    while (rem.size() >= b.size() && !rem.empty()) {
        if (!mpz_divisible_p(rem.back().get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        std::size_t shift = rem.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= q * b[i];
        znormalize(rem);
    }
    return rem.empty();
}

PrimeSequence::PrimeSequence() {
    // Just below 2^62 so products fit comfortably in unsigned __int128.
    state_ = mpz_class(1);
    state_ <<= 62;
}

std::uint64_t PrimeSequence::next() {
    mpz_nextprime(state_.get_mpz_t(), state_.get_mpz_t());
    return state_.get_ui();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

void mnormalize(ModPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

ModPoly mmonic(const ModPoly& a) {
    ModPoly out = a;
    if (out.c.empty()) return out;
    u64 inv = invmod(out.c.back(), out.p);
    for (auto& x : out.c) x = mulmod(x, inv, out.p);
    return out;
}

// Remainder of a by b (b nonzero), in place on a copy.
ModPoly mrem(ModPoly a, const ModPoly& b) {
    u64 p = b.p;
    u64 lcinv = invmod(b.c.back(), p);
    while (a.c.size() >= b.c.size() && !a.c.empty()) {
        u64 factor = mulmod(a.c.back(), lcinv, p);
        std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            u64 sub = mulmod(factor, b.c[i], p);
            u64& tgt = a.c[i + shift];
            tgt = (tgt >= sub) ? tgt - sub : tgt + p - sub;
        }
        mnormalize(a);
    }
    return a;
}

}  // namespace

ModPoly reduce_mod(const ZPoly& a, u64 p) {
    ModPoly out;
    out.p = p;
    out.c.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned long r = mpz_fdiv_ui(a[i].get_mpz_t(), p);
        out.c[i] = r;
    }
    mnormalize(out);
    return out;
}

int mdegree(const ModPoly& a) { return static_cast<int>(a.c.size()) - 1; }

ModPoly mmul(const ModPoly& a, const ModPoly& b) {
    ModPoly out;
    out.p = a.p;
    if (a.c.empty() || b.c.empty()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            u64 prod = mulmod(a.c[i], b.c[j], a.p);
            u64& tgt = out.c[i + j];
            tgt += prod;
            if (tgt >= a.p) tgt -= a.p;
        }
    }
    mnormalize(out);
    return out;
}

ModPoly mgcd(ModPoly a, ModPoly b) {
    while (!b.c.empty()) {
        ModPoly r = mrem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(a);
}

std::optional<ModPoly> minvert(const ModPoly& a, const ModPoly& m) {
    // Extended Euclid on (m, a), tracking only the cofactor of a.
    u64 p = m.p;
    ModPoly r0 = m, r1 = mrem(a, m);
    ModPoly t0{{}, p}, t1{{1}, p};
    while (!r1.c.empty()) {
        // Divide r0 by r1: track quotient application on t.
        ModPoly q{{}, p};
        {
            u64 lcinv = invmod(r1.c.back(), p);
            ModPoly rem = r0;
            q.c.assign(rem.c.size() >= r1.c.size() ? rem.c.size() - r1.c.size() + 1 : 0, 0);
            while (rem.c.size() >= r1.c.size() && !rem.c.empty()) {
                u64 factor = mulmod(rem.c.back(), lcinv, p);
                std::size_t shift = rem.c.size() - r1.c.size();
                q.c[shift] = factor;
                for (std::size_t i = 0; i < r1.c.size(); ++i) {
                    u64 sub = mulmod(factor, r1.c[i], p);
                    u64& tgt = rem.c[i + shift];
                    tgt = (tgt >= sub) ? tgt - sub : tgt + p - sub;
                }
                mnormalize(rem);
            }
            mnormalize(q);
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        ModPoly t2 = t0;  // t2 = t0 - q*t1
        {
            ModPoly qt = mmul(q, t1);
            if (qt.c.size() > t2.c.size()) t2.c.resize(qt.c.size(), 0);
            for (std::size_t i = 0; i < qt.c.size(); ++i) {
                u64& tgt = t2.c[i];
                tgt = (tgt >= qt.c[i]) ? tgt - qt.c[i] : tgt + p - qt.c[i];
            }
            mnormalize(t2);
        }
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (mdegree(r0) != 0) return std::nullopt;  // gcd nontrivial mod p
    u64 scale = invmod(r0.c[0], p);
    for (auto& x : t0.c) x = mulmod(x, scale, p);
    return mrem(std::move(t0), m);
}

ZPoly zgcd(const ZPoly& a_in, const ZPoly& b_in) {
    ZPoly a = zprimitive(a_in), b = zprimitive(b_in);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdegree(a) == 0 || zdegree(b) == 0) return {mpz_class(1)};

    mpz_class lead_gcd;
    mpz_gcd(lead_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    PrimeSequence primes;
    int best_degree = -1;
    mpz_class modulus = 1;
    ZPoly accum;       // symmetric-range lift of lead_gcd * monic gcd image
    ZPoly last_lift;   // lift from the previous round, to detect stabilization

    for (int round = 0; round < 10000; ++round) {
        u64 p = primes.next();
        if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;

        ModPoly g = mgcd(reduce_mod(a, p), reduce_mod(b, p));
        int deg = mdegree(g);
        if (deg == 0) return {mpz_class(1)};
        if (best_degree != -1 && deg > best_degree) continue;  // unlucky prime
        if (best_degree == -1 || deg < best_degree) {
            best_degree = deg;
            modulus = 1;
            accum.assign(deg + 1, mpz_class(0));
            last_lift.clear();
        }

        // Normalize the image so it lifts a fixed integer polynomial.
        u64 target_lc = mpz_fdiv_ui(lead_gcd.get_mpz_t(), p);
        u64 scale = mulmod(target_lc, invmod(g.c.back(), p), p);

        mpz_class pz = static_cast<unsigned long>(p);
        mpz_class new_modulus = modulus * pz;
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (int i = 0; i <= deg; ++i) {
            u64 img = mulmod(g.c[i], scale, p);
            // CRT: find x = accum[i] mod modulus, x = img mod p.
            mpz_class rp = static_cast<unsigned long>(mpz_fdiv_ui(accum[i].get_mpz_t(), p));
            mpz_class diff = (mpz_class(static_cast<unsigned long>(img)) - rp) % pz;
            if (diff < 0) diff += pz;
            accum[i] += modulus * ((diff * minv) % pz);
            accum[i] %= new_modulus;
        }
        modulus = new_modulus;

        ZPoly lift(accum.size());
        mpz_class half = modulus / 2;
        for (std::size_t i = 0; i < accum.size(); ++i)
            lift[i] = accum[i] > half ? mpz_class(accum[i] - modulus) : accum[i];
        znormalize(lift);

        if (zdegree(lift) == best_degree && lift == last_lift) {
            ZPoly candidate = zprimitive(lift);
            if (zdivides(candidate, a) && zdivides(candidate, b)) return candidate;
        }
        last_lift = std::move(lift);
    }
    throw InternalError("zgcd: modular reconstruction did not converge");
}

std::optional<Rational> rational_reconstruct(const mpz_class& u_in, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = u_in % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0) return std::nullopt;
    mpz_class den = t1, num = r1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rational(num, den);
}

std::optional<Polynomial> invert_modulo(const Polynomial& a_in, const Polynomial& m_in) {
    if (m_in.is_zero() || m_in.degree() < 1)
        throw std::domain_error("invert_modulo: modulus must have degree >= 1");
    Polynomial a = divmod(a_in, m_in).remainder;
    if (a.is_zero()) return std::nullopt;
    if (a.is_constant()) return Polynomial(a.coeff(0).reciprocal());

    mpz_class adenom, mdenom;
    ZPoly az = clear_denominators(a, adenom);
    ZPoly mz = clear_denominators(m_in, mdenom);
    mz = zprimitive(mz);

    PrimeSequence primes;
    mpz_class modulus = 1;
    std::vector<mpz_class> accum(mz.size() - 1, mpz_class(0));
    int since_attempt = 0;

    for (int round = 0; round < 20000; ++round) {
        u64 p = primes.next();
        if (mpz_fdiv_ui(mz.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(adenom.get_mpz_t(), p) == 0) continue;

        ModPoly mp = mmonic(reduce_mod(mz, p));
        ModPoly ap = reduce_mod(az, p);
        auto inv = minvert(ap, mp);
        if (!inv) {
            // Either gcd(a, m) != 1 over Q or the prime is unlucky; decide
            // with the certified gcd and bail out honestly when nontrivial.
            Polynomial g = poly_gcd(a, m_in);
            if (!g.is_constant()) return std::nullopt;
            continue;
        }
        // inv is the inverse of (a * adenom^-1 * ...); we inverted az, and
        // a = az / adenom, so a^-1 = adenom * az^-1.
        u64 scale = mpz_fdiv_ui(adenom.get_mpz_t(), p);
        mpz_class pz = static_cast<unsigned long>(p);
        mpz_class new_modulus = modulus * pz;
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t i = 0; i < accum.size(); ++i) {
            u64 img = i < inv->c.size() ? mulmod(inv->c[i], scale, p) : 0;
            mpz_class rp = static_cast<unsigned long>(mpz_fdiv_ui(accum[i].get_mpz_t(), p));
            mpz_class diff = (mpz_class(static_cast<unsigned long>(img)) - rp) % pz;
            if (diff < 0) diff += pz;
            accum[i] += modulus * ((diff * minv) % pz);
            accum[i] %= new_modulus;
        }
        modulus = new_modulus;

        if (++since_attempt >= 2 || round < 2) {
            since_attempt = 0;
            std::vector<Rational> coeffs(accum.size());
            bool ok = true;
            for (std::size_t i = 0; i < accum.size() && ok; ++i) {
                auto c = rational_reconstruct(accum[i], modulus);
                if (!c)
                    ok = false;
                else
                    coeffs[i] = *c;
            }
            if (ok) {
                Polynomial candidate{std::vector<Rational>(coeffs)};
                Polynomial check = divmod(candidate * a, m_in).remainder;
                if (check.is_one()) return candidate;
            }
        }
    }
    throw InternalError("invert_modulo: modular reconstruction did not converge");
}

}  // namespace p2g::detail
