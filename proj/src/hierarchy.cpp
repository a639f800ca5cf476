#include "p2galois/hierarchy.hpp"

#include <cstdlib>
#include <string>

#include "p2galois/error.hpp"

namespace p2g {

VorobevYablonskiTable::VorobevYablonskiTable(int depth_limit) : depth_limit_(depth_limit) {
    if (depth_limit < 1) throw std::domain_error("VorobevYablonskiTable: depth limit must be >= 1");
    entries_.push_back(Polynomial(1));  // Q_0
    entries_.push_back(Polynomial(1));  // Q_1
}

Polynomial VorobevYablonskiTable::polynomial(int n) const {
    if (n < 0) throw std::domain_error("VorobevYablonskiTable: negative index");
    if (n > depth_limit_)
        throw std::out_of_range("VorobevYablonskiTable: index " + std::to_string(n) +
                                " exceeds depth limit " + std::to_string(depth_limit_));
    std::lock_guard<std::mutex> lock(mutex_);
    const Polynomial z = Polynomial::variable();
    while (static_cast<int>(entries_.size()) <= n) {
        const Polynomial& prev = entries_[entries_.size() - 2];
        const Polynomial& cur = entries_.back();
        Polynomial dcur = cur.derivative();
        Polynomial numer = z * cur * cur + Rational(4) * (dcur * dcur) - Rational(4) * (cur * dcur.derivative());
        try {
            entries_.push_back(exact_divide(numer, prev));
        } catch (const InexactDivisionError&) {
            throw InternalError("VorobevYablonskiTable: recursion division left a remainder at n = " +
                                std::to_string(entries_.size()));
        }
    }
    return entries_[n];
}

Polynomial vy_polynomial(int n, const VorobevYablonskiTable& table) { return table.polynomial(n); }

RationalPIISolution rational_solution(int n, const VorobevYablonskiTable& table) {
    int m = std::abs(n);
    RationalFunction w;
    if (m > 0) {
        Polynomial qn = table.polynomial(m);
        Polynomial qn1 = table.polynomial(m + 1);
        w = RationalFunction(qn.derivative() * qn1 - qn * qn1.derivative(), qn * qn1);
    }
    if (n < 0) w = -w;
    if (!pii_residual(w, Rational(n)).is_zero())
        throw InternalError("rational_solution: residual nonzero at n = " + std::to_string(n));
    return {n, std::move(w)};
}

RationalFunction backlund_step(const RationalFunction& w, int n) {
    if (n < 0) throw std::domain_error("backlund_step: n must be nonnegative");
    const Polynomial& a = w.numerator();
    const Polynomial& b = w.denominator();
    const Polynomial z = Polynomial::variable();
    // 2w^2 + 2w' + z over the common denominator b^2.
    Polynomial d = Rational(2) * (a * a) + Rational(2) * (a.derivative() * b - a * b.derivative()) + z * (b * b);
    if (d.is_zero()) throw std::domain_error("backlund_step: 2w^2 + 2w' + z vanishes identically");
    Rational shift(2L * n + 1);
    return RationalFunction(-(a * d) - shift * (b * b * b), b * d);
}

RationalFunction pii_residual(const RationalFunction& w, const Rational& alpha) {
    const Polynomial& a = w.numerator();
    const Polynomial& b = w.denominator();
    const Polynomial z = Polynomial::variable();
    // w'' = ((a''b - a b'')b - 2b'(a'b - a b')) / b^3; assemble the whole
    // residual over b^3 so no intermediate reduction is needed.
    Polynomial da = a.derivative(), db = b.derivative();
    Polynomial numer = (a.derivative().derivative() * b - a * b.derivative().derivative()) * b -
                       Rational(2) * (db * (da * b - a * db)) - Rational(2) * (a * a * a) - z * (a * (b * b)) -
                       alpha * (b * b * b);
    if (numer.is_zero()) return {};
    return RationalFunction(std::move(numer), b * b * b);
}

}  // namespace p2g
