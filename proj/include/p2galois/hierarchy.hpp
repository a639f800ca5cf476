#pragma once

#include <mutex>
#include <vector>

#include "p2galois/rational_function.hpp"

namespace p2g {

/// Memoized table of the polynomials Q_n generated by the recursion
/// Q_{n+1} Q_{n-1} = z Q_n^2 + 4 Q_n'^2 - 4 Q_n Q_n'' from Q_0 = Q_1 = 1.
/// Entries are grown on demand; growth is serialized behind a mutex and
/// computed entries are immutable, so concurrent reads are safe.
class VorobevYablonskiTable {
public:
    explicit VorobevYablonskiTable(int depth_limit = 16);

    /// Q_n; grows the table as needed. Throws std::out_of_range beyond the
    /// depth limit and InternalError if the recursion division is inexact
    /// (which would mean a bug, since exactness is a theorem).
    Polynomial polynomial(int n) const;

    int depth_limit() const { return depth_limit_; }

private:
    int depth_limit_;
    mutable std::mutex mutex_;
    mutable std::vector<Polynomial> entries_;
};

/// Q_n via the shared table (grows it on demand).
Polynomial vy_polynomial(int n, const VorobevYablonskiTable& table);

struct RationalPIISolution {
    int parameter_n = 0;
    RationalFunction w;
};

/// The rational solution w(z, n) = Q_n'/Q_n - Q_{n+1}'/Q_{n+1}; negative n by
/// the odd symmetry w(z, -n) = -w(z, n). Verified exactly against the defining
/// equation before returning.
RationalPIISolution rational_solution(int n, const VorobevYablonskiTable& table);

/// One Backlund step: w(., n) -> w(., n+1) = -w - (2n+1)/(2w^2 + 2w' + z).
RationalFunction backlund_step(const RationalFunction& w, int n);

/// w'' - 2w^3 - z w - alpha, reduced; identically zero exactly when w solves
/// the equation with parameter alpha.
RationalFunction pii_residual(const RationalFunction& w, const Rational& alpha);

}  // namespace p2g
