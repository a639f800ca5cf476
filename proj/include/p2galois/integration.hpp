#pragma once

#include <vector>

#include "p2galois/rational_function.hpp"

namespace p2g {

/// Raised when an integrand has a nonzero residue somewhere, so its
/// antiderivative picks up logarithms and leaves the rational functions.
/// Carries the squarefree denominator factors whose roots obstruct.
class NonRationalAntiderivativeError : public std::domain_error {
public:
    explicit NonRationalAntiderivativeError(std::vector<Polynomial> offending)
        : std::domain_error("integrate_rational: nonzero residue, antiderivative is not rational"),
          offending_(std::move(offending)) {}
    const std::vector<Polynomial>& offending_factors() const { return offending_; }

private:
    std::vector<Polynomial> offending_;
};

/// Exact antiderivative with integration constant 0. The integrand must be
/// residue-free (checked internally via Hermite reduction); otherwise throws
/// NonRationalAntiderivativeError naming the offending squarefree factors.
RationalFunction integrate_rational(const RationalFunction& f);

}  // namespace p2g
