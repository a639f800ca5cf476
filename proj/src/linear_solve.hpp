#pragma once

#include <optional>
#include <vector>

#include "p2galois/rational.hpp"

namespace p2g::detail {

// Exact Gaussian elimination over Q. Returns a particular solution of
// M x = rhs with free variables fixed to zero, or nullopt when the system is
// inconsistent. M is given row-major; rows may outnumber columns.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs);

}  // namespace p2g::detail
