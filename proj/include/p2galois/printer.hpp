#pragma once

#include <string>

#include "p2galois/rational_function.hpp"

namespace p2g {

/// Deterministic rendering, decreasing degree, "*" between coefficient and z:
/// "z^6 + 20*z^3 - 80", "-z", "1/2*z^2 + 1", "0".
std::string format_polynomial(const Polynomial& p);

/// Canonical fraction rendering; parses back to the identical value:
/// "-1/z", "(z^3 + 6)/z^2", "(-2*z^3 + 4)/(z^4 + 4*z)".
std::string format_rational(const RationalFunction& f);

}  // namespace p2g
