#pragma once

#include <stdexcept>
#include <string>

namespace p2g {

/// Violation of an invariant the library itself guarantees (for example an
/// inexact division inside the hierarchy recursion, where exactness is a
/// theorem). Distinct from domain errors caused by caller input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace p2g
