#pragma once

#include <stdexcept>
#include <string>

namespace isect {

/// Thrown when an argument violates an operation's precondition
/// (sizes, containment, universe mismatch, out-of-range selectors).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an input does not satisfy a property the caller promised,
/// e.g. asking for maximality of a family that is not r-wise t-intersecting.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw parameter_error(what);
}

}  // namespace detail
}  // namespace isect
