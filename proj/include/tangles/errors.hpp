#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input-contract violations.
struct NotABijection : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct PositionOutOfRange : Error { using Error::Error; };
struct LocationOutOfRange : Error { using Error::Error; };
struct PatternLargerThanHost : Error { using Error::Error; };
struct KTooSmall : Error { using Error::Error; };
struct DoesNotSolve : Error { using Error::Error; };
struct NotAMarkingFor : Error { using Error::Error; };
struct NotBalancedInput : Error { using Error::Error; };
struct SizeGuard : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct MalformedJson : Error { using Error::Error; };
struct SchemaViolation : Error { using Error::Error; };

// A structural claim with a proof behind it failed at runtime. Always a bug,
// never an input condition.
struct InvariantViolation : Error { using Error::Error; };

inline void require_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace tangles
