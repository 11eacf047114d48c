#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hg {

using Int = std::int64_t;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A closed-form count was requested outside its hypotheses.  Carries the
// violated hypothesis by name; callers must not conflate this with a zero
// count (genuine zeros exist, e.g. dihedral type over a non-coprime product).
struct PreconditionError : Error {
  std::string condition;
  PreconditionError(std::string cond, const std::string& msg)
      : Error(msg), condition(std::move(cond)) {}
};

// An enumeration would exceed the configured size guard.
struct SizeGuardError : Error {
  Int required;
  Int guard;
  SizeGuardError(Int required_, Int guard_, const std::string& subject)
      : Error(subject + " needs size " + std::to_string(required_) +
              " which exceeds the guard " + std::to_string(guard_)),
        required(required_),
        guard(guard_) {}
};

// Consistency failure that indicates a bug, not bad input (e.g. a conversion
// ratio that should always be integral coming out fractional).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace hg
