#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgp {

using Int = std::int64_t;

enum class Errc {
  EmptyInput,
  InvalidArgument,
  GcdNotOne,
  ResourceLimit,
  NotInSemigroup,
  BelowConductor,
  MbarTooSmall,
  NotSymmetric,
  NotDim2,
  BaseIsWholeGround,
  HypothesisViolated,
  BudgetExceeded,
  OutOfRange,
  BadField,
  BadStrip,
  EmptySet,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every library operation. The code identifies the
/// violated precondition; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sgp
