#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace turnpike {

enum class FailureReason {
  MalformedInput,
  NotEnoughDistances,
  NoValidatedSolution,
  ReversePassUnderdetermined,
  OrientationUndetermined,
};

constexpr std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::MalformedInput: return "MalformedInput";
    case FailureReason::NotEnoughDistances: return "NotEnoughDistances";
    case FailureReason::NoValidatedSolution: return "NoValidatedSolution";
    case FailureReason::ReversePassUnderdetermined: return "ReversePassUnderdetermined";
    case FailureReason::OrientationUndetermined: return "OrientationUndetermined";
  }
  return "Unknown";
}

/// Thrown by individual solver steps; `solve` converts these into a Failed outcome.
class SolveError : public std::runtime_error {
 public:
  SolveError(FailureReason reason, const std::string& detail)
      : std::runtime_error(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}

  FailureReason reason() const noexcept { return reason_; }

 private:
  FailureReason reason_;
};

}  // namespace turnpike
