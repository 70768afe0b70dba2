#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace statesurf {

enum class ErrorKind {
  MalformedToken,
  ArcPairing,
  NonPlanar,
  Disconnected,
  InconsistentOrientation,
  UnknownCrossing,
  IncompleteState,
  EdgeNotPresent,
  ExponentParity,
  HypothesisViolated,
  NotAlternating,
  BranchLimitExceeded,
  ParityError,
  NoCrossings,
  NegativeSpan,
  CrossingLimitExceeded,
};

std::string_view to_string(ErrorKind kind);

// Every library failure surfaces as this exception; `kind()` lets callers
// (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Input errors are the user's fault (bad PD text); the rest are either
  // hypothesis failures or internal invariants.
  bool is_input_error() const noexcept {
    switch (kind_) {
      case ErrorKind::MalformedToken:
      case ErrorKind::ArcPairing:
      case ErrorKind::NonPlanar:
      case ErrorKind::Disconnected:
      case ErrorKind::InconsistentOrientation:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace statesurf
