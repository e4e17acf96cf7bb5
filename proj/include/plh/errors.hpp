#pragma once

#include <stdexcept>
#include <string>

namespace plh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateGeometry : Error { using Error::Error; };
struct InvalidSampling : Error { using Error::Error; };
struct InvalidExponents : Error { using Error::Error; };
struct InvalidPolygon : Error { using Error::Error; };
struct InvalidMesh : Error { using Error::Error; };
struct InvalidBoundaryData : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct OffsetInfeasible : Error { using Error::Error; };
struct ExtensionInvariantViolated : Error { using Error::Error; };
struct BetaOutOfRange : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Thrown when a smallness condition on eps does not hold. `inequality` is a
// stable identifier the CLI uses for its retry log.
struct EpsilonTooLarge : Error {
  std::string inequality;
  EpsilonTooLarge(std::string name, const std::string& detail)
      : Error("eps too large: " + name + " (" + detail + ")"), inequality(std::move(name)) {}
};

// Predicted element counts exceed the configured memory budget.
struct ResourceLimitExceeded : Error {
  double predicted = 0;
  double limit = 0;
  ResourceLimitExceeded(const std::string& what, double pred, double lim)
      : Error(what + ": predicted " + std::to_string(pred) + " > limit " + std::to_string(lim)),
        predicted(pred), limit(lim) {}
};

}  // namespace plh
