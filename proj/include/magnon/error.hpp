#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "magnon/lattice.hpp"

namespace magnon {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

// Super-exchange denominator vanishes when the photon energy equals U.
class ResonancePole : public Error {
public:
  using Error::Error;
};

// Mode-coupling ratio |Gamma| or |Upsilon| reached 1, or the instantaneous
// diagonal energy went non-positive. Carries the offending k when known.
class InstabilityError : public Error {
public:
  InstabilityError(const std::string& what, double magnitude,
                   std::optional<KVector> k = std::nullopt)
      : Error(what), magnitude_(magnitude), k_(k) {}

  double magnitude() const noexcept { return magnitude_; }
  const std::optional<KVector>& k() const noexcept { return k_; }

  /// Rethrows the same dynamic type with k attached to the message.
  [[noreturn]] void rethrow_at(const KVector& k) const;

private:
  double magnitude_;
  std::optional<KVector> k_;
};

class SofteningError : public InstabilityError {
public:
  using InstabilityError::InstabilityError;
};

} // namespace magnon
