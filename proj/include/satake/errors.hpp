#pragma once

#include <stdexcept>
#include <string>

namespace sph {

/// A needed coefficient lies outside the known window of a truncated series.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EvenCharacteristic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hermitian matrix whose determinant has odd valuation (not of the form g ᵗḡ).
class OddDiscriminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMinor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class WeightMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sph
