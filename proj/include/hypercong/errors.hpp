#pragma once

#include <stdexcept>

namespace hypercong {

// A denominator is divisible by the working prime.
struct NonPIntegralError : std::domain_error {
  using std::domain_error::domain_error;
};

// A modular division required the inverse of a non-unit of Z/p^e.
struct NonUnitDenominatorError : std::domain_error {
  using std::domain_error::domain_error;
};

// An exact denominator vanished, or an operation's integer argument makes
// the expression undefined (e.g. p | b in the rewriting identity).
struct ZeroDenominatorError : std::domain_error {
  using std::domain_error::domain_error;
};

// Power series of different truncation orders were combined.
struct OrderMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A fixed-precision p-adic result has no guaranteed digits left.
struct PrecisionExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The prime argument fails a hypothesis on p (not prime, even, or too small).
struct BadPrimeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Invalid sweep or CLI configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Report output could not be written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hypercong
