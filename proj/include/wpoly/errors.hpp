#pragma once

#include <stdexcept>
#include <string>

namespace wpoly {

// Error taxonomy shared by all modules. Everything derives from Error so
// callers (the CLI in particular) can map failures to exit codes uniformly.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixed variable counts between operands.
struct DimensionError : Error {
  using Error::Error;
};

// A linear form evaluated to zero where a nonzero denominator was required.
struct PoleError : Error {
  using Error::Error;
};

// A denominator vanished on the certification grid; caller must re-offset.
struct GridConfigError : Error {
  using Error::Error;
};

// Parameter choice violates genericity (colliding spectral points, vanishing
// evaluation, ...). The message names the offending data.
struct DegenerateParameterError : Error {
  using Error::Error;
};

// Caller violated a stated precondition (non-dominant weight, non-invariant
// polynomial, index out of range, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A word claimed reduced produced a repeated or non-positive inversion root.
struct ReducednessError : Error {
  using Error::Error;
};

// Malformed affine root data.
struct ShapeError : Error {
  using Error::Error;
};

// Bad CLI flags or config file contents.
struct ConfigError : Error {
  using Error::Error;
};

// Conditions the algebra guarantees impossible (exact divisibility inside a
// generator action, two-route disagreement). Treated as fatal.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace wpoly
