#pragma once

#include <stdexcept>
#include <string>

namespace xyzlab {

/// Base of every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A stated precondition was violated (bad argument shape or range).
struct InvalidInput : Error {
  using Error::Error;
};

/// An intermediate or final integer does not fit in 128 bits.
struct Overflow : Error {
  using Error::Error;
};

/// Trial division left a cofactor that cannot be certified prime.
struct NotFullyFactored : Error {
  using Error::Error;
};

/// A triple input with a zero entry or a nonzero sum.
struct Degenerate : Error {
  using Error::Error;
};

/// kappa0 / Q* need log log H > 0, i.e. H >= 3.
struct HeightTooSmall : Error {
  using Error::Error;
};

/// A run was refused because it would exceed the configured cap.
struct TooLarge : Error {
  using Error::Error;
};

/// zeta(s) requested at or left of its pole (s <= 1).
struct ZetaPole : Error {
  using Error::Error;
};

/// A singular series/integral evaluated at or beyond its abscissa.
struct DivergentParameter : Error {
  using Error::Error;
};

/// Saddle bracket expansion failed (cannot happen for valid input).
struct NoBracket : Error {
  using Error::Error;
};

/// Dickman table argument outside [0, u_max].
struct RangeExceeded : Error {
  using Error::Error;
};

/// pi(y) < 3K in the distinct-prime count heuristic.
struct InsufficientPrimes : Error {
  using Error::Error;
};

/// Bump parameter outside (0, 1/2).
struct BadEpsilon : Error {
  using Error::Error;
};

/// Major-arc cutoff outside (0, 1/4].
struct BadDelta : Error {
  using Error::Error;
};

/// A partial Euler product factor 1 - p^{-s} vanished.
struct PoleFactor : Error {
  using Error::Error;
};

}  // namespace xyzlab
