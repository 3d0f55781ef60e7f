#pragma once

#include <stdexcept>
#include <string>

namespace horncalc {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file syntax, schema violation, unparsable rational.
struct ParseError : Error {
  using Error::Error;
};

// The operation is well-formed but does not apply to the given object
// (maps to CLI exit code 2).
struct NotApplicable : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular") {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct EmptyInput : Error {
  EmptyInput() : Error("empty input") {}
};

struct NonPositive : Error {
  NonPositive() : Error("argument must be a positive integer") {}
};

struct NonCollinear : Error {
  NonCollinear() : Error("support is not collinear along the given direction") {}
};

struct NotZonotope : NotApplicable {
  NotZonotope() : NotApplicable("rows do not split into plus/minus pairs") {}
};

struct NotNonconfluent : NotApplicable {
  NotNonconfluent() : NotApplicable("rows do not sum to zero") {}
};

struct NonPolynomialRegime : NotApplicable {
  NonPolynomialRegime()
      : NotApplicable("some -alpha_i - beta_i is not a positive integer") {}
};

struct NotParallelogram : NotApplicable {
  NotParallelogram() : NotApplicable("system does not have exactly two divisor pairs") {}
};

struct SingularPair : NotApplicable {
  SingularPair() : NotApplicable("divisor pair matrix is singular") {}
};

struct KTooSmall : NotApplicable {
  KTooSmall() : NotApplicable("zonotope estimate needs at least two divisor pairs") {}
};

}  // namespace horncalc
