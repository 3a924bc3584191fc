#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace covsep {

namespace detail {
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}
}  // namespace detail

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value failed a construction-time invariant. Carries the invariant's
/// name and the offending residual so callers can report exactly what broke.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, double residual)
      : Error("invariant violated: " + invariant +
              " (residual " + detail::format_double(residual) + ")"),
        invariant_(std::move(invariant)),
        residual_(residual) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string invariant_;
  double residual_;
};

/// Input text could not be decoded into the requested type.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The coefficient of the requested pivot variable in the zero-correlation
/// constraint is numerically zero, so that variable cannot be solved for.
class PivotSingular : public Error {
 public:
  explicit PivotSingular(std::string pivot, double coefficient)
      : Error("pivot '" + pivot + "' is singular: coefficient " +
              detail::format_double(coefficient) + " is below tolerance"),
        coefficient_(coefficient) {}

  double coefficient() const noexcept { return coefficient_; }

 private:
  double coefficient_;
};

/// An observable has (numerically) coincident eigenvalues. Its two-outcome
/// measurement table would carry duplicate values, so no two-valued analysis
/// applies.
class DegenerateObservable : public Error {
 public:
  DegenerateObservable(char side, double gap)
      : Error(std::string("observable on side ") + side +
              " is degenerate (eigenvalue gap " + detail::format_double(gap) +
              "): the induced outcome table would repeat a value, and a "
              "two-outcome variable requires two distinct values"),
        side_(side),
        gap_(gap) {}

  char side() const noexcept { return side_; }
  double gap() const noexcept { return gap_; }

 private:
  char side_;
  double gap_;
};

/// Two redundant computation paths disagreed. This signals a defect in the
/// library (or memory corruption), never bad user input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A randomized generator exhausted its retry budget without producing a
/// valid draw.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

}  // namespace covsep
