#pragma once

#include <stdexcept>
#include <string>

namespace hypermap {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the range where an operation is defined
/// (k <= 0, m >= k, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Orbit length exceeds the configured product cap.
class IterateDepthError : public Error {
 public:
  IterateDepthError(int requested, int cap)
      : Error("orbit depth " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// Df^n is conformal at the point, so the hyperbolic directions are undefined.
class ConformalPointError : public Error {
 public:
  explicit ConformalPointError(double sigma)
      : Error("conformal point: both singular values equal " + std::to_string(sigma)),
        sigma_(sigma) {}

  double singular_value() const noexcept { return sigma_; }

 private:
  double sigma_;
};

/// Leaf integration step is too coarse for the local field variation.
class StepSizeError : public Error {
 public:
  StepSizeError(const std::string& what, double y) : Error(what), y_(y) {}
  double y() const noexcept { return y_; }

 private:
  double y_;
};

/// Non-finite matrix entries or similar malformed input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; usually means k is below the validity range.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypermap
