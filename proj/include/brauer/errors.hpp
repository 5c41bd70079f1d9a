#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauer {

/// Thrown when t is zero or beyond the enumeration cap, or when two
/// diagrams of mismatched size are combined.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a dense operator on (C^d)^{(x)t} would exceed the configured
/// d^t cap; carries the dimension that was requested.
class CapError : public std::runtime_error {
 public:
  CapError(std::size_t required, std::size_t cap)
      : std::runtime_error("tensor dimension d^t = " + std::to_string(required) +
                           " exceeds cap " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// Numerical failure inside a matrix decomposition; carries (t, d).
class ComputationError : public std::runtime_error {
 public:
  ComputationError(const std::string& what, int t, int d)
      : std::runtime_error(what + " (t=" + std::to_string(t) +
                           ", d=" + std::to_string(d) + ")"),
        t_(t),
        d_(d) {}

  int t() const noexcept { return t_; }
  int d() const noexcept { return d_; }

 private:
  int t_;
  int d_;
};

/// Input violates an operation contract (e.g. non-Hermitian operator passed
/// to an eigenvalue routine, non-unit state vector).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency violation that can only arise from an implementation
/// bug (e.g. diagrams in one propagating-number class disagreeing where the
/// algebra guarantees agreement).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace brauer
