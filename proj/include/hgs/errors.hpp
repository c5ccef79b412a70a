#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgs {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypergraph file could not be parsed. `line()` is 1-based, 0 when the
/// problem is not tied to a particular line (e.g. truncated input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structural violation of the k-uniform hypergraph invariants.
class InvalidHypergraph : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (bad vector length, k != 2 for
/// the dense oracle, disconnected input to spectral code, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Power iteration did not certify the spectral radius within max_iter.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lower, double upper,
                   std::size_t iterations)
      : Error(what), lower_(lower), upper_(upper), iterations_(iterations) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double lower_;
  double upper_;
  std::size_t iterations_;
};

}  // namespace hgs
