#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lip {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied parameters outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list / pair text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive routine would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Spectral routines require a regular graph.
class NotRegular : public Error {
 public:
  using Error::Error;
};

/// Iterative eigensolver stopped before reaching the requested residual.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A randomized generator gave up (e.g. too many pairing restarts).
class GenerationFailure : public Error {
 public:
  using Error::Error;
};

/// Broken internal consistency of an algorithm. Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Raised by checked runs when one of the algorithm's observations fails.
/// `observation()` is the observation letter ("A".."E") or the name of the
/// bookkeeping invariant ("anchor", "n2", "stack", "round-bound").
class InvariantViolation : public InternalError {
 public:
  InvariantViolation(std::string observation, std::size_t round, const std::string& what)
      : InternalError("observation " + observation + " violated at round " +
                      std::to_string(round) + ": " + what),
        observation_(std::move(observation)),
        round_(round) {}
  const std::string& observation() const noexcept { return observation_; }
  std::size_t round() const noexcept { return round_; }

 private:
  std::string observation_;
  std::size_t round_;
};

}  // namespace lip
