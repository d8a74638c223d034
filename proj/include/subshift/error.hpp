#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A level was requested that the table does not cover, or a generator
/// could not certify the requested depth.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// A block code was applied to a window outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: bad source files, invalid groups, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search ran past its node budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial_results)
      : Error(what), partial_results_(partial_results) {}

  std::size_t partial_results() const noexcept { return partial_results_; }

 private:
  std::size_t partial_results_;
};

/// Broken internal invariant (a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace subshift
