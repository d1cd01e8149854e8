#ifndef VTWIST_ERRORS_HPP
#define VTWIST_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vtwist {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (CLI exit code 2).
class InputError : public Error {
   public:
    using Error::Error;
};

class ParseError : public InputError {
   public:
    using InputError::InputError;
};

class ValidationError : public InputError {
   public:
    using InputError::InputError;
};

/// Misuse of an operation outside its domain (zero divisor, bad index, unsupported rank).
class DomainError : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
   public:
    using DomainError::DomainError;
};

class UnsupportedRankError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// A computation exceeded a documented search limit.
class LimitError : public Error {
   public:
    using Error::Error;
};

/// A mathematical condition failed (CLI exit code 1).
class MathError : public Error {
   public:
    using Error::Error;
};

class CommutationError : public MathError {
   public:
    using MathError::MathError;
};

/// Carries the coordinates of the marked points where the fiber equation fails.
class FiberConditionError : public MathError {
   public:
    FiberConditionError(const std::string& what, std::vector<std::string> points)
        : MathError(what), points_(std::move(points)) {}
    const std::vector<std::string>& points() const noexcept { return points_; }

   private:
    std::vector<std::string> points_;
};

class NonIntegralError : public MathError {
   public:
    using MathError::MathError;
};

class EigenvalueConditionError : public MathError {
   public:
    using MathError::MathError;
};

class DegreeBoundError : public MathError {
   public:
    using MathError::MathError;
};

class NotInCommutantError : public MathError {
   public:
    using MathError::MathError;
};

class InfeasibleBudgetError : public MathError {
   public:
    using MathError::MathError;
};

class RetryExhaustedError : public MathError {
   public:
    using MathError::MathError;
};

/// Internal consistency check failed; indicates a bug rather than bad input.
class InconsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace vtwist

#endif  // VTWIST_ERRORS_HPP
