#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diskt {

/// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole (Gamma at a non-positive integer, 2F1 with c at a pole).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series, root finder or eigen iteration did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its evaluation budget.
class BudgetExceeded : public ConvergenceError {
 public:
  BudgetExceeded(const std::string& what, double error_reached, long evaluations)
      : ConvergenceError(what), error_reached_(error_reached), evaluations_(evaluations) {}

  double error_reached() const noexcept { return error_reached_; }
  long evaluations() const noexcept { return evaluations_; }

 private:
  double error_reached_;
  long evaluations_;
};

/// Malformed polynomial text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace diskt
