#pragma once

#include <stdexcept>
#include <string>

namespace towerlab {

/// Malformed textual input. Carries 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

/// A computation ran out of its caller-supplied step budget.
/// Distinct from mathematical failure: the answer is unknown, not "no".
class BudgetExhausted : public std::runtime_error {
public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error("budget exhausted: " + what) {}
};

/// Precondition violations (degree mismatch, bad characteristic, ...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace towerlab
