#pragma once

#include <stdexcept>
#include <string>

namespace segre {

/// Operands live in different rings or fields.
class ContextMismatch : public std::invalid_argument {
 public:
  explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed polynomial text, field spec, or point/line syntax.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction was requested over a characteristic its hypotheses exclude.
class CharacteristicError : public std::invalid_argument {
 public:
  explicit CharacteristicError(const std::string& what) : std::invalid_argument(what) {}
};

/// A Groebner computation or a point enumeration ran past its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace segre
