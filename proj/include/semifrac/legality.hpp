// Single bottom-up classification of formal expressions into
//
//   Illegal      — contains an inversion of a null subexpression
//   Null         — legal and denotes the zero class
//   NonNullLegal — legal with a nonzero denotation
//
// and exact evaluation of inverse-free expressions in the base instance.

#pragma once

#include "semifrac/expr.hpp"

namespace semifrac {

enum class LegalityClass { Illegal, Null, NonNullLegal };

const char* to_string(LegalityClass c);

LegalityClass classify(const ExprPtr& e);

class IllegalExpression : public std::invalid_argument {
 public:
  explicit IllegalExpression(const std::string& what) : std::invalid_argument(what) {}
};

// Defined for inverse-free expressions only; throws IllegalExpression on an
// Inv node.
BaseElement eval_in_S(const ExprPtr& e);

}  // namespace semifrac
