// Concrete syntax for formal expressions.
//
//   expr    := term ('+' term)*
//   term    := factor ('*' factor)*
//   factor  := scalar '.' factor | prim
//   prim    := ('{' atom-literal '}' | '(' expr ')') ('^-1')*
//   scalar  := INT ('/' INT)?
//
// Atom literals are polynomials:
//
//   poly := pterm ('+' pterm)*
//   pterm := scalar? word?        (at least one present)
//   word := var+ , var := 'x' INT
//
// Whitespace is insignificant everywhere. render() emits a fully
// parenthesized form that parses back to a structurally identical tree.

#pragma once

#include "semifrac/expr.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace semifrac {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

ExprPtr parse_expr(std::string_view text, const Instance& inst);

// Atom-literal parser for CLI arguments; accepts "{...}" or a bare literal.
BaseElement parse_base(std::string_view text, const Instance& inst);

std::string render(const ExprPtr& e);

}  // namespace semifrac
