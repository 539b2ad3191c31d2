// Monotone homomorphisms into the nonnegative rationals, represented
// extensionally as evaluation points, plus their extension to formal
// expressions: inverses map to reciprocals, everything else is structural.

#pragma once

#include "semifrac/legality.hpp"

#include <cstdint>
#include <vector>

namespace semifrac {

struct MonotoneHom {
  Instance inst;
  std::vector<Scalar> point;  // one coordinate per variable; empty for qplus

  // Evaluates the payload at the point.
  Scalar apply(const BaseElement& x) const;
  std::string str() const;  // "(3, 1/2)"
};

// Structural recursion over the expression. Throws IllegalExpression on an
// illegal expression and domain_error on a vanishing inverse operand (which
// legal expressions never produce over the shipped instances).
Scalar eval_expr(const MonotoneHom& h, const ExprPtr& e);

// Deterministic family: index 0 is the all-zero point, index 1 the all-one
// point, then a fixed grid, then seeded rationals k/d over [0, 4]^n.
std::vector<MonotoneHom> sample_homs(const Instance& inst, size_t count,
                                     uint64_t seed);

}  // namespace semifrac
