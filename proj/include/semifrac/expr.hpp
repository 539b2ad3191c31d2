// Formal rational expressions: strictly binary trees over base-element
// leaves with formal sum, product, scalar multiple and inverse nodes.
// Nodes are immutable and shared; rewriting builds new spines.

#pragma once

#include "semifrac/instance.hpp"

#include <memory>
#include <vector>

namespace semifrac {

enum class ExprKind { Atom, Add, Mul, Scale, Inv };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  ExprKind kind() const { return kind_; }
  const BaseElement& atom() const { return *atom_; }
  const Scalar& scalar() const { return scalar_; }
  const ExprPtr& lhs() const { return lhs_; }  // Add/Mul left, Scale/Inv child
  const ExprPtr& rhs() const { return rhs_; }  // Add/Mul right

  const Instance& instance() const { return inst_; }
  size_t op_count() const { return op_count_; }

  static ExprPtr make_atom(BaseElement a);
  static ExprPtr make_add(ExprPtr a, ExprPtr b);
  static ExprPtr make_mul(ExprPtr a, ExprPtr b);
  static ExprPtr make_scale(Scalar r, ExprPtr a);
  static ExprPtr make_inv(ExprPtr a);

 private:
  Expr() = default;

  ExprKind kind_ = ExprKind::Atom;
  std::shared_ptr<const BaseElement> atom_;
  Scalar scalar_;
  ExprPtr lhs_, rhs_;
  Instance inst_;
  size_t op_count_ = 0;
};

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
bool contains_inv(const ExprPtr& e);

// Child path from the root: 0 = left/only child, 1 = right child.
using ExprPath = std::vector<int>;

// Throws std::out_of_range on a dangling path.
ExprPtr subtree_at(const ExprPtr& root, const ExprPath& path);
// Rebuilds the ancestor spine with `replacement` grafted at `path`.
ExprPtr replace_at(const ExprPtr& root, const ExprPath& path, ExprPtr replacement);

}  // namespace semifrac
