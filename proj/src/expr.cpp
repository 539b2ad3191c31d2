#include "semifrac/expr.hpp"

namespace semifrac {

namespace {
void require_same_instance(const ExprPtr& a, const ExprPtr& b) {
  if (!(a->instance() == b->instance())) throw InstanceMismatch();
}
}  // namespace

ExprPtr Expr::make_atom(BaseElement a) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Atom;
  e->inst_ = a.inst;
  e->atom_ = std::make_shared<const BaseElement>(std::move(a));
  e->op_count_ = 0;
  return e;
}

ExprPtr Expr::make_add(ExprPtr a, ExprPtr b) {
  require_same_instance(a, b);
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Add;
  e->inst_ = a->instance();
  e->op_count_ = a->op_count() + b->op_count() + 1;
  e->lhs_ = std::move(a);
  e->rhs_ = std::move(b);
  return e;
}

ExprPtr Expr::make_mul(ExprPtr a, ExprPtr b) {
  require_same_instance(a, b);
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Mul;
  e->inst_ = a->instance();
  e->op_count_ = a->op_count() + b->op_count() + 1;
  e->lhs_ = std::move(a);
  e->rhs_ = std::move(b);
  return e;
}

ExprPtr Expr::make_scale(Scalar r, ExprPtr a) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Scale;
  e->inst_ = a->instance();
  e->op_count_ = a->op_count() + 1;
  e->scalar_ = std::move(r);
  e->lhs_ = std::move(a);
  return e;
}

ExprPtr Expr::make_inv(ExprPtr a) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Inv;
  e->inst_ = a->instance();
  e->op_count_ = a->op_count() + 1;
  e->lhs_ = std::move(a);
  return e;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case ExprKind::Atom:
      return a->atom() == b->atom();
    case ExprKind::Add:
    case ExprKind::Mul:
      return structurally_equal(a->lhs(), b->lhs()) &&
             structurally_equal(a->rhs(), b->rhs());
    case ExprKind::Scale:
      return a->scalar() == b->scalar() && structurally_equal(a->lhs(), b->lhs());
    case ExprKind::Inv:
      return structurally_equal(a->lhs(), b->lhs());
  }
  return false;
}

bool contains_inv(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Atom:
      return false;
    case ExprKind::Inv:
      return true;
    case ExprKind::Scale:
      return contains_inv(e->lhs());
    case ExprKind::Add:
    case ExprKind::Mul:
      return contains_inv(e->lhs()) || contains_inv(e->rhs());
  }
  return false;
}

ExprPtr subtree_at(const ExprPtr& root, const ExprPath& path) {
  ExprPtr cur = root;
  for (int step : path) {
    switch (cur->kind()) {
      case ExprKind::Atom:
        throw std::out_of_range("path descends below a leaf");
      case ExprKind::Scale:
      case ExprKind::Inv:
        if (step != 0) throw std::out_of_range("unary node has only child 0");
        cur = cur->lhs();
        break;
      case ExprKind::Add:
      case ExprKind::Mul:
        if (step == 0)
          cur = cur->lhs();
        else if (step == 1)
          cur = cur->rhs();
        else
          throw std::out_of_range("binary node has children 0 and 1");
        break;
    }
  }
  return cur;
}

namespace {
ExprPtr replace_rec(const ExprPtr& node, const ExprPath& path, size_t i,
                    const ExprPtr& replacement) {
  if (i == path.size()) return replacement;
  int step = path[i];
  switch (node->kind()) {
    case ExprKind::Atom:
      throw std::out_of_range("path descends below a leaf");
    case ExprKind::Scale:
      if (step != 0) throw std::out_of_range("unary node has only child 0");
      return Expr::make_scale(node->scalar(),
                              replace_rec(node->lhs(), path, i + 1, replacement));
    case ExprKind::Inv:
      if (step != 0) throw std::out_of_range("unary node has only child 0");
      return Expr::make_inv(replace_rec(node->lhs(), path, i + 1, replacement));
    case ExprKind::Add:
      if (step == 0)
        return Expr::make_add(replace_rec(node->lhs(), path, i + 1, replacement),
                              node->rhs());
      if (step == 1)
        return Expr::make_add(node->lhs(),
                              replace_rec(node->rhs(), path, i + 1, replacement));
      throw std::out_of_range("binary node has children 0 and 1");
    case ExprKind::Mul:
      if (step == 0)
        return Expr::make_mul(replace_rec(node->lhs(), path, i + 1, replacement),
                              node->rhs());
      if (step == 1)
        return Expr::make_mul(node->lhs(),
                              replace_rec(node->rhs(), path, i + 1, replacement));
      throw std::out_of_range("binary node has children 0 and 1");
  }
  throw std::logic_error("unreachable");
}
}  // namespace

ExprPtr replace_at(const ExprPtr& root, const ExprPath& path, ExprPtr replacement) {
  return replace_rec(root, path, 0, replacement);
}

}  // namespace semifrac
