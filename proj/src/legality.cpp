#include "semifrac/legality.hpp"

namespace semifrac {

const char* to_string(LegalityClass c) {
  switch (c) {
    case LegalityClass::Illegal:
      return "Illegal";
    case LegalityClass::Null:
      return "Null";
    case LegalityClass::NonNullLegal:
      return "NonNullLegal";
  }
  return "?";
}

LegalityClass classify(const ExprPtr& e) {
  using LC = LegalityClass;
  switch (e->kind()) {
    case ExprKind::Atom:
      return e->atom().is_zero() ? LC::Null : LC::NonNullLegal;
    case ExprKind::Add: {
      LC l = classify(e->lhs()), r = classify(e->rhs());
      if (l == LC::Illegal || r == LC::Illegal) return LC::Illegal;
      // A sum is null only when both parts are.
      return (l == LC::Null && r == LC::Null) ? LC::Null : LC::NonNullLegal;
    }
    case ExprKind::Mul: {
      LC l = classify(e->lhs()), r = classify(e->rhs());
      if (l == LC::Illegal || r == LC::Illegal) return LC::Illegal;
      // A product is null when either part is.
      return (l == LC::Null || r == LC::Null) ? LC::Null : LC::NonNullLegal;
    }
    case ExprKind::Scale: {
      LC c = classify(e->lhs());
      if (c == LC::Illegal) return LC::Illegal;
      if (c == LC::Null || e->scalar().is_zero()) return LC::Null;
      return LC::NonNullLegal;
    }
    case ExprKind::Inv: {
      // Only nonzero legal expressions can be inverted.
      return classify(e->lhs()) == LC::NonNullLegal ? LC::NonNullLegal : LC::Illegal;
    }
  }
  return LC::Illegal;
}

BaseElement eval_in_S(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Atom:
      return e->atom();
    case ExprKind::Add:
      return base_add(eval_in_S(e->lhs()), eval_in_S(e->rhs()));
    case ExprKind::Mul:
      return base_mul(eval_in_S(e->lhs()), eval_in_S(e->rhs()));
    case ExprKind::Scale:
      return base_scale(e->scalar(), eval_in_S(e->lhs()));
    case ExprKind::Inv:
      throw IllegalExpression("eval_in_S: expression contains an inverse");
  }
  throw std::logic_error("unreachable");
}

}  // namespace semifrac
