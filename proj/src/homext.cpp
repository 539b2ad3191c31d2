#include "semifrac/homext.hpp"

#include <random>
#include <sstream>

namespace semifrac {

Scalar MonotoneHom::apply(const BaseElement& x) const {
  if (!(x.inst == inst)) throw InstanceMismatch();
  return x.value.eval(point);
}

std::string MonotoneHom::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < point.size(); ++i) {
    if (i) os << ", ";
    os << point[i].str();
  }
  os << ')';
  return os.str();
}

Scalar eval_expr(const MonotoneHom& h, const ExprPtr& e) {
  if (!e) throw std::invalid_argument("eval_expr: empty expression");
  if (!(e->instance() == h.inst)) throw InstanceMismatch();
  if (classify(e) == LegalityClass::Illegal)
    throw IllegalExpression("cannot evaluate an illegal expression");
  switch (e->kind()) {
    case ExprKind::Atom:
      return h.apply(e->atom());
    case ExprKind::Add:
      return eval_expr(h, e->lhs()) + eval_expr(h, e->rhs());
    case ExprKind::Mul:
      return eval_expr(h, e->lhs()) * eval_expr(h, e->rhs());
    case ExprKind::Scale:
      return e->scalar() * eval_expr(h, e->lhs());
    case ExprKind::Inv: {
      Scalar v = eval_expr(h, e->lhs());
      if (v.is_zero())
        throw std::domain_error("eval_expr: inverse operand evaluates to zero");
      return v.reciprocal();
    }
  }
  throw std::logic_error("eval_expr: unreachable");
}

std::vector<MonotoneHom> sample_homs(const Instance& inst, size_t count,
                                     uint64_t seed) {
  static const Scalar kGrid[] = {Scalar(0),
                                 Scalar(1),
                                 Scalar(2),
                                 Scalar::from_ratio(1, 2),
                                 Scalar(4),
                                 Scalar::from_ratio(1, 4),
                                 Scalar(3),
                                 Scalar::from_ratio(3, 2)};
  constexpr size_t kGridSize = sizeof(kGrid) / sizeof(kGrid[0]);

  std::mt19937_64 rng(seed);
  size_t n = inst.n_vars;
  std::vector<MonotoneHom> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    MonotoneHom h{inst, {}};
    h.point.reserve(n);
    for (size_t j = 0; j < n; ++j) {
      if (i == 0) {
        h.point.push_back(Scalar(0));
      } else if (i == 1) {
        h.point.push_back(Scalar(1));
      } else if (i < 2 + kGridSize) {
        h.point.push_back(kGrid[(i - 2 + j) % kGridSize]);
      } else {
        uint64_t den = uint64_t(1) << (rng() % 4);  // 1, 2, 4, 8
        uint64_t num = rng() % (4 * den + 1);
        h.point.push_back(Scalar::from_ratio(BigInt(num), BigInt(den)));
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace semifrac
