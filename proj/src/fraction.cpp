#include "semifrac/fraction.hpp"

#include "semifrac/commoracle.hpp"
#include "semifrac/parser.hpp"

#include <deque>
#include <map>
#include <string>
#include <utility>

namespace semifrac {

Fraction::Fraction(ExprPtr rep) : rep_(std::move(rep)) {
  if (!rep_) throw std::invalid_argument("fraction needs an expression");
  if (classify(rep_) == LegalityClass::Illegal)
    throw IllegalExpression("representative inverts a null subexpression");
  NormalizeResult nr = normalize(rep_);
  nf_ = std::move(nr.nf);
  steps_ = std::make_shared<const std::vector<RewriteStep>>(std::move(nr.steps));
  null_ = classify(nf_) == LegalityClass::Null;
}

Fraction Fraction::from_base(const BaseElement& v) {
  return Fraction(Expr::make_atom(v));
}

Fraction frac_add(const Fraction& a, const Fraction& b) {
  return Fraction(Expr::make_add(a.rep(), b.rep()));
}

Fraction frac_mul(const Fraction& a, const Fraction& b) {
  return Fraction(Expr::make_mul(a.rep(), b.rep()));
}

Fraction frac_scale(const Scalar& r, const Fraction& a) {
  return Fraction(Expr::make_scale(r, a.rep()));
}

Fraction frac_inv(const Fraction& a) {
  if (a.is_zero()) throw InversionOfZero();
  return Fraction(Expr::make_inv(a.rep()));
}

Scalar eval_fraction(const MonotoneHom& h, const Fraction& f) {
  return eval_expr(h, f.rep());
}

namespace {

std::optional<MonotoneHom> separating_witness(const Fraction& a,
                                              const Fraction& b,
                                              const Budgets& budget) {
  for (const auto& h : sample_homs(a.instance(), budget.samples, budget.seed)) {
    if (eval_fraction(h, a) != eval_fraction(h, b)) return h;
  }
  return std::nullopt;
}

void collect_atoms(const ExprPtr& e, std::map<std::string, BaseElement>& out) {
  if (e->kind() == ExprKind::Atom) {
    const BaseElement& v = e->atom();
    if (!v.is_zero() && !v.is_one()) out.emplace(v.str(), v);
    return;
  }
  if (e->lhs()) collect_atoms(e->lhs(), out);
  if (e->rhs()) collect_atoms(e->rhs(), out);
}

struct SearchNode {
  ExprPtr expr;
  std::vector<RewriteStep> path;  // from the owning side's normal form
};

struct SearchSide {
  std::vector<SearchNode> nodes;
  std::map<std::string, size_t> seen;  // render key -> node index
  std::deque<size_t> frontier;

  void start(const ExprPtr& nf) {
    nodes.push_back({nf, {}});
    seen.emplace(render(nf), 0);
    frontier.push_back(0);
  }
};

std::vector<RewriteStep> concat(std::vector<RewriteStep> head,
                                const std::vector<RewriteStep>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

// Bidirectional search between the two normal forms over single oriented
// steps followed by renormalization. Every applied step, including the
// renormalization steps, is charged against the budget.
std::optional<std::vector<RewriteStep>> search_bridge(const Fraction& a,
                                                      const Fraction& b,
                                                      const Budgets& budget) {
  StepGenOptions opts;
  opts.include_expansive = true;
  std::map<std::string, BaseElement> pool;
  collect_atoms(a.nf(), pool);
  collect_atoms(b.nf(), pool);
  for (const auto& [key, v] : pool) opts.cancel_pool.push_back(v);

  SearchSide sideA, sideB;
  sideA.start(a.nf());
  sideB.start(b.nf());

  size_t applied = 0;
  auto assemble = [&](const std::vector<RewriteStep>& path_a,
                      const ExprPtr& meet,
                      const std::vector<RewriteStep>& path_b) {
    std::vector<RewriteStep> trace = concat(a.nf_steps(), path_a);
    trace = concat(std::move(trace), invert_steps(b.nf(), path_b));
    trace = concat(std::move(trace), invert_steps(b.rep(), b.nf_steps()));
    (void)meet;
    return trace;
  };

  while (!sideA.frontier.empty() || !sideB.frontier.empty()) {
    bool from_a = !sideA.frontier.empty() &&
                  (sideB.frontier.empty() ||
                   sideA.frontier.size() <= sideB.frontier.size());
    SearchSide& self = from_a ? sideA : sideB;
    SearchSide& other = from_a ? sideB : sideA;

    size_t idx = self.frontier.front();
    self.frontier.pop_front();
    SearchNode node = self.nodes[idx];

    for (const RewriteStep& step : enumerate_steps(node.expr, opts)) {
      if (applied >= budget.rewrite) return std::nullopt;
      ++applied;
      ExprPtr moved = apply_step(node.expr, step);
      NormalizeResult nr = normalize(moved);
      applied += nr.steps.size();

      std::string key = render(nr.nf);
      if (self.seen.count(key)) continue;

      std::vector<RewriteStep> path = node.path;
      path.push_back(step);
      path.insert(path.end(), nr.steps.begin(), nr.steps.end());

      auto hit = other.seen.find(key);
      if (hit != other.seen.end()) {
        const SearchNode& mate = other.nodes[hit->second];
        if (from_a) return assemble(path, nr.nf, mate.path);
        return assemble(mate.path, nr.nf, path);
      }

      size_t at = self.nodes.size();
      self.nodes.push_back({nr.nf, std::move(path)});
      self.seen.emplace(std::move(key), at);
      self.frontier.push_back(at);
    }
  }
  return std::nullopt;
}

}  // namespace

EqVerdict eq(const Fraction& a, const Fraction& b, const Budgets& budget) {
  if (!(a.instance() == b.instance())) throw InstanceMismatch();
  EqVerdict v;

  if (structurally_equal(a.rep(), b.rep())) {
    v.kind = EqVerdict::Kind::Equal;
    return v;
  }

  if (structurally_equal(a.nf(), b.nf())) {
    v.kind = EqVerdict::Kind::Equal;
    v.trace = concat(a.nf_steps(), invert_steps(b.rep(), b.nf_steps()));
    return v;
  }

  // Distinct inverse-free normal forms denote distinct fractions as long as
  // the base embeds faithfully.
  if (a.nf()->kind() == ExprKind::Atom && b.nf()->kind() == ExprKind::Atom &&
      a.instance().cancellative()) {
    v.kind = EqVerdict::Kind::NotEqual;
    v.witness = separating_witness(a, b, budget);
    return v;
  }

  if (a.instance().commutative()) {
    CommFraction ca = comm_of_fraction(a);
    CommFraction cb = comm_of_fraction(b);
    if (cf_eq(ca, cb)) {
      v.kind = EqVerdict::Kind::Equal;
      v.cross = CrossMulCertificate{ca.num, ca.den, cb.num, cb.den};
    } else {
      v.kind = EqVerdict::Kind::NotEqual;
      v.witness = separating_witness(a, b, budget);
    }
    return v;
  }

  if (auto w = separating_witness(a, b, budget)) {
    v.kind = EqVerdict::Kind::NotEqual;
    v.witness = w;
    return v;
  }

  if (auto trace = search_bridge(a, b, budget)) {
    v.kind = EqVerdict::Kind::Equal;
    v.trace = std::move(*trace);
    return v;
  }

  v.kind = EqVerdict::Kind::Unknown;
  return v;
}

}  // namespace semifrac
