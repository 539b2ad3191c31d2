#include "semifrac/parser.hpp"

#include <cctype>

namespace semifrac {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Instance& inst) : s_(s), inst_(inst) {}

  ExprPtr run_expr() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

  Polynomial run_poly() {
    Polynomial p = poly_body();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
  const Instance& inst_;

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, size_t at) {
    throw ParseError(message, at);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  BigInt integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Scalar scalar() {
    BigInt num = integer();
    if (eat('/')) {
      size_t den_pos = pos_;
      BigInt den = integer();
      if (den == 0) fail_at("zero denominator", den_pos);
      return Scalar::from_ratio(num, den);
    }
    return Scalar(BigRational(num));
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (eat('+')) e = Expr::make_add(e, term());
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (eat('*')) e = Expr::make_mul(e, factor());
    return e;
  }

  ExprPtr factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Scalar r = scalar();
      expect('.', "after scale factor");
      return Expr::make_scale(r, factor());
    }
    return prim();
  }

  ExprPtr prim() {
    char c = peek();
    ExprPtr e;
    if (c == '{') {
      ++pos_;
      size_t content_pos = pos_;
      Polynomial p = poly_body();
      expect('}', "to close atom literal");
      e = Expr::make_atom(checked_member(std::move(p), content_pos));
    } else if (c == '(') {
      ++pos_;
      e = expr();
      expect(')', "to close group");
    } else {
      fail("expected '{', '(' or a scale factor");
    }
    while (peek() == '^') {
      ++pos_;
      if (pos_ + 1 >= s_.size() || s_[pos_] != '-' || s_[pos_ + 1] != '1')
        fail("expected '-1' after '^'");
      pos_ += 2;
      e = Expr::make_inv(e);
    }
    return e;
  }

  BaseElement checked_member(Polynomial p, size_t at) {
    if (p.max_variable() > inst_.n_vars) {
      if (inst_.kind == InstanceKind::QPlus)
        fail_at("variables are not allowed in a " + inst_.str() + " atom", at);
      fail_at("variable index exceeds instance arity " + std::to_string(inst_.n_vars),
              at);
    }
    if (!inst_.is_member(p))
      fail_at("nonzero atom needs a positive constant term", at);
    return inst_.make(std::move(p));
  }

  Polynomial poly_body() {
    Polynomial p = poly_term();
    while (eat('+')) p = p.add(poly_term());
    return p;
  }

  Polynomial poly_term() {
    skip_ws();
    size_t start = pos_;
    Scalar coeff(1);
    bool have_any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = scalar();
      have_any = true;
    }
    Word w;
    while (peek() == 'x') {
      ++pos_;
      BigInt idx = integer();
      if (idx < 1 || idx > 1'000'000) fail("variable index out of range");
      w.letters.push_back(static_cast<uint32_t>(idx));
      have_any = true;
    }
    if (!have_any) fail_at("expected a coefficient or a variable", start);
    if (inst_.commutative()) w = w.sorted();
    Polynomial p;
    p.set_coeff(w, coeff);
    return p;
  }
};

// Children of Inv render with parentheses unless the child's own rendering is
// already self-delimiting (compound nodes parenthesize themselves; a nested
// inverse stacks postfix).
bool self_delimiting(const ExprPtr& e) { return e->kind() != ExprKind::Atom; }

}  // namespace

ExprPtr parse_expr(std::string_view text, const Instance& inst) {
  return Parser(text, inst).run_expr();
}

BaseElement parse_base(std::string_view text, const Instance& inst) {
  std::string_view body = text;
  // Allow the braces the expression syntax uses.
  size_t first = body.find_first_not_of(" \t");
  size_t last = body.find_last_not_of(" \t");
  if (first != std::string_view::npos && body[first] == '{' && body[last] == '}')
    body = body.substr(first + 1, last - first - 1);
  Polynomial p = Parser(body, inst).run_poly();
  if (!inst.is_member(p)) {
    if (p.max_variable() > inst.n_vars)
      throw ParseError("variable index exceeds instance arity", 0);
    throw ParseError("nonzero atom needs a positive constant term", 0);
  }
  return inst.make(std::move(p));
}

std::string render(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Atom:
      return "{" + e->atom().value.str() + "}";
    case ExprKind::Add:
      return "(" + render(e->lhs()) + " + " + render(e->rhs()) + ")";
    case ExprKind::Mul:
      return "(" + render(e->lhs()) + " * " + render(e->rhs()) + ")";
    case ExprKind::Scale:
      return "(" + e->scalar().str() + " . " + render(e->lhs()) + ")";
    case ExprKind::Inv: {
      const ExprPtr& c = e->lhs();
      std::string inner = render(c);
      if (!self_delimiting(c)) inner = "(" + inner + ")";
      return inner + "^-1";
    }
  }
  return {};
}

}  // namespace semifrac
