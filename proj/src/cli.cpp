#include "semifrac/cli.hpp"

#include "semifrac/commoracle.hpp"
#include "semifrac/parser.hpp"
#include "semifrac/serialization.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace semifrac {

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;

struct CommandContext {
  std::string instance_text = "qplus";
  std::string report_path;
  Budgets budgets;

  Instance inst;
  Json inputs = Json::object();
  Json evidence = Json::object();
  std::string verdict;
  std::optional<std::string> condition;  // set by the condition commands

  void resolve_instance() {
    auto parsed = Instance::parse(instance_text);
    if (!parsed) throw CLI::ValidationError("--instance", "unrecognized instance: " + instance_text);
    inst = *parsed;
  }
};

void add_common(CLI::App* sub, CommandContext& ctx) {
  sub->add_option("--instance", ctx.instance_text, "qplus | polycomm:N | polync:N")
      ->required();
  sub->add_option("--report", ctx.report_path, "write a JSON report to this path");
  sub->add_option("--seed", ctx.budgets.seed, "RNG seed for sampled homomorphisms");
  sub->add_option("--rewrite-budget", ctx.budgets.rewrite,
                  "rewrite applications allowed in equality search")
      ->check(CLI::PositiveNumber);
  sub->add_option("--m-max", ctx.budgets.m_max, "padding-family length bound")
      ->check(CLI::PositiveNumber);
  sub->add_option("--samples", ctx.budgets.samples, "sampled homomorphism count")
      ->check(CLI::PositiveNumber);
  sub->add_option("--t-budget", ctx.budgets.t_budget,
                  "pivot exponent bound for the commutative oracle")
      ->check(CLI::PositiveNumber);
}

Scalar scalar_arg(const std::string& text, const char* what) {
  auto s = Scalar::parse(text);
  if (!s) throw CLI::ValidationError(what, "expected a nonnegative rational, got: " + text);
  return *s;
}

MonotoneHom hom_arg(const std::string& text, const Instance& inst) {
  MonotoneHom h{inst, {}};
  if (!text.empty()) {
    size_t pos = 0;
    for (;;) {
      size_t comma = text.find(',', pos);
      size_t len = comma == std::string::npos ? std::string::npos : comma - pos;
      h.point.push_back(scalar_arg(text.substr(pos, len), "--point"));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (h.point.size() != inst.n_vars)
    throw CLI::ValidationError("--point", "expected one coordinate per variable");
  return h;
}

int write_report(const CommandContext& ctx, const std::string& command,
                 uint64_t wall_ms, int code) {
  if (ctx.report_path.empty()) return code;
  Json report = report_envelope(command, ctx.inst, ctx.budgets);
  report["inputs"] = ctx.inputs;
  report["verdict"] = ctx.verdict;
  report["evidence"] = ctx.evidence;
  report["exit"] = code;
  report["wall_time_ms"] = wall_ms;
  if (ctx.condition) {
    report["condition"] = *ctx.condition;
    report["seed"] = ctx.budgets.seed;
  }
  std::ofstream out(ctx.report_path);
  if (!out) {
    std::cerr << "cannot write report: " << ctx.report_path << "\n";
    return kUsage;
  }
  out << dump_json(report);
  return code;
}

int run_parse(CommandContext& ctx, const std::string& text) {
  ExprPtr e = parse_expr(text, ctx.inst);
  std::string rendered = render(e);
  std::cout << rendered << "\n";
  ctx.inputs["expr"] = text;
  ctx.verdict = "ok";
  ctx.evidence["rendered"] = rendered;
  return kPositive;
}

int run_classify(CommandContext& ctx, const std::string& text) {
  ExprPtr e = parse_expr(text, ctx.inst);
  LegalityClass c = classify(e);
  const char* name = c == LegalityClass::Illegal ? "Illegal"
                     : c == LegalityClass::Null  ? "Null"
                                                 : "NonNullLegal";
  std::cout << name << "\n";
  ctx.inputs["expr"] = text;
  ctx.verdict = name;
  return c == LegalityClass::Illegal ? kNegative : kPositive;
}

int run_eval(CommandContext& ctx, const std::string& text, const std::string& point) {
  ExprPtr e = parse_expr(text, ctx.inst);
  MonotoneHom h = hom_arg(point, ctx.inst);
  Scalar value = eval_expr(h, e);
  std::cout << value.str() << "\n";
  ctx.inputs["expr"] = text;
  ctx.inputs["point"] = point;
  ctx.verdict = "ok";
  ctx.evidence["value"] = value.str();
  return kPositive;
}

int run_eq(CommandContext& ctx, const std::vector<std::string>& exprs) {
  Fraction a(parse_expr(exprs[0], ctx.inst));
  Fraction b(parse_expr(exprs[1], ctx.inst));
  EqVerdict v = eq(a, b, ctx.budgets);
  ctx.inputs["a"] = exprs[0];
  ctx.inputs["b"] = exprs[1];
  ctx.evidence = eq_verdict_to_json(v);
  switch (v.kind) {
    case EqVerdict::Kind::Equal:
      std::cout << "Equal\n";
      ctx.verdict = "Equal";
      return kPositive;
    case EqVerdict::Kind::NotEqual:
      std::cout << "NotEqual\n";
      ctx.verdict = "NotEqual";
      return kNegative;
    default:
      std::cout << "Unknown\n";
      ctx.verdict = "Unknown";
      return kUnknown;
  }
}

int run_leq(CommandContext& ctx, const std::vector<std::string>& exprs) {
  Fraction a(parse_expr(exprs[0], ctx.inst));
  Fraction b(parse_expr(exprs[1], ctx.inst));
  LeqVerdict v = leq(a, b, ctx.budgets);
  ctx.inputs["a"] = exprs[0];
  ctx.inputs["b"] = exprs[1];
  ctx.evidence = leq_verdict_to_json(v);
  switch (v.kind) {
    case LeqVerdict::Kind::Holds:
      std::cout << "Holds\n";
      ctx.verdict = "Holds";
      return kPositive;
    case LeqVerdict::Kind::Fails:
      std::cout << "Fails\n";
      ctx.verdict = "Fails";
      return kNegative;
    default:
      std::cout << "Unknown\n";
      ctx.verdict = "Unknown";
      return kUnknown;
  }
}

int run_pu(CommandContext& ctx, const std::string& text, const std::string& lambda_text) {
  Fraction f(parse_expr(text, ctx.inst));
  Scalar lambda = scalar_arg(lambda_text, "--lambda");
  PuWitness w = pu_witness(f, lambda, ctx.budgets);
  std::cout << "pre=" << w.pre << " lift=" << w.lift << " total=" << w.total << "\n";
  ctx.inputs["expr"] = text;
  ctx.inputs["lambda"] = lambda.str();
  ctx.verdict = "ok";
  ctx.evidence = pu_to_json(w);
  return kPositive;
}

int run_check_a(CommandContext& ctx, const std::string& xt, const std::string& yt) {
  BaseElement x = parse_base(xt, ctx.inst);
  BaseElement y = parse_base(yt, ctx.inst);
  HomCheckResult res = check_condition_a(x, y, ctx.budgets.samples, ctx.budgets.seed);
  ctx.condition = "a";
  ctx.inputs["x"] = xt;
  ctx.inputs["y"] = yt;
  if (res.pass) {
    std::cout << "pass\n";
    ctx.verdict = "pass";
    return kPositive;
  }
  std::cout << "counterexample at " << res.counterexample->str() << "\n";
  ctx.verdict = "counterexample";
  ctx.evidence["counterexample"] = hom_to_json(*res.counterexample);
  return kNegative;
}

int run_search_b(CommandContext& ctx, const std::string& xt, const std::string& yt,
                 const std::string& eps_text) {
  BaseElement x = parse_base(xt, ctx.inst);
  BaseElement y = parse_base(yt, ctx.inst);
  Scalar eps = scalar_arg(eps_text, "--eps");
  auto ev = search_condition_b(x, y, eps, ctx.budgets.m_max);
  ctx.condition = "b";
  ctx.inputs["x"] = xt;
  ctx.inputs["y"] = yt;
  ctx.inputs["epsilon"] = eps.str();
  if (!ev) {
    std::cout << "none within budget\n";
    ctx.verdict = "none";
    return kUnknown;
  }
  std::cout << "m = " << ev->m << "\n";
  ctx.verdict = "found";
  ctx.evidence["m"] = ev->m;
  ctx.evidence["p"] = unipoly_to_json(ev->pad);
  return kPositive;
}

int run_search_c(CommandContext& ctx, const std::string& xt, const std::string& yt,
                 const std::string& r_text, const std::string& eps_text) {
  BaseElement x = parse_base(xt, ctx.inst);
  BaseElement y = parse_base(yt, ctx.inst);
  Scalar r = scalar_arg(r_text, "--r");
  Scalar eps = scalar_arg(eps_text, "--eps");
  auto p = search_condition_c(x, y, r, eps, ctx.budgets);
  ctx.condition = "c";
  ctx.inputs["x"] = xt;
  ctx.inputs["y"] = yt;
  ctx.inputs["r"] = r.str();
  ctx.inputs["epsilon"] = eps.str();
  if (!p) {
    std::cout << "none within budget\n";
    ctx.verdict = "none";
    return kUnknown;
  }
  std::cout << "p = " << p->csv() << "\n";
  ctx.verdict = "found";
  ctx.evidence["p"] = unipoly_to_json(*p);
  ctx.evidence["p_at_r"] = p->eval(r).str();
  return kPositive;
}

int run_check_d(CommandContext& ctx, const std::string& xt, const std::string& yt,
                const std::string& r_text, const std::string& eps_text,
                const std::string& p_text, bool construct) {
  BaseElement x = parse_base(xt, ctx.inst);
  BaseElement y = parse_base(yt, ctx.inst);
  Scalar r = scalar_arg(r_text, "--r");
  Scalar eps = scalar_arg(eps_text, "--eps");
  ctx.condition = "d";
  ctx.inputs["x"] = xt;
  ctx.inputs["y"] = yt;
  ctx.inputs["r"] = r.str();
  ctx.inputs["epsilon"] = eps.str();

  UniPoly p;
  if (construct) {
    auto built = condition_d_construct(x, y, r, eps, ctx.budgets);
    if (!built) {
      std::cout << "none within budget\n";
      ctx.verdict = "none";
      return kUnknown;
    }
    p = *built;
    std::cout << "p = " << p.csv() << "\n";
  } else {
    auto parsed = UniPoly::parse_csv(p_text);
    if (!parsed) throw CLI::ValidationError("--p", "expected csv of nonnegative rationals");
    p = *parsed;
    ctx.inputs["p"] = p_text;
  }
  bool ok = condition_d_check(x, y, p, r, eps);
  std::cout << (ok ? "accept" : "reject") << "\n";
  ctx.verdict = ok ? "accept" : "reject";
  ctx.evidence["p"] = unipoly_to_json(p);
  ctx.evidence["p_at_r"] = p.eval(r).str();
  return ok ? kPositive : kNegative;
}

int run_oracle_compare(CommandContext& ctx, const std::vector<std::string>& exprs) {
  if (!ctx.inst.commutative())
    throw CLI::ValidationError("--instance", "oracle comparison needs a commutative instance");
  Fraction a(parse_expr(exprs[0], ctx.inst));
  Fraction b(parse_expr(exprs[1], ctx.inst));
  EqVerdict v = eq(a, b, ctx.budgets);
  bool oracle = cf_eq(comm_of_fraction(a), comm_of_fraction(b));
  ctx.inputs["a"] = exprs[0];
  ctx.inputs["b"] = exprs[1];
  ctx.evidence["oracle"] = oracle;
  if (v.kind == EqVerdict::Kind::Unknown) {
    std::cout << "engine Unknown, oracle " << (oracle ? "equal" : "unequal") << "\n";
    ctx.verdict = "inconclusive";
    return kUnknown;
  }
  bool engine = v.kind == EqVerdict::Kind::Equal;
  ctx.evidence["engine"] = engine ? "equal" : "not-equal";
  if (engine == oracle) {
    std::cout << "agree\n";
    ctx.verdict = "agree";
    return kPositive;
  }
  std::cout << "contradiction\n";
  ctx.verdict = "contradiction";
  return kNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"symbolic engine for preordered semialgebras of fractions"};
  app.require_subcommand(1);

  CommandContext ctx;
  std::string expr_text, point_text, lambda_text = "2";
  std::string x_text, y_text, r_text, eps_text, p_text;
  std::vector<std::string> pair;
  bool construct = false;
  int code = kUsage;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and re-render an expression");
  add_common(parse_cmd, ctx);
  parse_cmd->add_option("expr", expr_text)->required();
  parse_cmd->callback([&] { code = run_parse(ctx, expr_text); });

  CLI::App* classify_cmd = app.add_subcommand("classify", "legality class of an expression");
  add_common(classify_cmd, ctx);
  classify_cmd->add_option("expr", expr_text)->required();
  classify_cmd->callback([&] { code = run_classify(ctx, expr_text); });

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate at a point, inverses as reciprocals");
  add_common(eval_cmd, ctx);
  eval_cmd->add_option("--point", point_text, "comma-separated coordinates");
  eval_cmd->add_option("expr", expr_text)->required();
  eval_cmd->callback([&] { code = run_eval(ctx, expr_text, point_text); });

  CLI::App* eq_cmd = app.add_subcommand("eq", "decide equality of two fractions");
  add_common(eq_cmd, ctx);
  eq_cmd->add_option("exprs", pair)->expected(2)->required();
  eq_cmd->callback([&] { code = run_eq(ctx, pair); });

  CLI::App* leq_cmd = app.add_subcommand("leq", "decide order between two fractions");
  add_common(leq_cmd, ctx);
  leq_cmd->add_option("exprs", pair)->expected(2)->required();
  leq_cmd->callback([&] { code = run_leq(ctx, pair); });

  CLI::App* pu_cmd = app.add_subcommand("pu-witness", "power-domination exponents");
  add_common(pu_cmd, ctx);
  pu_cmd->add_option("--lambda", lambda_text, "scale factor, must exceed 1");
  pu_cmd->add_option("expr", expr_text)->required();
  pu_cmd->callback([&] { code = run_pu(ctx, expr_text, lambda_text); });

  CLI::App* a_cmd = app.add_subcommand("check-a", "sampled homomorphism comparison");
  add_common(a_cmd, ctx);
  a_cmd->add_option("--x", x_text)->required();
  a_cmd->add_option("--y", y_text)->required();
  a_cmd->callback([&] { code = run_check_a(ctx, x_text, y_text); });

  CLI::App* b_cmd = app.add_subcommand("search-b", "minimal u-power padding exponent");
  add_common(b_cmd, ctx);
  b_cmd->add_option("--x", x_text)->required();
  b_cmd->add_option("--y", y_text)->required();
  b_cmd->add_option("--eps", eps_text)->required();
  b_cmd->callback([&] { code = run_search_b(ctx, x_text, y_text, eps_text); });

  CLI::App* c_cmd = app.add_subcommand("search-c", "padding polynomial below a value bound");
  add_common(c_cmd, ctx);
  c_cmd->add_option("--x", x_text)->required();
  c_cmd->add_option("--y", y_text)->required();
  c_cmd->add_option("--r", r_text)->required();
  c_cmd->add_option("--eps", eps_text)->required();
  c_cmd->callback([&] { code = run_search_c(ctx, x_text, y_text, r_text, eps_text); });

  CLI::App* d_cmd = app.add_subcommand("check-d", "multiplicative padding check");
  add_common(d_cmd, ctx);
  d_cmd->add_option("--x", x_text)->required();
  d_cmd->add_option("--y", y_text)->required();
  d_cmd->add_option("--r", r_text)->required();
  d_cmd->add_option("--eps", eps_text)->required();
  CLI::Option* p_opt = d_cmd->add_option("--p", p_text, "polynomial as csv coefficients");
  CLI::Option* con_opt =
      d_cmd->add_flag("--construct", construct, "derive p instead of checking a given one");
  p_opt->excludes(con_opt);
  d_cmd->callback([&] {
    if (p_text.empty() && !construct)
      throw CLI::RequiredError("check-d needs --p or --construct");
    code = run_check_d(ctx, x_text, y_text, r_text, eps_text, p_text, construct);
  });

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle-compare", "engine equality against the commutative oracle");
  add_common(oracle_cmd, ctx);
  oracle_cmd->add_option("exprs", pair)->expected(2)->required();
  oracle_cmd->callback([&] { code = run_oracle_compare(ctx, pair); });

  auto start = std::chrono::steady_clock::now();
  std::string command;
  try {
    for (CLI::App* sub :
         {parse_cmd, classify_cmd, eval_cmd, eq_cmd, leq_cmd, pu_cmd, a_cmd, b_cmd,
          c_cmd, d_cmd, oracle_cmd}) {
      sub->preparse_callback([&command, sub](size_t) { command = sub->get_name(); });
      sub->parse_complete_callback([&ctx] { ctx.resolve_instance(); });
    }
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : kUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  uint64_t wall_ms = static_cast<uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return write_report(ctx, command, wall_ms, code);
}

}  // namespace semifrac
