#include "semifrac/serialization.hpp"

#include "semifrac/parser.hpp"

namespace semifrac {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SerializationError(std::string("missing field: ") + key);
  return j[key];
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw SerializationError(std::string("not a string: ") + key);
  return v.get<std::string>();
}

uint64_t uint_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned())
    throw SerializationError(std::string("not an unsigned integer: ") + key);
  return v.get<uint64_t>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw SerializationError(std::string("not a boolean: ") + key);
  return v.get<bool>();
}

ExprPtr expr_field(const Json& j, const char* key, const Instance& inst) {
  std::string text = str_field(j, key);
  try {
    return parse_expr(text, inst);
  } catch (const ParseError& e) {
    throw SerializationError(std::string(key) + ": " + e.what());
  }
}

BaseElement base_field(const Json& j, const char* key, const Instance& inst) {
  std::string text = str_field(j, key);
  try {
    return parse_base(text, inst);
  } catch (const ParseError& e) {
    throw SerializationError(std::string(key) + ": " + e.what());
  }
}

Fraction fraction_field(const Json& j, const char* key, const Instance& inst) {
  ExprPtr e = expr_field(j, key, inst);
  try {
    return Fraction(e);
  } catch (const IllegalExpression& e) {
    throw SerializationError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

Json step_to_json(const RewriteStep& step) {
  Json j;
  j["rule"] = rule_name(step.rule);
  j["reverse"] = step.reverse;
  j["path"] = step.path;
  j["after"] = render(step.after);
  return j;
}

RewriteStep step_from_json(const Json& j, const Instance& inst) {
  RewriteStep step;
  std::string name = str_field(j, "rule");
  auto rule = rule_from_name(name);
  if (!rule) throw SerializationError("unknown rule: " + name);
  step.rule = *rule;
  step.reverse = bool_field(j, "reverse");
  const Json& path = field(j, "path");
  if (!path.is_array()) throw SerializationError("not an array: path");
  for (const Json& p : path) {
    if (!p.is_number_integer()) throw SerializationError("path entries must be integers");
    step.path.push_back(p.get<int>());
  }
  step.after = expr_field(j, "after", inst);
  return step;
}

Json trace_to_json(const std::vector<RewriteStep>& steps) {
  Json j = Json::array();
  for (const RewriteStep& s : steps) j.push_back(step_to_json(s));
  return j;
}

std::vector<RewriteStep> trace_from_json(const Json& j, const Instance& inst) {
  if (!j.is_array()) throw SerializationError("trace must be an array");
  std::vector<RewriteStep> steps;
  for (const Json& s : j) steps.push_back(step_from_json(s, inst));
  return steps;
}

Json hom_to_json(const MonotoneHom& h) {
  Json point = Json::array();
  for (const Scalar& c : h.point) point.push_back(c.str());
  return Json{{"point", point}};
}

MonotoneHom hom_from_json(const Json& j, const Instance& inst) {
  const Json& point = field(j, "point");
  if (!point.is_array()) throw SerializationError("not an array: point");
  MonotoneHom h{inst, {}};
  for (const Json& c : point) {
    if (!c.is_string()) throw SerializationError("point entries must be strings");
    auto s = Scalar::parse(c.get<std::string>());
    if (!s) throw SerializationError("bad scalar in point");
    h.point.push_back(*s);
  }
  if (h.point.size() != inst.n_vars)
    throw SerializationError("point arity does not match the instance");
  return h;
}

Json cross_to_json(const CrossMulCertificate& c) {
  return Json{{"num1", c.num1.str()},
              {"den1", c.den1.str()},
              {"num2", c.num2.str()},
              {"den2", c.den2.str()}};
}

CrossMulCertificate cross_from_json(const Json& j, const Instance& inst) {
  return {base_field(j, "num1", inst), base_field(j, "den1", inst),
          base_field(j, "num2", inst), base_field(j, "den2", inst)};
}

namespace {

const char* eq_kind_name(EqVerdict::Kind k) {
  switch (k) {
    case EqVerdict::Kind::Equal: return "equal";
    case EqVerdict::Kind::NotEqual: return "not-equal";
    default: return "unknown";
  }
}

}  // namespace

Json eq_verdict_to_json(const EqVerdict& v) {
  Json j;
  j["kind"] = eq_kind_name(v.kind);
  j["trace"] = trace_to_json(v.trace);
  if (v.cross) j["cross"] = cross_to_json(*v.cross);
  if (v.witness) j["witness"] = hom_to_json(*v.witness);
  return j;
}

EqVerdict eq_verdict_from_json(const Json& j, const Instance& inst) {
  EqVerdict v;
  std::string kind = str_field(j, "kind");
  if (kind == "equal") v.kind = EqVerdict::Kind::Equal;
  else if (kind == "not-equal") v.kind = EqVerdict::Kind::NotEqual;
  else if (kind == "unknown") v.kind = EqVerdict::Kind::Unknown;
  else throw SerializationError("bad verdict kind: " + kind);
  v.trace = trace_from_json(field(j, "trace"), inst);
  if (j.contains("cross")) v.cross = cross_from_json(j["cross"], inst);
  if (j.contains("witness")) v.witness = hom_from_json(j["witness"], inst);
  return v;
}

Json lessdot_to_json(const LessdotCertificate& c) {
  Json terms = Json::array();
  for (const LessdotTerm& t : c.terms) {
    terms.push_back(Json{{"g", render(t.g.rep())},
                         {"A", t.A.str()},
                         {"B", t.B.str()},
                         {"h", render(t.h.rep())}});
  }
  return Json{{"terms", terms}};
}

LessdotCertificate lessdot_from_json(const Json& j, const Instance& inst) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw SerializationError("not an array: terms");
  LessdotCertificate c;
  for (const Json& t : terms) {
    c.terms.push_back({fraction_field(t, "g", inst), base_field(t, "A", inst),
                       base_field(t, "B", inst), fraction_field(t, "h", inst)});
  }
  return c;
}

Json chain_to_json(const ChainCertificate& c) {
  Json links = Json::array();
  for (const ChainLink& l : c.links) {
    links.push_back(Json{{"next", render(l.next.rep())}, {"cert", lessdot_to_json(l.cert)}});
  }
  return Json{{"a", render(c.a.rep())}, {"b", render(c.b.rep())}, {"links", links}};
}

ChainCertificate chain_from_json(const Json& j, const Instance& inst) {
  ChainCertificate c{fraction_field(j, "a", inst), fraction_field(j, "b", inst), {}};
  const Json& links = field(j, "links");
  if (!links.is_array()) throw SerializationError("not an array: links");
  for (const Json& l : links) {
    c.links.push_back(
        {fraction_field(l, "next", inst), lessdot_from_json(field(l, "cert"), inst)});
  }
  return c;
}

namespace {

const char* leq_kind_name(LeqVerdict::Kind k) {
  switch (k) {
    case LeqVerdict::Kind::Holds: return "holds";
    case LeqVerdict::Kind::Fails: return "fails";
    default: return "unknown";
  }
}

}  // namespace

Json leq_verdict_to_json(const LeqVerdict& v) {
  Json j;
  j["kind"] = leq_kind_name(v.kind);
  if (v.chain) j["chain"] = chain_to_json(*v.chain);
  if (v.witness) j["witness"] = hom_to_json(*v.witness);
  return j;
}

LeqVerdict leq_verdict_from_json(const Json& j, const Instance& inst) {
  LeqVerdict v;
  std::string kind = str_field(j, "kind");
  if (kind == "holds") v.kind = LeqVerdict::Kind::Holds;
  else if (kind == "fails") v.kind = LeqVerdict::Kind::Fails;
  else if (kind == "unknown") v.kind = LeqVerdict::Kind::Unknown;
  else throw SerializationError("bad verdict kind: " + kind);
  if (j.contains("chain")) v.chain = chain_from_json(j["chain"], inst);
  if (j.contains("witness")) v.witness = hom_from_json(j["witness"], inst);
  return v;
}

Json pu_to_json(const PuWitness& w) {
  return Json{{"pre", w.pre}, {"lift", w.lift}, {"total", w.total}};
}

PuWitness pu_from_json(const Json& j) {
  PuWitness w;
  w.pre = static_cast<unsigned>(uint_field(j, "pre"));
  w.lift = static_cast<unsigned>(uint_field(j, "lift"));
  w.total = static_cast<unsigned>(uint_field(j, "total"));
  if (w.total != w.pre + w.lift) throw SerializationError("inconsistent exponent split");
  return w;
}

Json unipoly_to_json(const UniPoly& p) { return p.csv(); }

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_string()) throw SerializationError("polynomial must be a csv string");
  auto p = UniPoly::parse_csv(j.get<std::string>());
  if (!p) throw SerializationError("bad polynomial csv");
  return *p;
}

Json budgets_to_json(const Budgets& b) {
  return Json{{"rewrite", b.rewrite},
              {"m_max", b.m_max},
              {"samples", b.samples},
              {"t_budget", b.t_budget},
              {"seed", b.seed}};
}

Budgets budgets_from_json(const Json& j) {
  Budgets b;
  b.rewrite = uint_field(j, "rewrite");
  b.m_max = static_cast<unsigned>(uint_field(j, "m_max"));
  b.samples = uint_field(j, "samples");
  b.t_budget = static_cast<unsigned>(uint_field(j, "t_budget"));
  b.seed = uint_field(j, "seed");
  return b;
}

Json condition_report_to_json(const ConditionReport& r) {
  Json inputs{{"instance", r.instance}, {"x", r.x_text}, {"y", r.y_text}};
  if (r.r_text) inputs["r"] = *r.r_text;
  if (r.epsilon_text) inputs["epsilon"] = *r.epsilon_text;
  Json evidence = Json::object();
  if (r.m) evidence["m"] = *r.m;
  if (r.p_csv) evidence["p"] = *r.p_csv;
  if (r.counterexample) evidence["counterexample"] = *r.counterexample;
  Json budgets = Json::object();
  if (r.samples) budgets["samples"] = r.samples;
  if (r.m_max) budgets["m_max"] = r.m_max;
  return Json{{"condition", r.condition}, {"inputs", inputs},
              {"verdict", r.verdict},     {"evidence", evidence},
              {"seed", r.seed},           {"budgets", budgets},
              {"wall_time_ms", r.wall_time_ms}};
}

Json report_envelope(const std::string& command, const Instance& inst,
                     const Budgets& budgets) {
  return Json{{"schema", 1},
              {"command", command},
              {"instance", inst.str()},
              {"budgets", budgets_to_json(budgets)},
              {"wall_time_ms", 0}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace semifrac
