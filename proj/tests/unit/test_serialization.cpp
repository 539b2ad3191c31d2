#include "semifrac/serialization.hpp"

#include "semifrac/parser.hpp"

#include "../testutil.hpp"
#include "doctest.h"

using namespace semifrac;

namespace {

const Instance kQ = *Instance::parse("qplus");
const Instance kPC1 = *Instance::parse("polycomm:1");
const Instance kPC2 = *Instance::parse("polycomm:2");
const Instance kNC1 = *Instance::parse("polync:1");

Fraction fr(const char* text, const Instance& inst) {
  return Fraction(parse_expr(text, inst));
}

Json reparse(const Json& j) { return Json::parse(dump_json(j)); }

}  // namespace

TEST_CASE("rewrite traces round trip through text and replay") {
  Fraction a = fr("{2} * {6}^-1", kQ);
  Fraction b = fr("{3} * {9}^-1", kQ);
  EqVerdict v = eq(a, b);
  REQUIRE(v.equal());
  REQUIRE_FALSE(v.trace.empty());

  Json j = reparse(trace_to_json(v.trace));
  std::vector<RewriteStep> loaded = trace_from_json(j, kQ);
  REQUIRE(loaded.size() == v.trace.size());
  CHECK(render(replay_trace(a.rep(), loaded)) == render(b.rep()));

  Json one = step_to_json(v.trace.front());
  CHECK(one.contains("rule"));
  CHECK(one.contains("reverse"));
  CHECK(one.contains("path"));
  CHECK(one.contains("after"));

  Json bad_rule = one;
  bad_rule["rule"] = "no-such-rule";
  CHECK_THROWS_AS(step_from_json(bad_rule, kQ), SerializationError);
  Json bad_path = one;
  bad_path["path"] = "0";
  CHECK_THROWS_AS(step_from_json(bad_path, kQ), SerializationError);
  Json missing = one;
  missing.erase("after");
  CHECK_THROWS_AS(step_from_json(missing, kQ), SerializationError);
  Json bad_expr = one;
  bad_expr["after"] = "{1 +";
  CHECK_THROWS_AS(step_from_json(bad_expr, kQ), SerializationError);
  CHECK_THROWS_AS(trace_from_json(Json{{"not", "an array"}}, kQ),
                  SerializationError);
}

TEST_CASE("homomorphism witnesses round trip") {
  std::vector<MonotoneHom> homs = sample_homs(kPC2, 6, 3);
  for (const MonotoneHom& h : homs) {
    MonotoneHom back = hom_from_json(reparse(hom_to_json(h)), kPC2);
    REQUIRE(back.point.size() == h.point.size());
    for (size_t i = 0; i < h.point.size(); ++i) CHECK(back.point[i] == h.point[i]);
    BaseElement e = parse_base("1 + 2 x1 x2", kPC2);
    CHECK(back.apply(e) == h.apply(e));
  }
  CHECK_THROWS_AS(hom_from_json(Json{{"point", Json::array({"1"})}}, kPC2),
                  SerializationError);
  CHECK_THROWS_AS(hom_from_json(Json{{"point", Json::array({"x", "1"})}}, kPC2),
                  SerializationError);
}

TEST_CASE("equality verdicts keep their evidence through serialization") {
  Fraction a = fr("{1 + x1}^-1 * {1 + x2}", kPC2);
  Fraction b = fr("{1 + x2} * {1 + x1}^-1", kPC2);
  EqVerdict v = eq(a, b);
  REQUIRE(v.equal());
  REQUIRE(v.cross.has_value());

  EqVerdict back = eq_verdict_from_json(reparse(eq_verdict_to_json(v)), kPC2);
  CHECK(back.kind == EqVerdict::Kind::Equal);
  REQUIRE(back.cross.has_value());
  CHECK(base_mul(back.cross->num1, back.cross->den2) ==
        base_mul(back.cross->num2, back.cross->den1));
  CHECK(back.cross->num1 == v.cross->num1);

  EqVerdict neq = eq(fr("{1}", kQ), fr("{2}", kQ));
  REQUIRE(neq.kind == EqVerdict::Kind::NotEqual);
  REQUIRE(neq.witness.has_value());
  EqVerdict neq_back = eq_verdict_from_json(reparse(eq_verdict_to_json(neq)), kQ);
  CHECK(neq_back.kind == EqVerdict::Kind::NotEqual);
  REQUIRE(neq_back.witness.has_value());
  CHECK(neq_back.witness->apply(kQ.one()) == Scalar(1));

  Json bad = eq_verdict_to_json(v);
  bad["kind"] = "perhaps";
  CHECK_THROWS_AS(eq_verdict_from_json(bad, kPC2), SerializationError);
}

TEST_CASE("order certificates round trip and re-verify") {
  LeqVerdict v = leq(fr("{1 + x1}", kPC1), fr("{2 + 2 x1}", kPC1));
  REQUIRE(v.holds());
  ChainCertificate chain = chain_from_json(reparse(chain_to_json(*v.chain)), kPC1);
  CHECK(verify_chain(chain));

  LeqVerdict padded = leq(fr("{1 + x1}", kNC1), fr("{2 + x1} + {1 + x1}^-1", kNC1));
  REQUIRE(padded.holds());
  REQUIRE(padded.chain->links.size() == 2);
  ChainCertificate pchain =
      chain_from_json(reparse(chain_to_json(*padded.chain)), kNC1);
  CHECK(verify_chain(pchain));
  PaddedLessdot flat = chain_to_padded_lessdot(pchain);
  CHECK(verify_lessdot(frac_add(pchain.a, flat.w), frac_add(pchain.b, flat.w),
                       flat.cert));

  LeqVerdict fails = leq(fr("{2 + x1 x1}", kPC1), fr("{1 + 2 x1}", kPC1));
  REQUIRE(fails.kind == LeqVerdict::Kind::Fails);
  LeqVerdict fback = leq_verdict_from_json(reparse(leq_verdict_to_json(fails)), kPC1);
  CHECK(fback.kind == LeqVerdict::Kind::Fails);
  REQUIRE(fback.witness.has_value());
  CHECK(fback.witness->point == fails.witness->point);

  Json tampered = lessdot_to_json(v.chain->links.front().cert);
  tampered["terms"][0]["A"] = "3 + 3 x1";
  LessdotCertificate bad_cert = lessdot_from_json(tampered, kPC1);
  CHECK_FALSE(verify_lessdot(fr("{1 + x1}", kPC1), fr("{2 + 2 x1}", kPC1), bad_cert));
}

TEST_CASE("exponent witnesses and budgets round trip") {
  PuWitness w{3, 3, 6};
  PuWitness back = pu_from_json(reparse(pu_to_json(w)));
  CHECK(back.pre == 3);
  CHECK(back.lift == 3);
  CHECK(back.total == 6);
  CHECK_THROWS_AS(pu_from_json(Json{{"pre", 1}, {"lift", 1}, {"total", 3}}),
                  SerializationError);

  Budgets b;
  b.rewrite = 123;
  b.m_max = 7;
  b.samples = 9;
  b.t_budget = 2;
  b.seed = 42;
  Budgets bb = budgets_from_json(reparse(budgets_to_json(b)));
  CHECK(bb.rewrite == 123);
  CHECK(bb.m_max == 7);
  CHECK(bb.samples == 9);
  CHECK(bb.t_budget == 2);
  CHECK(bb.seed == 42);
}

TEST_CASE("padding polynomials travel as csv strings") {
  UniPoly p(std::vector<Scalar>{Scalar(1), Scalar(0), *Scalar::parse("1/4")});
  CHECK(unipoly_from_json(reparse(unipoly_to_json(p))) == p);
  CHECK(unipoly_from_json(Json("0")).is_zero());
  CHECK_THROWS_AS(unipoly_from_json(Json(7)), SerializationError);
  CHECK_THROWS_AS(unipoly_from_json(Json("1,bad")), SerializationError);
}

TEST_CASE("condition reports replay from their serialized form") {
  BaseElement x = parse_base("2 + x1 x1", kNC1);
  BaseElement y = parse_base("1 + 2 x1", kNC1);
  Scalar eps = *Scalar::parse("1/2");
  auto ev = search_condition_b(x, y, eps);
  REQUIRE(ev.has_value());

  ConditionReport r;
  r.condition = "b";
  r.instance = kNC1.str();
  r.x_text = x.str();
  r.y_text = y.str();
  r.epsilon_text = eps.str();
  r.verdict = "found";
  r.m = ev->m;
  r.p_csv = ev->pad.csv();
  r.m_max = 32;
  r.seed = 20260819;

  Json j = reparse(condition_report_to_json(r));
  for (const char* key :
       {"condition", "inputs", "verdict", "evidence", "seed", "budgets", "wall_time_ms"}) {
    CHECK(j.contains(key));
  }

  Instance inst = *Instance::parse(j["inputs"]["instance"].get<std::string>());
  BaseElement rx = parse_base(j["inputs"]["x"].get<std::string>(), inst);
  BaseElement ry = parse_base(j["inputs"]["y"].get<std::string>(), inst);
  Scalar reps = *Scalar::parse(j["inputs"]["epsilon"].get<std::string>());
  ConditionBEvidence loaded{j["evidence"]["m"].get<unsigned>(),
                            unipoly_from_json(j["evidence"]["p"])};
  CHECK(verify_condition_b(rx, ry, reps, loaded));

  CHECK(dump_json(condition_report_to_json(r)) ==
        dump_json(condition_report_to_json(r)));
}

TEST_CASE("report envelopes carry the schema version") {
  Budgets b;
  Json env = report_envelope("eq", kPC1, b);
  CHECK(env["schema"] == 1);
  CHECK(env["command"] == "eq");
  CHECK(env["instance"] == "polycomm:1");
  CHECK(env["budgets"]["rewrite"] == 10000);
  CHECK(env.contains("wall_time_ms"));
  std::string dumped = dump_json(env);
  CHECK(dumped.back() == '\n');
  CHECK(dumped == dump_json(reparse(env)));
}
