// JSON round-trips for every piece of replayable evidence: rewrite traces,
// homomorphism witnesses, order certificates, padding polynomials, and the
// per-invocation reports. Deserialization re-parses all embedded expression
// text against the given instance, so a loaded certificate replays through
// the same verifiers that produced it. Object keys serialize sorted; dumps
// of equal documents are byte-identical.

#pragma once

#include "semifrac/preorder.hpp"
#include "semifrac/vergleich.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semifrac {

using Json = nlohmann::json;

class SerializationError : public std::runtime_error {
 public:
  explicit SerializationError(const std::string& what) : std::runtime_error(what) {}
};

Json step_to_json(const RewriteStep& step);
RewriteStep step_from_json(const Json& j, const Instance& inst);
Json trace_to_json(const std::vector<RewriteStep>& steps);
std::vector<RewriteStep> trace_from_json(const Json& j, const Instance& inst);

Json hom_to_json(const MonotoneHom& h);
MonotoneHom hom_from_json(const Json& j, const Instance& inst);

Json cross_to_json(const CrossMulCertificate& c);
CrossMulCertificate cross_from_json(const Json& j, const Instance& inst);

Json eq_verdict_to_json(const EqVerdict& v);
EqVerdict eq_verdict_from_json(const Json& j, const Instance& inst);

Json lessdot_to_json(const LessdotCertificate& c);
LessdotCertificate lessdot_from_json(const Json& j, const Instance& inst);
Json chain_to_json(const ChainCertificate& c);
ChainCertificate chain_from_json(const Json& j, const Instance& inst);
Json leq_verdict_to_json(const LeqVerdict& v);
LeqVerdict leq_verdict_from_json(const Json& j, const Instance& inst);

Json pu_to_json(const PuWitness& w);
PuWitness pu_from_json(const Json& j);

// Univariate polynomials travel as their csv coefficient string.
Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json budgets_to_json(const Budgets& b);
Budgets budgets_from_json(const Json& j);

Json condition_report_to_json(const ConditionReport& r);

// Versioned envelope shared by all report-writing commands.
Json report_envelope(const std::string& command, const Instance& inst,
                     const Budgets& budgets);

// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

}  // namespace semifrac
