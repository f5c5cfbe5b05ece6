#pragma once

// JSON mapping for the result records (nlohmann::json, vendored).
// Rationals are written as "num/den" strings so nothing is lost.

#include <string>
#include <string_view>

#include "json.hpp"

#include "judicious/certify.hpp"
#include "judicious/config.hpp"
#include "judicious/digraph.hpp"
#include "judicious/engine.hpp"
#include "judicious/gap.hpp"
#include "judicious/oracle.hpp"
#include "judicious/tight.hpp"

namespace judicious {

using json = nlohmann::ordered_json;

inline std::string rational_str(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(std::string_view s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(std::stoll(std::string(s)));
    return Rational(std::stoll(std::string(s.substr(0, slash))), std::stoll(std::string(s.substr(slash + 1))));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad rational '" + std::string(s) + "'");
  }
}

inline CandidateLabel parse_label(std::string_view s) {
  for (auto l : {CandidateLabel::MinGap, CandidateLabel::X1Fwd, CandidateLabel::X2Sign, CandidateLabel::X3Sign,
                 CandidateLabel::X4, CandidateLabel::X5, CandidateLabel::SingleHuge, CandidateLabel::Baseline})
    if (to_string(l) == s) return l;
  throw Error(ErrorKind::ParseError, "unknown candidate label '" + std::string(s) + "'");
}

inline Cmp parse_cmp(std::string_view s) {
  for (auto c : {Cmp::Less, Cmp::LessEq, Cmp::Greater, Cmp::GreaterEq, Cmp::Equal})
    if (to_string(c) == s) return c;
  throw Error(ErrorKind::ParseError, "unknown comparison '" + std::string(s) + "'");
}

inline json sides_json(const Bipartition& p) {
  json a = json::array();
  for (Side s : p.side) a.push_back(static_cast<int>(s));
  return a;
}

inline Bipartition sides_from_json(const json& j) {
  Bipartition p;
  for (const auto& v : j) {
    const int s = v.get<int>();
    if (s != 1 && s != 2) throw Error(ErrorKind::ParseError, "side must be 1 or 2");
    p.side.push_back(static_cast<Side>(s));
  }
  return p;
}

// --- ADL hooks ------------------------------------------------------------

inline void to_json(json& j, const CutValue& c) { j = json{{"e12", c.e12}, {"e21", c.e21}, {"min", c.minval}}; }
inline void from_json(const json& j, CutValue& c) { c = CutValue(j.at("e12").get<Count>(), j.at("e21").get<Count>()); }

inline void to_json(json& j, const OracleResult& r) {
  j = json{{"optimum", r.optimum}, {"witness", sides_json(r.witness)}, {"evaluated", r.evaluated}};
}
inline void from_json(const json& j, OracleResult& r) {
  r.optimum = j.at("optimum").get<Count>();
  r.witness = sides_from_json(j.at("witness"));
  r.evaluated = j.at("evaluated").get<std::uint64_t>();
}

inline void to_json(json& j, const GapResult& g) {
  j = json{{"x1", g.x1},
           {"x2", g.x2},
           {"theta", g.theta},
           {"theta_abs_min", g.theta_abs_min},
           {"huge", g.huge},
           {"k", g.k ? json(*g.k) : json(nullptr)},
           {"g", g.g},
           {"b", g.b},
           {"forward", g.forward},
           {"backward", g.backward},
           {"exhaustive", g.exhaustive}};
}
inline void from_json(const json& j, GapResult& g) {
  j.at("x1").get_to(g.x1);
  j.at("x2").get_to(g.x2);
  j.at("theta").get_to(g.theta);
  j.at("theta_abs_min").get_to(g.theta_abs_min);
  j.at("huge").get_to(g.huge);
  g.k = j.at("k").is_null() ? std::nullopt : std::optional<Count>(j.at("k").get<Count>());
  j.at("g").get_to(g.g);
  j.at("b").get_to(g.b);
  j.at("forward").get_to(g.forward);
  j.at("backward").get_to(g.backward);
  j.at("exhaustive").get_to(g.exhaustive);
}

inline void to_json(json& j, const TightReport& t) {
  json comps = json::array();
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    comps.push_back(json{{"vertices", t.components[i]},
                         {"tight", static_cast<bool>(t.tight_flags[i])},
                         {"essential", static_cast<bool>(t.essential_flags[i])}});
  }
  j = json{{"tau", t.tau}, {"components", comps}};
}
inline void from_json(const json& j, TightReport& t) {
  t = TightReport{};
  j.at("tau").get_to(t.tau);
  for (const auto& c : j.at("components")) {
    t.components.push_back(c.at("vertices").get<VertexSet>());
    t.tight_flags.push_back(c.at("tight").get<bool>());
    t.essential_flags.push_back(c.at("essential").get<bool>());
  }
}

inline void to_json(json& j, const QuantityBundle& q) {
  j = json{{"n", q.n},   {"m", q.m},         {"m1", q.m1},  {"m2", q.m2},
           {"e_x", q.e_x}, {"theta", q.theta}, {"deltas", q.deltas},
           {"k", q.k ? json(*q.k) : json(nullptr)},
           {"g", q.g},   {"b", q.b},         {"tau", q.tau}, {"d", q.d},
           {"eps", q.eps}, {"y_size", q.y_size}};
}
inline void from_json(const json& j, QuantityBundle& q) {
  j.at("n").get_to(q.n);
  j.at("m").get_to(q.m);
  j.at("m1").get_to(q.m1);
  j.at("m2").get_to(q.m2);
  j.at("e_x").get_to(q.e_x);
  j.at("theta").get_to(q.theta);
  j.at("deltas").get_to(q.deltas);
  q.k = j.at("k").is_null() ? std::nullopt : std::optional<Count>(j.at("k").get<Count>());
  j.at("g").get_to(q.g);
  j.at("b").get_to(q.b);
  j.at("tau").get_to(q.tau);
  j.at("d").get_to(q.d);
  j.at("eps").get_to(q.eps);
  j.at("y_size").get_to(q.y_size);
}

inline void to_json(json& j, const Check& c) {
  j = json{{"id", c.id},
           {"text", c.text},
           {"lhs", rational_str(c.lhs)},
           {"cmp", to_string(c.cmp)},
           {"rhs", rational_str(c.rhs)},
           {"holds", c.holds},
           {"asymptotic_terms_dropped", c.asymptotic_terms_dropped}};
}
inline void from_json(const json& j, Check& c) {
  j.at("id").get_to(c.id);
  j.at("text").get_to(c.text);
  c.lhs = parse_rational(j.at("lhs").get<std::string>());
  c.cmp = parse_cmp(j.at("cmp").get<std::string>());
  c.rhs = parse_rational(j.at("rhs").get<std::string>());
  j.at("holds").get_to(c.holds);
  j.at("asymptotic_terms_dropped").get_to(c.asymptotic_terms_dropped);
}

inline void to_json(json& j, const FhValue& v) {
  j = json{{"label", to_string(v.label)}, {"p", rational_str(v.p)},
           {"f", rational_str(v.f)},      {"h", rational_str(v.h)},
           {"f_scaled", rational_str(v.f_scaled)}, {"h_scaled", rational_str(v.h_scaled)}};
}
inline void from_json(const json& j, FhValue& v) {
  v.label = parse_label(j.at("label").get<std::string>());
  v.p = parse_rational(j.at("p").get<std::string>());
  v.f = parse_rational(j.at("f").get<std::string>());
  v.h = parse_rational(j.at("h").get<std::string>());
  v.f_scaled = parse_rational(j.at("f_scaled").get<std::string>());
  v.h_scaled = parse_rational(j.at("h_scaled").get<std::string>());
}

inline void to_json(json& j, const Certificate& c) {
  j = json{{"bundle", c.bundle}, {"checks", c.checks}, {"fh_values", c.fh_values}, {"notes", c.notes}};
}
inline void from_json(const json& j, Certificate& c) {
  j.at("bundle").get_to(c.bundle);
  j.at("checks").get_to(c.checks);
  j.at("fh_values").get_to(c.fh_values);
  j.at("notes").get_to(c.notes);
}

inline void to_json(json& j, const EngineConfig& c) {
  json sweep = json::array();
  for (const auto& p : c.p_sweep) sweep.push_back(rational_str(p));
  j = json{{"d", c.d},
           {"epsilon", c.epsilon},
           {"threshold_exponent", c.threshold_exponent},
           {"trials", c.trials},
           {"seed", c.seed},
           {"exhaustive_x_limit", c.exhaustive_x_limit},
           {"local_improve_rounds", c.local_improve_rounds},
           {"dp_state_limit", c.dp_state_limit},
           {"p_sweep", sweep},
           {"threads", c.threads},
           {"baseline_run", c.baseline_run}};
}
inline void from_json(const json& j, EngineConfig& c) {
  j.at("d").get_to(c.d);
  j.at("epsilon").get_to(c.epsilon);
  j.at("threshold_exponent").get_to(c.threshold_exponent);
  j.at("trials").get_to(c.trials);
  j.at("seed").get_to(c.seed);
  j.at("exhaustive_x_limit").get_to(c.exhaustive_x_limit);
  j.at("local_improve_rounds").get_to(c.local_improve_rounds);
  j.at("dp_state_limit").get_to(c.dp_state_limit);
  c.p_sweep.clear();
  for (const auto& p : j.at("p_sweep")) c.p_sweep.push_back(parse_rational(p.get<std::string>()));
  j.at("threads").get_to(c.threads);
  j.at("baseline_run").get_to(c.baseline_run);
}

/// Thread count is left out: it never changes the result.
inline void to_json(json& j, const PartitionOutcome& o) {
  json runs = json::array();
  for (const auto& r : o.runs) {
    runs.push_back(json{{"label", to_string(r.candidate.label)},
                        {"p", rational_str(r.candidate.p)},
                        {"x1", r.candidate.x1},
                        {"x2", r.candidate.x2},
                        {"cut", r.cut}});
  }
  j = json{{"cut", o.cut},
           {"ratio", o.ratio},
           {"guarantee_target", rational_str(o.guarantee_target)},
           {"candidate_used", to_string(o.candidate_used)},
           {"candidate_p", rational_str(o.candidate_p)},
           {"d_used", o.d_used},
           {"actual_min_outdegree", o.actual_min_outdegree},
           {"shortcut_used", o.shortcut_used},
           {"huge_even", o.huge_even},
           {"x", o.split.x},
           {"threshold", o.split.threshold},
           {"warnings", o.warnings},
           {"runs", runs},
           {"sides", sides_json(o.bipartition)},
           {"certificate", o.certificate}};
}
inline void from_json(const json& j, PartitionOutcome& o) {
  o = PartitionOutcome{};
  j.at("cut").get_to(o.cut);
  j.at("ratio").get_to(o.ratio);
  o.guarantee_target = parse_rational(j.at("guarantee_target").get<std::string>());
  o.candidate_used = parse_label(j.at("candidate_used").get<std::string>());
  o.candidate_p = parse_rational(j.at("candidate_p").get<std::string>());
  j.at("d_used").get_to(o.d_used);
  j.at("actual_min_outdegree").get_to(o.actual_min_outdegree);
  j.at("shortcut_used").get_to(o.shortcut_used);
  j.at("huge_even").get_to(o.huge_even);
  j.at("x").get_to(o.split.x);
  j.at("threshold").get_to(o.split.threshold);
  j.at("warnings").get_to(o.warnings);
  for (const auto& r : j.at("runs")) {
    CandidateRun run;
    run.candidate.label = parse_label(r.at("label").get<std::string>());
    run.candidate.p = parse_rational(r.at("p").get<std::string>());
    r.at("x1").get_to(run.candidate.x1);
    r.at("x2").get_to(run.candidate.x2);
    r.at("cut").get_to(run.cut);
    o.runs.push_back(std::move(run));
  }
  o.bipartition = sides_from_json(j.at("sides"));
  j.at("certificate").get_to(o.certificate);
}

}  // namespace judicious
