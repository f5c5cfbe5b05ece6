#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "judicious/config.hpp"
#include "judicious/digraph.hpp"
#include "judicious/error.hpp"
#include "judicious/gap.hpp"
#include "judicious/tight.hpp"

namespace judicious {

/// Measured quantities of an (X, Y) split that the inequality checks read.
struct QuantityBundle {
  Count n = 0;
  Count m = 0;
  Count m1 = 0;   // e(X,Y) + e(Y,X)
  Count m2 = 0;   // e(Y)
  Count e_x = 0;  // e(X)
  Count theta = 0;
  /// s-values of the huge vertices, descending.
  std::vector<Count> deltas;
  std::optional<Count> k;
  Count g = 0;
  Count b = 0;
  Count tau = 0;
  Count d = 0;
  double eps = 0.0;
  Count y_size = 0;

  Count huge_size() const { return static_cast<Count>(deltas.size()); }

  /// Delta_from + ... + Delta_to, 1-based and inclusive; empty ranges give 0.
  Count delta_sum(Count from, Count to) const {
    Count s = 0;
    for (Count j = std::max<Count>(from, 1); j <= to && j <= huge_size(); ++j)
      s += deltas[static_cast<std::size_t>(j - 1)];
    return s;
  }
  Count delta(Count j) const { return deltas.at(static_cast<std::size_t>(j - 1)); }
  Count delta_total() const { return std::accumulate(deltas.begin(), deltas.end(), Count{0}); }
};

enum class Cmp { Less, LessEq, Greater, GreaterEq, Equal };

constexpr std::string_view to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::LessEq: return "<=";
    case Cmp::Greater: return ">";
    case Cmp::GreaterEq: return ">=";
    case Cmp::Equal: return "==";
  }
  return "?";
}

inline bool compare(const Rational& lhs, Cmp c, const Rational& rhs) {
  switch (c) {
    case Cmp::Less: return lhs < rhs;
    case Cmp::LessEq: return lhs <= rhs;
    case Cmp::Greater: return lhs > rhs;
    case Cmp::GreaterEq: return lhs >= rhs;
    case Cmp::Equal: return lhs == rhs;
  }
  return false;
}

struct Check {
  std::string id;
  std::string text;
  Rational lhs;
  Rational rhs;
  Cmp cmp = Cmp::Less;
  bool holds = false;
  /// o(n) / eps*m terms of the asymptotic statement were omitted.
  bool asymptotic_terms_dropped = false;

  bool self_consistent() const { return holds == compare(lhs, cmp, rhs); }
};

inline Check make_check(std::string id, std::string text, Rational lhs, Cmp cmp, Rational rhs,
                        bool dropped = false) {
  Check c{std::move(id), std::move(text), lhs, rhs, cmp, false, dropped};
  c.holds = compare(lhs, cmp, rhs);
  return c;
}

struct FhValue {
  CandidateLabel label = CandidateLabel::MinGap;
  Rational p;
  Rational f;
  Rational h;
  /// f / (2(2d-1)): lower bound on E[e(V1,V2)] minus the target share of m.
  Rational f_scaled;
  Rational h_scaled;
};

struct Certificate {
  QuantityBundle bundle;
  std::vector<Check> checks;
  std::vector<FhValue> fh_values;
  /// Checks that could not be evaluated, with the reason.
  std::vector<std::string> notes;
};

inline QuantityBundle compute_bundle(const Digraph& dg, std::span<const Vertex> x,
                                     std::span<const Vertex> y, const GapResult& gr,
                                     const TightReport& tr, Count d, double eps) {
  QuantityBundle q;
  q.n = static_cast<Count>(dg.vertex_count());
  q.m = static_cast<Count>(dg.arc_count());
  q.e_x = e_within(dg, x);
  q.m2 = e_within(dg, y);
  q.m1 = e_between(dg, x, y) + e_between(dg, y, x);
  q.theta = gr.theta_abs_min;
  for (Vertex v : gr.huge) q.deltas.push_back(stats_of(dg, v).s);
  q.k = gr.k;
  q.g = gr.g;
  q.b = gr.b;
  q.tau = static_cast<Count>(tr.tau);
  q.d = d;
  q.eps = eps;
  q.y_size = static_cast<Count>(y.size());
  if (q.e_x == 0 && q.m != q.delta_total() + q.g + 2 * q.b + q.m2) {
    throw Error(ErrorKind::IdentityViolation,
                "m = " + std::to_string(q.m) + " but sum(Delta) + g + 2b + m2 = " +
                    std::to_string(q.delta_total() + q.g + 2 * q.b + q.m2));
  }
  return q;
}

inline QuantityBundle compute_bundle(const Digraph& dg, std::span<const Vertex> x,
                                     std::span<const Vertex> y, const GapResult& gr,
                                     const TightReport& tr, const EngineConfig& cfg) {
  return compute_bundle(dg, x, y, gr, tr, cfg.d, cfg.epsilon);
}

/// l(p) = (d-1) sum Delta + (d-1) g + (2d-2) b - (2(2d-1) p (1-p) - (d-1)) m2.
inline Rational ell(const QuantityBundle& q, const Rational& p) {
  const Count d = q.d;
  return Rational((d - 1) * q.delta_total() + (d - 1) * q.g + (2 * d - 2) * q.b) -
         (Rational(2 * (2 * d - 1)) * p * (Rational(1) - p) - Rational(d - 1)) * Rational(q.m2);
}

inline FhValue eval_f_h(const QuantityBundle& q, const CandidateXPartition& cand, const MfMb& mm) {
  const Count d = q.d;
  const Rational& p = cand.p;
  const Rational l = ell(q, p);
  FhValue v;
  v.label = cand.label;
  v.p = p;
  v.f = Rational(2 * (2 * d - 1)) * ((Rational(1) - p) * Rational(mm.z) + p * Rational(mm.zprime)) - l;
  v.h = Rational(2 * (2 * d - 1)) * p * Rational(q.m1 - mm.z - mm.zprime) - l;
  v.f_scaled = v.f / Rational(2 * (2 * d - 1));
  v.h_scaled = v.h / Rational(2 * (2 * d - 1));
  return v;
}

// ---------------------------------------------------------------------------
// Inequality checks. Each returns self-verifying records; none of them asserts
// that an inequality must hold, since most are one side of a dichotomy.

/// Bounds on the minimum gap and on the non-huge imbalance, valid when X
/// spans no arc.
inline std::vector<Check> check_gap_bounds(const QuantityBundle& q, Count y_size) {
  if (q.e_x != 0) {
    throw Error(ErrorKind::PreconditionViolated,
                "gap bounds need e(X) = 0, got " + std::to_string(q.e_x));
  }
  return {
      make_check("gap.theta_le_y", "|theta| <= |Y|", Rational(q.theta), Cmp::LessEq, Rational(y_size)),
      make_check("gap.g_le_slack", "g <= |Y| - |theta|", Rational(q.g), Cmp::LessEq,
                 Rational(y_size - q.theta)),
  };
}

/// Structure forced on the huge set when the balanced extension falls short.
inline std::vector<Check> check_huge_structure(const QuantityBundle& q) {
  std::vector<Check> out;
  out.push_back(make_check("huge.theta_large", "theta > m/(2d-1)", Rational(q.theta), Cmp::Greater,
                           Rational(q.m, 2 * q.d - 1)));
  out.push_back(make_check("huge.odd_count", "|X'| mod 2 == 1", Rational(q.huge_size() % 2),
                           Cmp::Equal, Rational(1)));
  if (q.k) {
    const Count k = *q.k;
    out.push_back(make_check("huge.tail_dominates",
                             "sum_{j=k+1}^{2k+1} D_j - sum_{j=1}^{k} D_j >= g + theta",
                             Rational(q.delta_sum(k + 1, 2 * k + 1) - q.delta_sum(1, k)), Cmp::GreaterEq,
                             Rational(q.g + q.theta)));
  }
  return out;
}

/// Inequalities on b, g, Delta and e(Y) that hold when no candidate partition
/// of X reaches the target; for d = 4 with three huge vertices also the
/// p = 5/14 disjunction and the tight-component refinement.
inline std::vector<Check> check_huge_inequalities(const QuantityBundle& q, Count d) {
  if (!q.k) {
    throw Error(ErrorKind::NotApplicable,
                "huge set has even size " + std::to_string(q.huge_size()));
  }
  const Count k = *q.k;
  const Rational b(q.b);
  const Rational g(q.g);
  const Rational m2(q.m2);
  const Rational n(q.n);
  std::vector<Check> out;
  out.push_back(make_check(
      "ineq.balanced_forward", "d(sum_{j<=k} D_j + g) - (d-1) sum_{j>k} D_j + b + m2/2 < 0",
      Rational(d * (q.delta_sum(1, k) + q.g) - (d - 1) * q.delta_sum(k + 1, 2 * k + 1)) + b + m2 / 2,
      Cmp::Less, Rational(0)));
  if (k >= 1 && d >= 2) {
    const Rational a(q.delta_sum(k, 2 * k - 1));
    const Rational rest(q.delta_sum(1, k - 1) + q.delta(2 * k) + q.delta(2 * k + 1));
    const Rational c1(d * d + 2 * d - 1, d - 1);
    out.push_back(make_check(
        "ineq.sign_split_lower",
        "b > (d^2+2d-1)/(d-1) A - d B + (d-1) g + (d-1)/(2d) m2",
        b, Cmp::Greater,
        c1 * a - Rational(d) * rest + Rational(d - 1) * g + Rational(d - 1, 2 * d) * m2));
    const Count den = 3 * d - 1;
    out.push_back(make_check(
        "ineq.sign_split_upper",
        "b < 2(2d-1)(k+1)/(3d-1) n + (d^2-5d+2)/(3d-1) B - (d^2+2d-1)/(3d-1) A + d(d-1)/(3d-1) g"
        " - (d-1)^2/(2d(3d-1)) m2",
        b, Cmp::Less,
        Rational(2 * (2 * d - 1) * (k + 1), den) * n + Rational(d * d - 5 * d + 2, den) * rest -
            Rational(d * d + 2 * d - 1, den) * a + Rational(d * (d - 1), den) * g -
            Rational((d - 1) * (d - 1), 2 * d * den) * m2));
  }
  if (d == 4 && k == 1) {
    const Rational d1(q.delta(1));
    const Rational d2(q.delta(2));
    const Rational d3(q.delta(3));
    const Rational tail = Rational(3, 14) * m2;
    const auto a = make_check("ineq.d4.first_split_h", "2D2 + 2D3 - 3D1 - 3g - b + 3m2/14 < 0",
                              2 * d2 + 2 * d3 - 3 * d1 - 3 * g - b + tail, Cmp::Less, Rational(0));
    const auto bb = make_check("ineq.d4.first_split_f", "6D1 - 3D2 - 3D3 + 2g - b + 3m2/14 < 0",
                               6 * d1 - 3 * d2 - 3 * d3 + 2 * g - b + tail, Cmp::Less, Rational(0));
    const auto c = make_check("ineq.d4.paired_split_f", "6D3 - 3D1 - 3D2 - 3g + b/3 + 3m2/14 < 0",
                              6 * d3 - 3 * d1 - 3 * d2 - 3 * g + b / 3 + tail, Cmp::Less, Rational(0));
    const bool disj = a.holds || (bb.holds && c.holds);
    out.push_back(a);
    out.push_back(bb);
    out.push_back(c);
    out.push_back(make_check("ineq.d4.disjunction", "[first_split_h] or ([first_split_f] and [paired_split_f])",
                             Rational(disj ? 1 : 0), Cmp::Equal, Rational(1)));
    out.push_back(make_check("ineq.d4.tight_refined",
                             "b < 3D2 + 3D3 - 4D1 - 4g - m2/2 - 7(n - tau)/4", b, Cmp::Less,
                             3 * d2 + 3 * d3 - 4 * d1 - 4 * g - m2 / 2 -
                                 Rational(7, 4) * (n - Rational(q.tau))));
  }
  return out;
}

/// Which huge-count regime applies, and the tight-component count bound.
inline std::vector<Check> check_huge_count_regimes(const QuantityBundle& q, Count d) {
  std::vector<Check> out;
  const Count h = q.huge_size();
  out.push_back(make_check("regime.many_huge", "|X'| >= d", Rational(h), Cmp::GreaterEq, Rational(d)));
  out.push_back(make_check("regime.single_huge", "|X'| == 1", Rational(h), Cmp::Equal, Rational(1)));
  const Count den = 2 * d - 2 * h + 1;
  if (den > 0) {
    out.push_back(make_check("regime.tau_bound", "tau <= (n + 2g + 2b)/(2d - 2|X'| + 1)",
                             Rational(q.tau), Cmp::LessEq,
                             Rational(q.n + 2 * q.g + 2 * q.b, den)));
  }
  return out;
}

/// The d = 4, three-huge-vertex inequality chain with o(n) terms dropped.
/// `slack` is an n-fraction subtracted on the right of the one step whose
/// suppressed term points the useful way, emitted as an extra record.
inline std::vector<Check> check_d4_chain(const QuantityBundle& q, Rational slack = Rational(1, 100)) {
  if (q.d != 4 || q.huge_size() != 3) {
    throw Error(ErrorKind::NotApplicable, "chain needs d = 4 and |X'| = 3, got d = " +
                                              std::to_string(q.d) + ", |X'| = " +
                                              std::to_string(q.huge_size()));
  }
  const Rational n(q.n);
  const Rational g(q.g);
  const Rational b(q.b);
  const Rational m2(q.m2);
  const Rational d1(q.delta(1));
  const Rational t(2 * q.delta(1) - (q.delta(2) + q.delta(3)));
  auto dec = [](std::int64_t milli) { return Rational(milli, 1000); };
  std::vector<Check> out;
  auto add = [&](std::string id, std::string text, Rational lhs, Cmp c, Rational rhs, bool dropped) {
    out.push_back(make_check(std::move(id), std::move(text), lhs, c, rhs, dropped));
  };
  add("d4.b_from_outdegree", "b >= 4n - 3D1 - g - m2 + t", b, Cmp::GreaterEq,
      4 * n - 3 * d1 - g - m2 + t, true);
  add("d4.b_from_tight", "b > 7n + 3m2 + 17g - 12D1 + 18t", b, Cmp::Greater,
      7 * n + 3 * m2 + 17 * g - 12 * d1 + 18 * t, false);
  add("d4.b_sign_lower", "b > 3g + 3m2/8 - D1/3 + 4t", b, Cmp::Greater,
      3 * g + Rational(3, 8) * m2 - d1 / 3 + 4 * t, false);
  add("d4.b_sign_upper", "b < 28n/11 - 27D1/11 + 12g/11 - 9m2/88 + 2t/11", b, Cmp::Less,
      Rational(28, 11) * n - Rational(27, 11) * d1 + Rational(12, 11) * g - Rational(9, 88) * m2 +
          Rational(2, 11) * t,
      false);
  const Rational lhs5 = Rational(79, 8) * m2 + 23 * g;
  const Rational rhs5 = 16 * n - 6 * d1 + 9 * t;
  add("d4.m2_g_outdegree", "79m2/8 + 23g > 16n - 6D1 + 9t", lhs5, Cmp::Greater, rhs5, true);
  add("d4.m2_g_outdegree.slack", "79m2/8 + 23g > 16n - 6D1 + 9t - slack*n", lhs5, Cmp::Greater,
      rhs5 - slack * n, true);
  add("d4.m2_g_tight", "273m2/8 + 175g < 105D1 - 49n - 196t", Rational(273, 8) * m2 + 175 * g,
      Cmp::Less, 105 * d1 - 49 * n - 196 * t, false);
  add("d4.m2_g_sign", "63m2/4 + 63g < 84n - 70D1 - 126t", Rational(63, 4) * m2 + 63 * g, Cmp::Less,
      84 * n - 70 * d1 - 126 * t, false);
  add("d4.m2_g_exceeds_n", "m2 + 2.31g > n", m2 + dec(2310) * g, Cmp::Greater, n, true);
  add("d4.d1_lower_mix", "1.806t + 0.759g < D1 - 0.829n", dec(1806) * t + dec(759) * g, Cmp::Less,
      d1 - dec(829) * n, true);
  add("d4.d1_upper_mix", "2.322t + 0.435g < 0.968n - D1", dec(2322) * t + dec(435) * g, Cmp::Less,
      dec(968) * n - d1, true);
  add("d4.d1_large", "D1 > 0.829n", d1, Cmp::Greater, dec(829) * n, true);
  add("d4.t_g_small", "3t + g < 0.117n", 3 * t + g, Cmp::Less, dec(117) * n, true);
  add("d4.b_small", "b < 0.564n", b, Cmp::Less, dec(564) * n, true);
  add("d4.b_paired_lower", "b > 3m2/14 + 2g + 3t", b, Cmp::Greater, Rational(3, 14) * m2 + 2 * g + 3 * t,
      false);
  add("d4.d1_upper_refined", "1.373t + 0.075g < 0.899n - D1", dec(1373) * t + dec(75) * g, Cmp::Less,
      dec(899) * n - d1, true);
  add("d4.gbm2_large", "g + b + m2 > 1.3n", g + b + m2, Cmp::Greater, dec(1300) * n, true);
  add("d4.t_g_smaller", "3t + g < 0.084n", 3 * t + g, Cmp::Less, dec(84) * n, true);
  return out;
}

/// Runs every applicable check on one (X, Y) split and evaluates f and h for
/// each candidate. Checks whose preconditions fail are listed in `notes`.
inline Certificate build_certificate(const Digraph& dg, std::span<const Vertex> x,
                                     std::span<const Vertex> y, const GapResult& gr,
                                     const TightReport& tr, Count d, double eps,
                                     std::span<const CandidateXPartition> candidates,
                                     Rational chain_slack = Rational(1, 100)) {
  Certificate cert;
  cert.bundle = compute_bundle(dg, x, y, gr, tr, d, eps);
  const auto& q = cert.bundle;
  auto append = [&](std::vector<Check> cs) {
    for (auto& c : cs) cert.checks.push_back(std::move(c));
  };
  auto attempt = [&](auto&& fn) {
    try {
      append(fn());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotApplicable && e.kind() != ErrorKind::PreconditionViolated) throw;
      cert.notes.emplace_back(e.what());
    }
  };
  attempt([&] { return check_gap_bounds(q, q.y_size); });
  attempt([&] { return check_huge_structure(q); });
  attempt([&] { return check_huge_inequalities(q, d); });
  attempt([&] { return check_huge_count_regimes(q, d); });
  attempt([&] { return check_d4_chain(q, chain_slack); });
  if (q.e_x != 0) cert.notes.emplace_back("e(X) > 0: f/h evaluated without the e(X1,X2) term");
  for (const auto& cand : candidates) {
    cert.fh_values.push_back(eval_f_h(q, cand, mf_mb(dg, cand.x1, cand.x2, y)));
  }
  return cert;
}

}  // namespace judicious
