// Acceptance run: one PASS/FAIL line per criterion.
//   judicious_acceptance            all criteria
//   judicious_acceptance --only 4   a single criterion
// Exit status is non-zero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "judicious/serialize.hpp"
#include "support.hpp"

using namespace judicious;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int prec = 3) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(prec);
  o << v;
  return o.str();
}

// 1 -------------------------------------------------------------------------
Verdict min_gap_equivalence() {
  const auto t0 = Clock::now();
  int agree = 0, total = 0, independent = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t n = 6 + s % 15;  // 6..20
    const std::size_t xs = 1 + s % std::min<std::size_t>(12, n - 1);
    const auto x = jt::random_subset(n, xs, 10'000 + s);
    const bool indep = s % 2 == 0;
    const auto d = jt::random_digraph(n, 0.15 + 0.05 * (s % 5), 10'000 + s, indep ? x : VertexSet{});
    const auto y = complement(n, x);
    independent += e_within(d, x) == 0;
    const auto gr = min_gap_partition(d, x, y);
    agree += gr.theta_abs_min == exact_min_gap(d, x, y).theta_abs &&
             std::abs(gap(d, gr.x1, gr.x2, y)) == gr.theta_abs_min;
    ++total;
  }
  const double t = seconds_since(t0);
  return {agree == total && t < 10.0,
          std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(independent) +
              " with e(X)=0), " + fmt(t) + " s (limit 10 s)"};
}

// 2 -------------------------------------------------------------------------
Verdict gap_invariants() {
  int checked = 0, violations = 0;
  for (const auto& in : jt::corpus()) {
    if (e_within(in.graph, in.x) != 0) continue;
    const auto y = complement(in.graph.vertex_count(), in.x);
    const auto gr = min_gap_partition(in.graph, in.x, y);
    const auto ys = static_cast<Count>(y.size());
    violations += !(gr.theta_abs_min <= ys) + !(gr.g <= ys - gr.theta_abs_min);
    ++checked;
  }
  return {violations == 0 && checked > 0,
          std::to_string(checked) + " instances with e(X)=0, " + std::to_string(violations) + " violations"};
}

// 3 -------------------------------------------------------------------------
Verdict sec6_d4() {
  std::ostringstream why;
  bool ok = true;
  const std::size_t n = 20;
  const auto d = gen_sec6_d4(n);
  const auto nn = static_cast<Count>(n);
  ok &= d.arc_count() == 5 * n - 5 && min_outdegree(d) == 4;
  why << "m=" << d.arc_count() << " mindeg=" << min_outdegree(d);

  const VertexSet x{0, 1, 2, 3, 4};
  const auto y = complement(n, x);
  const auto gr = min_gap_partition(d, x, y);
  const Count ref = std::abs(gap(d, VertexSet{1}, VertexSet{0, 2, 3, 4}, y));
  const auto orc = exact_min_gap(d, x, y);
  ok &= gr.theta_abs_min == ref && orc.theta_abs == ref && orc.x1 == VertexSet{1};
  why << "; |theta| solver=" << gr.theta_abs_min << " {v2}=" << ref << " (solver X1={v" << gr.x1.front() + 1
      << "}, same tie class)";

  int hits = 0;
  for (std::uint64_t s = 0; s < 256; ++s) {
    for (const auto& x1 : {VertexSet{1}, gr.x1}) {
      CandidateXPartition c{CandidateLabel::MinGap, x1, complement(5, x1), Rational(1, 2)};
      const auto p = sample_extension(d, c, y, trial_stream(s, c, s));
      hits += cut_counts(d, p).e21 == nn - 1;
    }
  }
  ok &= hits == 512;
  why << "; e(V2,V1)=n-1 in " << hits << "/512 extensions";

  const auto big = gen_sec6_d4(200);
  EngineConfig cfg;
  cfg.trials = 64;
  const auto t0 = Clock::now();
  const auto out = partition(big, cfg);
  const double t = seconds_since(t0);
  ok &= out.ratio > 0.2 && t < 5.0;
  why << "; n=200 ratio " << fmt(out.ratio, 4) << " via " << to_string(out.candidate_used) << " in " << fmt(t)
      << " s";
  return {ok, why.str()};
}

// 4 -------------------------------------------------------------------------
Verdict sec6_d6_remark() {
  const auto t0 = Clock::now();
  const std::size_t n = 120;
  const auto d = gen_sec6_d6(n, 1);
  const VertexSet x{0, 1, 2};
  const auto y = complement(n, x);
  const auto gr = min_gap_partition(d, x, y);
  const auto q = compute_bundle(d, x, y, gr, essential_tight_components(d, y), 6, 0.01);
  int both = 0, either = 0, total = 0;
  std::string first_bad;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    CandidateXPartition c;
    for (Vertex v : x) ((mask >> v & 1U) ? c.x1 : c.x2).push_back(v);
    const auto mm = mf_mb(d, c.x1, c.x2, y);
    for (int i = 0; i <= 100; ++i) {
      c.p = Rational(i, 200);
      const auto v = eval_f_h(q, c, mm);
      const bool fneg = v.f < Rational(0);
      const bool hneg = v.h < Rational(0);
      both += fneg && hneg;
      either += fneg || hneg;
      ++total;
      if (!(fneg && hneg) && first_bad.empty()) {
        std::ostringstream o;
        o << "X1=" << (c.x1.empty() ? "{}" : "{" + std::to_string(c.x1.front()) + (c.x1.size() > 1 ? ",..}" : "}"))
          << " p=" << rational_str(c.p) << " f=" << fmt(to_double(v.f), 1) << " h=" << fmt(to_double(v.h), 1);
        first_bad = o.str();
      }
    }
  }
  const double t = seconds_since(t0);
  std::string detail = "f<0 and h<0 at " + std::to_string(both) + "/" + std::to_string(total) +
                       " (partition, p) points; f<0 or h<0 at " + std::to_string(either) + "/" +
                       std::to_string(total) + "; " + fmt(t) + " s";
  if (!first_bad.empty()) detail += "; first counterexample " + first_bad;
  return {both == total && t < 2.0, detail};
}

// 5 -------------------------------------------------------------------------
struct Triple {
  std::string name;
  Digraph graph;
  VertexSet x;
  CandidateXPartition cand;
};

Verdict expectation() {
  std::vector<Triple> triples;
  {
    auto g = gen_sec6_d4(30);
    triples.push_back({"sec6-d4 X1={v2} p=1/2", g, {0, 1, 2, 3, 4},
                       {CandidateLabel::MinGap, {1}, {0, 2, 3, 4}, Rational(1, 2)}});
  }
  triples.push_back({"sec6-d6 X1={x1} p=5/12", gen_sec6_d6(60, 2), {0, 1, 2},
                     {CandidateLabel::X2Sign, {0}, {1, 2}, Rational(5, 12)}});
  {
    const auto x = jt::random_subset(24, 6, 77);
    const auto g = jt::random_digraph(24, 0.25, 77);
    const VertexSet x1(x.begin(), x.begin() + 3);
    const VertexSet x2(x.begin() + 3, x.end());
    triples.push_back({"random e(X)>0 p=1/3", g, x, {CandidateLabel::X1Fwd, x1, x2, Rational(1, 3)}});
  }
  triples.push_back({"tight-extremal p=5/14", gen_tight_extremal(4, 2, true), jt::iota_set(14, 23),
                     {CandidateLabel::X4, {14, 15, 16, 17}, {18, 19, 20, 21, 22}, Rational(5, 14)}});
  triples.push_back({"random-minout X={} p=1/2", gen_random_minout(200, 3, 100, 8), {},
                     {CandidateLabel::MinGap, {}, {}, Rational(1, 2)}});

  std::ostringstream why;
  bool ok = true;
  const int trials = 2000;
  for (const auto& tr : triples) {
    const auto& d = tr.graph;
    const auto y = complement(d.vertex_count(), tr.x);
    const auto& c = tr.cand;
    const double p = to_double(c.p);
    const double e12 = e_between(d, c.x1, c.x2) + (1 - p) * e_between(d, c.x1, y) + p * e_between(d, y, c.x2) +
                       p * (1 - p) * e_within(d, y);
    const double e21 = e_between(d, c.x2, c.x1) + p * e_between(d, c.x2, y) + (1 - p) * e_between(d, y, c.x1) +
                       p * (1 - p) * e_within(d, y);
    double s1 = 0, s1q = 0, s2 = 0, s2q = 0;
    for (int t = 0; t < trials; ++t) {
      const auto cut = cut_counts(d, sample_extension(d, c, y, trial_stream(42, c, t)));
      s1 += cut.e12;
      s1q += double(cut.e12) * cut.e12;
      s2 += cut.e21;
      s2q += double(cut.e21) * cut.e21;
    }
    const double m1 = s1 / trials, m2 = s2 / trials;
    const double se1 = std::sqrt(std::max(0.0, s1q / trials - m1 * m1) / (trials - 1));
    const double se2 = std::sqrt(std::max(0.0, s2q / trials - m2 * m2) / (trials - 1));
    const double z1 = se1 > 0 ? std::abs(m1 - e12) / se1 : (m1 == e12 ? 0 : 1e9);
    const double z2 = se2 > 0 ? std::abs(m2 - e21) / se2 : (m2 == e21 ? 0 : 1e9);
    ok &= z1 <= 4 && z2 <= 4;
    why << (why.tellp() > 0 ? "; " : "") << tr.name << " z=" << fmt(z1, 2) << "/" << fmt(z2, 2);
  }
  return {ok, why.str()};
}

// 6 -------------------------------------------------------------------------
Verdict oracle_dominance() {
  int exceed = 0, equal = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const std::size_t n = 5 + s % 4;  // 5..8
    const auto d = gen_random_minout(n, 2, s % 6, 20'000 + s);
    EngineConfig cfg;
    cfg.d = 2;
    cfg.trials = 256;
    cfg.seed = s;
    const auto out = partition(d, cfg);
    const auto opt = exact_max_min_cut(d).optimum;
    exceed += out.cut.minval > opt;
    equal += out.cut.minval == opt;
  }
  return {exceed == 0 && equal >= 95,
          "exceeds oracle " + std::to_string(exceed) + "/100, equals oracle " + std::to_string(equal) +
              "/100 (need >= 95)"};
}

// 7 -------------------------------------------------------------------------
Verdict tight_correctness() {
  int mismatches = 0, comps = 0, tight = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const std::size_t n = 4 + s % 9;
    const auto d = jt::random_digraph(n, 0.06 + 0.03 * (s % 6), 30'000 + s);
    const auto x = jt::random_subset(n, n > 10 ? n - 10 + s % 2 : s % 3, 30'000 + s);
    const auto y = complement(n, x);
    const auto r = essential_tight_components(d, y);
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const bool nt = jt::naive_is_tight(d, r.components[i]);
      const bool ne = nt && has_no_antiparallel(d, r.components[i]);
      mismatches += (nt != r.tight_flags[i]) + (ne != r.essential_flags[i]);
      tight += nt;
      ++comps;
    }
  }
  const auto two = from_arc_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const auto tau2 = essential_tight_components(two, jt::iota_set(0, 6)).tau;
  const auto anti = from_arc_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 1}});
  const auto tau1 = essential_tight_components(anti, jt::iota_set(0, 6)).tau;
  return {mismatches == 0 && tau2 == 2 && tau1 == 1,
          std::to_string(mismatches) + " flag mismatches over " + std::to_string(comps) + " components (" +
              std::to_string(tight) + " tight); two triangles tau=" + std::to_string(tau2) +
              ", with anti-parallel arc tau=" + std::to_string(tau1)};
}

// 8 -------------------------------------------------------------------------
Verdict guarantee_tracking() {
  std::ostringstream why;
  bool ok = true;
  for (Count d : {2, 3, 4}) {
    const auto g = gen_eulerian_complete(static_cast<std::size_t>(2 * d + 1));
    EngineConfig cfg;
    cfg.d = d;
    cfg.trials = 256;
    const auto out = partition(g, cfg);
    const double m = static_cast<double>(g.arc_count());
    const double need = to_double(guarantee_target(d)) - 1.0 / m;
    const auto opt = exact_max_min_cut(g).optimum;
    ok &= out.ratio >= need;
    why << (d > 2 ? "; " : "") << "K" << 2 * d + 1 << " ratio " << fmt(out.ratio, 4) << " >= " << fmt(need, 4)
        << " (oracle " << fmt(opt / m, 4) << ")";
  }
  return {ok, why.str()};
}

// 9 -------------------------------------------------------------------------
Verdict certificate_consistency() {
  int instances = 0, checks = 0, bad = 0, identity_ok = 0, identity_total = 0;
  for (const auto& in : jt::corpus()) {
    if (instances == 50) break;
    const auto& g = in.graph;
    const auto y = complement(g.vertex_count(), in.x);
    const auto gr = min_gap_partition(g, in.x, y);
    const Count d = std::max<Count>(1, min_outdegree(g));
    std::vector<CandidateXPartition> cands{mingap_candidate(gr)};
    try {
      cands = candidate_x_partitions(g, in.x, gr, d);
    } catch (const Error&) {
    }
    const auto cert = build_certificate(g, in.x, y, gr, essential_tight_components(g, y), d, 0.01, cands);
    // Recompute from the serialised record, not the in-memory one.
    const auto back = json::parse(json(cert).dump()).get<Certificate>();
    for (const auto& c : back.checks) {
      bad += c.holds != compare(c.lhs, c.cmp, c.rhs);
      ++checks;
    }
    if (cert.bundle.e_x == 0) {
      const auto& q = cert.bundle;
      identity_ok += q.m == q.delta_total() + q.g + 2 * q.b + q.m2;
      ++identity_total;
    }
    ++instances;
  }
  return {instances == 50 && bad == 0 && identity_ok == identity_total,
          std::to_string(instances) + " instances, " + std::to_string(checks) + " checks, " + std::to_string(bad) +
              " inconsistent; m = sum(D)+g+2b+m2 on " + std::to_string(identity_ok) + "/" +
              std::to_string(identity_total) + " instances with e(X)=0"};
}

// 10 ------------------------------------------------------------------------
Verdict scale_smoke() {
  const auto t0 = Clock::now();
  const auto d = gen_random_minout(100'000, 4, 100'000, 10);
  EngineConfig cfg;
  cfg.d = 4;
  cfg.trials = 16;
  const auto a = partition(d, cfg);
  const double t = seconds_since(t0);
  const auto b = partition(d, cfg);
  const bool same = a.bipartition == b.bipartition && a.cut.minval == b.cut.minval;
  return {t < 30.0 && same && a.actual_min_outdegree >= 4,
          "n=100000 m=" + std::to_string(d.arc_count()) + " ratio " + fmt(a.ratio, 4) + " in " + fmt(t, 2) +
              " s (limit 30 s), rerun " + (same ? "identical" : "DIFFERS")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"min-gap oracle equivalence", min_gap_equivalence},
      {"gap invariants on independent X", gap_invariants},
      {"d=4 counterexample identities", sec6_d4},
      {"d=6 counterexample f,h signs", sec6_d6_remark},
      {"randomised extension expectation", expectation},
      {"oracle dominance and quality", oracle_dominance},
      {"tight component correctness", tight_correctness},
      {"guarantee target on odd cliques", guarantee_tracking},
      {"certificate self-consistency", certificate_consistency},
      {"scale smoke test", scale_smoke},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("C%-2zu %s  %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
