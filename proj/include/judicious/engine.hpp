#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "judicious/certify.hpp"
#include "judicious/config.hpp"
#include "judicious/digraph.hpp"
#include "judicious/error.hpp"
#include "judicious/gap.hpp"
#include "judicious/rng.hpp"
#include "judicious/tight.hpp"

namespace judicious {

struct DegreeSplit {
  VertexSet x;
  VertexSet y;
  double threshold = 0.0;
};

/// X = {v : d(v) >= n^threshold_exponent}, Y = the rest.
inline DegreeSplit split_by_degree(const Digraph& d, const EngineConfig& cfg) {
  if (d.vertex_count() == 0) throw Error(ErrorKind::EmptyGraph, "split of empty digraph");
  DegreeSplit s;
  s.threshold = std::pow(static_cast<double>(d.vertex_count()), cfg.threshold_exponent);
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    (static_cast<double>(d.degree(v)) >= s.threshold ? s.x : s.y).push_back(v);
  return s;
}

/// m >= 8n/eps^2 or Delta(D) <= eps^2 m / 4: the balanced random split alone
/// is within eps*m of m/4 on both sides.
inline bool dense_shortcut_applicable(const Digraph& d, double eps) {
  const double n = static_cast<double>(d.vertex_count());
  const double m = static_cast<double>(d.arc_count());
  if (m >= 8.0 * n / (eps * eps)) return true;
  return static_cast<double>(max_degree(d)) <= eps * eps * m / 4.0;
}

namespace detail {

// Places x so that it is forward (or backward) for the resulting partition.
// Balanced vertices have no orientation and go to X2.
inline void place(const Digraph& d, Vertex x, bool forward, CandidateXPartition& c) {
  const Count sp = stats_of(d, x).splus;
  if (sp == 0) {
    c.x2.push_back(x);
  } else if ((sp > 0) == forward) {
    c.x1.push_back(x);
  } else {
    c.x2.push_back(x);
  }
}

inline void finish(CandidateXPartition& c) {
  std::sort(c.x1.begin(), c.x1.end());
  std::sort(c.x2.begin(), c.x2.end());
}

}  // namespace detail

inline CandidateXPartition mingap_candidate(const GapResult& gr) {
  return {CandidateLabel::MinGap, gr.x1, gr.x2, Rational(1, 2)};
}

/**
 * Candidate partitions of X built from the huge vertices v1..v_{2k+1}
 * (s descending):
 *   MINGAP       the minimum-gap partition, p = 1/2
 *   X1FWD        v1..vk and X\X' forward, the rest backward, p = 1/2
 *   X2SIGN       k same-sign vertices among v1..v_{2k-1} plus X\X' forward,
 *                the other huge vertices backward, p = (d-1)/(2d)
 *   X3SIGN       those k vertices and X\X' in X1, the other huge vertices
 *                backward, p = (d-1)/(2d)
 *   X4, X5       d = 4 and k = 1 only, p = 5/14
 *   SINGLE-HUGE  |X'| = 1: the huge vertex forward, everything else backward
 * Throws HugeSetEven when |X'| is even.
 */
inline std::vector<CandidateXPartition> candidate_x_partitions(const Digraph& d,
                                                               std::span<const Vertex> x,
                                                               const GapResult& gr, Count deg) {
  std::vector<CandidateXPartition> out{mingap_candidate(gr)};
  if (!gr.k) {
    throw Error(ErrorKind::HugeSetEven, "|X'| = " + std::to_string(gr.huge.size()));
  }
  const auto k = static_cast<std::size_t>(*gr.k);
  const auto& hv = gr.huge;
  const auto in_huge = membership(d.vertex_count(), hv);
  VertexSet rest;
  for (Vertex v : x)
    if (!in_huge[v]) rest.push_back(v);
  const Rational p_sign(deg - 1, 2 * deg);

  {
    CandidateXPartition c{CandidateLabel::X1Fwd, {}, {}, Rational(1, 2)};
    for (std::size_t j = 0; j < hv.size(); ++j) detail::place(d, hv[j], j < k, c);
    for (Vertex v : rest) detail::place(d, v, true, c);
    detail::finish(c);
    out.push_back(std::move(c));
  }

  if (k >= 1) {
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t j = 0; j + 1 < 2 * k; ++j) {
      const Count sp = stats_of(d, hv[j]).splus;
      if (sp > 0) pos.push_back(j);
      if (sp < 0) neg.push_back(j);
    }
    const auto& same = pos.size() >= k ? pos : neg;
    if (same.size() >= k) {
      std::vector<std::uint8_t> chosen(hv.size(), 0);
      for (std::size_t i = 0; i < k; ++i) chosen[same[i]] = 1;

      CandidateXPartition c2{CandidateLabel::X2Sign, {}, {}, p_sign};
      for (std::size_t j = 0; j < hv.size(); ++j) detail::place(d, hv[j], chosen[j] != 0, c2);
      for (Vertex v : rest) detail::place(d, v, true, c2);
      detail::finish(c2);
      out.push_back(std::move(c2));

      CandidateXPartition c3{CandidateLabel::X3Sign, {}, {}, p_sign};
      for (std::size_t j = 0; j < hv.size(); ++j) {
        if (chosen[j]) {
          c3.x1.push_back(hv[j]);
        } else {
          detail::place(d, hv[j], false, c3);
        }
      }
      for (Vertex v : rest) c3.x1.push_back(v);
      detail::finish(c3);
      out.push_back(std::move(c3));
    }
  }

  if (deg == 4 && k == 1) {
    CandidateXPartition c4{CandidateLabel::X4, {}, {}, Rational(5, 14)};
    for (std::size_t j = 0; j < 3; ++j) detail::place(d, hv[j], j == 0, c4);
    for (Vertex v : rest) detail::place(d, v, true, c4);
    detail::finish(c4);
    out.push_back(std::move(c4));

    // Huge vertex with the most paired (b-counted) arcs, min(d+, d-).
    std::size_t pick = 0;
    Count best = -1;
    for (std::size_t j = 0; j < 3; ++j) {
      const auto st = stats_of(d, hv[j]);
      const Count paired = (st.degree - st.s) / 2;
      if (paired > best) {
        best = paired;
        pick = j;
      }
    }
    CandidateXPartition c5{CandidateLabel::X5, {}, {}, Rational(5, 14)};
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == pick) {
        c5.x1.push_back(hv[j]);
      } else {
        detail::place(d, hv[j], false, c5);
      }
    }
    for (Vertex v : rest) c5.x1.push_back(v);
    detail::finish(c5);
    out.push_back(std::move(c5));
  }

  if (hv.size() == 1) {
    CandidateXPartition c{CandidateLabel::SingleHuge, {}, {}, Rational(1, 2)};
    detail::place(d, hv[0], true, c);
    for (Vertex v : rest) detail::place(d, v, false, c);
    detail::finish(c);
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Randomised extension over Y.

/// Stream key for one trial; independent of scheduling.
inline std::uint64_t trial_stream(std::uint64_t seed, const CandidateXPartition& c,
                                  std::uint64_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(c.label));
  h = splitmix64(h ^ static_cast<std::uint64_t>(c.p.numerator()));
  h = splitmix64(h ^ static_cast<std::uint64_t>(c.p.denominator()));
  return splitmix64(h ^ trial);
}

/// One draw: X fixed by the candidate, each y in Y on side 1 with
/// probability cand.p, independently.
inline Bipartition sample_extension(const Digraph& d, const CandidateXPartition& cand,
                                    std::span<const Vertex> y, std::uint64_t stream) {
  Bipartition bp(d.vertex_count(), Side::Two);
  for (Vertex v : cand.x1) bp[v] = Side::One;
  std::mt19937_64 rng(stream);
  const double p = to_double(cand.p);
  for (Vertex v : y) bp[v] = bernoulli(rng, p) ? Side::One : Side::Two;
  return bp;
}

/// Change of (e12, e21) if v switches side.
inline std::pair<Count, Count> flip_delta(const Digraph& d, const Bipartition& p, Vertex v) {
  Count out1 = 0, out2 = 0, in1 = 0, in2 = 0;
  for (Vertex w : d.out_neighbors(v)) (p[w] == Side::One ? out1 : out2)++;
  for (Vertex w : d.in_neighbors(v)) (p[w] == Side::One ? in1 : in2)++;
  if (p[v] == Side::One) return {in1 - out2, out1 - in2};
  return {out2 - in1, in2 - out1};
}

/// Single-vertex hill climbing on (min{e12,e21}, e12+e21), lexicographically.
inline Bipartition local_improve(const Digraph& d, Bipartition p, std::size_t rounds) {
  CutValue cut = cut_counts(d, p);
  for (std::size_t r = 0; r < rounds; ++r) {
    bool moved = false;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      const auto [d12, d21] = flip_delta(d, p, v);
      const CutValue next(cut.e12 + d12, cut.e21 + d21);
      if (std::tie(next.minval, next.e12, next.e21) == std::tie(cut.minval, cut.e12, cut.e21)) continue;
      if (next.minval > cut.minval || (next.minval == cut.minval && next.sum() > cut.sum())) {
        p[v] = other(p[v]);
        cut = next;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return p;
}

inline Bipartition local_improve(const Digraph& d, Bipartition p, const EngineConfig& cfg) {
  return local_improve(d, std::move(p), cfg.local_improve_rounds);
}

namespace detail {

struct TrialBest {
  std::optional<Bipartition> bp;
  CutValue cut;
  std::uint64_t trial = 0;

  bool beats(const CutValue& c, std::uint64_t t) const {
    if (!bp) return true;
    if (c.minval != cut.minval) return c.minval > cut.minval;
    if (c.sum() != cut.sum()) return c.sum() > cut.sum();
    return t < trial;
  }
  void offer(Bipartition b, const CutValue& c, std::uint64_t t) {
    if (beats(c, t)) {
      bp = std::move(b);
      cut = c;
      trial = t;
    }
  }
};

}  // namespace detail

/// Best of cfg.trials independent extensions, each hill-climbed.
inline Bipartition extend_partition_randomized(const Digraph& d, const CandidateXPartition& cand,
                                               std::span<const Vertex> y, const EngineConfig& cfg) {
  const std::size_t workers = std::min(cfg.threads, cfg.trials);
  std::vector<detail::TrialBest> best(workers);
  auto run = [&](std::size_t w) {
    for (std::uint64_t t = w; t < cfg.trials; t += workers) {
      auto bp = local_improve(d, sample_extension(d, cand, y, trial_stream(cfg.seed, cand, t)), cfg);
      const auto cut = cut_counts(d, bp);
      best[w].offer(std::move(bp), cut, t);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  detail::TrialBest total;
  for (auto& b : best) total.offer(std::move(*b.bp), b.cut, b.trial);
  return std::move(*total.bp);
}

// ---------------------------------------------------------------------------

struct CandidateRun {
  CandidateXPartition candidate;
  CutValue cut;
};

struct PartitionOutcome {
  Bipartition bipartition;
  CutValue cut;
  double ratio = 0.0;
  CandidateLabel candidate_used = CandidateLabel::MinGap;
  Rational candidate_p{1, 2};
  Certificate certificate;
  /// (d-1) / (2(2d-1)) for the d actually used.
  Rational guarantee_target;
  Count d_used = 0;
  Count actual_min_outdegree = 0;
  bool shortcut_used = false;
  bool huge_even = false;
  DegreeSplit split;
  std::vector<CandidateRun> runs;
  std::vector<std::string> warnings;
};

inline Rational guarantee_target(Count d) { return Rational(d - 1, 2 * (2 * d - 1)); }

/**
 * Full pipeline: dense shortcut or degree split, minimum-gap partition of X,
 * candidate partitions, randomised extension with hill climbing, and a
 * certificate for the chosen split. The guarantee target is reported only.
 */
inline PartitionOutcome partition(const Digraph& d, const EngineConfig& cfg) {
  cfg.validate();
  if (d.vertex_count() == 0) throw Error(ErrorKind::EmptyGraph, "partition of empty digraph");
  PartitionOutcome out;
  out.actual_min_outdegree = min_outdegree(d);
  out.d_used = cfg.d;
  if (out.actual_min_outdegree < cfg.d) {
    out.d_used = std::max<Count>(1, out.actual_min_outdegree);
    out.warnings.push_back(std::string(to_string(ErrorKind::MinOutdegreeViolation)) +
                           ": minimum outdegree " + std::to_string(out.actual_min_outdegree) +
                           " < d = " + std::to_string(cfg.d) + "; using d = " +
                           std::to_string(out.d_used));
  }
  const Count deg = out.d_used;
  out.guarantee_target = guarantee_target(deg);

  const auto n = static_cast<Count>(d.vertex_count());
  const auto m = static_cast<Count>(d.arc_count());
  out.shortcut_used = dense_shortcut_applicable(d, cfg.epsilon) || m >= 128 * 49 * n;

  const GapOptions gopt{cfg.exhaustive_x_limit, cfg.dp_state_limit};
  GapResult gr;
  if (out.shortcut_used) {
    out.split.y = complement(d.vertex_count(), {});
    out.split.threshold = std::pow(static_cast<double>(n), cfg.threshold_exponent);
  } else {
    out.split = split_by_degree(d, cfg);
  }
  try {
    gr = min_gap_partition(d, out.split.x, out.split.y, gopt);
  } catch (const Error& e) {
    if (!is_resource_limit(e.kind())) throw;
    out.warnings.push_back(std::string(e.what()) + "; continuing with X empty");
    out.split.x.clear();
    out.split.y = complement(d.vertex_count(), {});
    gr = min_gap_partition(d, out.split.x, out.split.y, gopt);
  }

  std::vector<CandidateXPartition> cands;
  if (out.shortcut_used) {
    cands.push_back(mingap_candidate(gr));
  } else {
    try {
      cands = candidate_x_partitions(d, out.split.x, gr, deg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HugeSetEven) throw;
      out.huge_even = true;
      cands = {mingap_candidate(gr)};
    }
  }
  const std::size_t base = cands.size();
  for (std::size_t i = 0; i < base; ++i) {
    for (const auto& p : cfg.p_sweep) {
      if (p == cands[i].p) continue;
      auto c = cands[i];
      c.p = p;
      cands.push_back(std::move(c));
    }
  }

  // The X-side candidates pin X; on small inputs X is most of the graph, so
  // a fully random start over every vertex is kept as a fallback run.
  const std::size_t certified = cands.size();
  const VertexSet everyone = complement(d.vertex_count(), {});
  if (cfg.baseline_run && !out.split.x.empty()) {
    cands.push_back({CandidateLabel::Baseline, {}, {}, Rational(1, 2)});
  }

  std::optional<std::size_t> best;
  Bipartition best_bp;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const bool whole = cands[i].label == CandidateLabel::Baseline;
    auto bp = extend_partition_randomized(d, cands[i], whole ? everyone : out.split.y, cfg);
    const auto cut = cut_counts(d, bp);
    out.runs.push_back({cands[i], cut});
    if (!best || cut.minval > out.runs[*best].cut.minval ||
        (cut.minval == out.runs[*best].cut.minval && cut.sum() > out.runs[*best].cut.sum())) {
      best = i;
      best_bp = std::move(bp);
    }
  }
  out.bipartition = std::move(best_bp);
  out.cut = out.runs[*best].cut;
  out.candidate_used = cands[*best].label;
  out.candidate_p = cands[*best].p;
  out.ratio = m == 0 ? 0.0 : static_cast<double>(out.cut.minval) / static_cast<double>(m);

  const auto tr = essential_tight_components(d, out.split.y);
  cands.resize(certified);
  out.certificate = build_certificate(d, out.split.x, out.split.y, gr, tr, deg, cfg.epsilon, cands);
  if (out.huge_even) out.certificate.notes.emplace_back("huge set even: only MINGAP was extended");
  return out;
}

}  // namespace judicious
