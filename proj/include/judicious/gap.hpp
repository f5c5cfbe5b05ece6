#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "judicious/digraph.hpp"
#include "judicious/error.hpp"

namespace judicious {

struct GapOptions {
  /// Largest |X| searched exhaustively when X spans arcs.
  std::size_t exhaustive_limit = 24;
  /// Bound on (items + 1) * (2S + 1) subset-sum states.
  std::size_t state_limit = 100'000'000;
};

/// Forward/backward arc mass of a partition (X1, X2) of X against Y.
struct MfMb {
  Count mf = 0;      // e(X1,Y) + e(Y,X2)
  Count mb = 0;      // e(X2,Y) + e(Y,X1)
  Count z = 0;       // e(X1,Y)
  Count zprime = 0;  // e(Y,X2)
};

struct GapResult {
  VertexSet x1;
  VertexSet x2;
  Count theta = 0;
  Count theta_abs_min = 0;
  /// Vertices of X with s(x) >= theta_abs_min, s descending then id ascending.
  VertexSet huge;
  /// (|huge| - 1) / 2 when |huge| is odd.
  std::optional<Count> k;
  Count g = 0;
  Count b = 0;
  VertexSet forward;
  VertexSet backward;
  /// True when X spans arcs and the exhaustive route was used.
  bool exhaustive = false;
};

namespace detail {

inline void require_partition(std::size_t n, std::initializer_list<std::span<const Vertex>> parts) {
  std::vector<std::uint8_t> seen(n, 0);
  std::size_t total = 0;
  for (auto part : parts) {
    for (Vertex v : part) {
      if (v >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " with n = " + std::to_string(n));
      }
      if (seen[v]) {
        throw Error(ErrorKind::PartitionNotCovering,
                    "vertex " + std::to_string(v) + " appears in more than one part");
      }
      seen[v] = 1;
      ++total;
    }
  }
  if (total != n) {
    throw Error(ErrorKind::PartitionNotCovering, "parts cover " + std::to_string(total) +
                                                     " of " + std::to_string(n) + " vertices");
  }
}

inline VertexSet sorted(std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline MfMb mf_mb(const Digraph& d, std::span<const Vertex> x1, std::span<const Vertex> x2,
                  std::span<const Vertex> y) {
  detail::require_partition(d.vertex_count(), {x1, x2, y});
  MfMb r;
  r.z = e_between(d, x1, y);
  r.zprime = e_between(d, y, x2);
  r.mf = r.z + r.zprime;
  r.mb = e_between(d, x2, y) + e_between(d, y, x1);
  return r;
}

/// theta(X1,X2) = (e(X1,Y) + e(Y,X2)) - (e(X2,Y) + e(Y,X1)).
inline Count gap(const Digraph& d, std::span<const Vertex> x1, std::span<const Vertex> x2,
                 std::span<const Vertex> y) {
  const auto r = mf_mb(d, x1, x2, y);
  return r.mf - r.mb;
}

/// Splits X into (X1,X2)-forward and -backward vertices; balanced vertices
/// (s = 0) are in neither.
inline std::pair<VertexSet, VertexSet> orientation_classes(const Digraph& d,
                                                           std::span<const Vertex> x1,
                                                           std::span<const Vertex> x2) {
  VertexSet fwd;
  VertexSet bwd;
  for (Vertex x : x1) {
    const auto sp = stats_of(d, x).splus;
    if (sp > 0) fwd.push_back(x);
    if (sp < 0) bwd.push_back(x);
  }
  for (Vertex x : x2) {
    const auto sp = stats_of(d, x).splus;
    if (sp < 0) fwd.push_back(x);
    if (sp > 0) bwd.push_back(x);
  }
  std::sort(fwd.begin(), fwd.end());
  std::sort(bwd.begin(), bwd.end());
  return {fwd, bwd};
}

/// Fills huge, k, g, b, forward and backward from gr.x1, gr.x2, gr.theta_abs_min.
inline GapResult huge_and_residuals(const Digraph& d, std::span<const Vertex> x, GapResult gr) {
  gr.huge.clear();
  gr.g = 0;
  Count two_b = 0;
  for (Vertex v : x) {
    const auto st = stats_of(d, v);
    two_b += st.degree - st.s;
    if (st.s >= gr.theta_abs_min) {
      gr.huge.push_back(v);
    } else {
      gr.g += st.s;
    }
  }
  gr.b = two_b / 2;
  std::sort(gr.huge.begin(), gr.huge.end(), [&](Vertex a, Vertex b) {
    const auto sa = stats_of(d, a).s;
    const auto sb = stats_of(d, b).s;
    return sa != sb ? sa > sb : a < b;
  });
  if (gr.huge.size() % 2 == 1) {
    gr.k = static_cast<Count>((gr.huge.size() - 1) / 2);
  } else {
    gr.k.reset();
  }
  std::tie(gr.forward, gr.backward) = orientation_classes(d, gr.x1, gr.x2);
  return gr;
}

namespace detail {

// Signed-sum route: theta = sum_{X1} c(x) - sum_{X2} c(x) with c = s^+.
// Returns the lexicographically smallest X1-indicator vector (over X in id
// order) attaining the minimum |theta|; c = 0 vertices always land in X2.
inline GapResult min_gap_signed_sum(std::span<const Vertex> xs, std::span<const Count> c,
                                    const GapOptions& opt) {
  std::vector<std::size_t> items;
  Count total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (c[i] != 0) {
      items.push_back(i);
      total += std::abs(c[i]);
    }
  }
  const std::size_t width = static_cast<std::size_t>(2 * total + 1);
  if ((items.size() + 1) > opt.state_limit / width) {
    throw Error(ErrorKind::StateLimit, std::to_string(items.size() + 1) + " x " +
                                           std::to_string(width) + " subset-sum states exceed " +
                                           std::to_string(opt.state_limit));
  }
  // reach[j]: signed sums attainable by items j..end, offset by `total`.
  std::vector<boost::dynamic_bitset<>> reach(items.size() + 1, boost::dynamic_bitset<>(width));
  reach[items.size()].set(static_cast<std::size_t>(total));
  for (std::size_t j = items.size(); j-- > 0;) {
    const auto w = static_cast<std::size_t>(std::abs(c[items[j]]));
    reach[j] = (reach[j + 1] << w) | (reach[j + 1] >> w);
  }
  Count best = total;
  for (Count t = 0; t <= total; ++t) {
    if (reach[0].test(static_cast<std::size_t>(total + t)) ||
        reach[0].test(static_cast<std::size_t>(total - t))) {
      best = t;
      break;
    }
  }
  auto attainable = [&](std::size_t j, Count value) {
    return value >= -total && value <= total && reach[j].test(static_cast<std::size_t>(value + total));
  };
  GapResult gr;
  std::vector<std::uint8_t> in_x1(xs.size(), 0);
  Count prefix = 0;
  for (std::size_t j = 0; j < items.size(); ++j) {
    const Count ci = c[items[j]];
    const bool x2_ok = attainable(j + 1, best - prefix + ci) || attainable(j + 1, -best - prefix + ci);
    if (x2_ok) {
      prefix -= ci;
    } else {
      in_x1[items[j]] = 1;
      prefix += ci;
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) (in_x1[i] ? gr.x1 : gr.x2).push_back(xs[i]);
  gr.theta = prefix;
  gr.theta_abs_min = best;
  return gr;
}

// Gray-code enumeration of all 2^|X| partitions; a(x) = e(x,Y) - e(Y,x).
// Ties on |theta| go to the lexicographically smallest X1-indicator.
inline GapResult min_gap_exhaustive(std::span<const Vertex> xs, std::span<const Count> a) {
  const std::size_t k = xs.size();
  Count theta = 0;
  for (Count ai : a) theta -= ai;
  std::uint64_t mask = 0;  // bit i set <=> xs[i] in X1
  auto key_of = [k](std::uint64_t m) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1U) key |= std::uint64_t{1} << (k - 1 - i);
    return key;
  };
  Count best_abs = std::abs(theta);
  Count best_theta = theta;
  std::uint64_t best_mask = 0;
  std::uint64_t best_key = 0;
  const std::uint64_t steps = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(step));
    mask ^= std::uint64_t{1} << bit;
    theta += (mask >> bit & 1U) ? 2 * a[bit] : -2 * a[bit];
    const Count abs_theta = std::abs(theta);
    if (abs_theta > best_abs) continue;
    const auto key = key_of(mask);
    if (abs_theta < best_abs || key < best_key) {
      best_abs = abs_theta;
      best_theta = theta;
      best_mask = mask;
      best_key = key;
    }
  }
  GapResult gr;
  for (std::size_t i = 0; i < k; ++i) ((best_mask >> i & 1U) ? gr.x1 : gr.x2).push_back(xs[i]);
  gr.theta = best_theta;
  gr.theta_abs_min = best_abs;
  gr.exhaustive = true;
  return gr;
}

}  // namespace detail

/**
 * Partition of X minimising |theta| exactly, completed with the huge set and
 * residuals g, b.
 *
 * If X spans no arc, theta is a signed sum of s^+ values and a subset-sum
 * table over [-S, S] (S = sum of s over X) is used. Otherwise all 2^|X|
 * partitions are enumerated, up to opt.exhaustive_limit.
 */
inline GapResult min_gap_partition(const Digraph& d, std::span<const Vertex> x_in,
                                   std::span<const Vertex> y, const GapOptions& opt = {}) {
  detail::require_partition(d.vertex_count(), {x_in, y});
  const VertexSet xs = detail::sorted(x_in);
  const auto in_y = membership(d.vertex_count(), y);
  const Count inside = e_within(d, xs);

  std::vector<Count> coeff(xs.size());
  GapResult gr;
  if (inside == 0) {
    for (std::size_t i = 0; i < xs.size(); ++i) coeff[i] = stats_of(d, xs[i]).splus;
    gr = detail::min_gap_signed_sum(xs, coeff, opt);
  } else {
    if (xs.size() > opt.exhaustive_limit || xs.size() > 62) {
      throw Error(ErrorKind::XTooLarge, "|X| = " + std::to_string(xs.size()) + " with e(X) = " +
                                            std::to_string(inside) + " exceeds exhaustive limit " +
                                            std::to_string(opt.exhaustive_limit));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Count a = 0;
      for (Vertex w : d.out_neighbors(xs[i])) a += in_y[w];
      for (Vertex w : d.in_neighbors(xs[i])) a -= in_y[w];
      coeff[i] = a;
    }
    gr = detail::min_gap_exhaustive(xs, coeff);
  }
  return huge_and_residuals(d, xs, std::move(gr));
}

}  // namespace judicious
