#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "judicious/digraph.hpp"
#include "judicious/error.hpp"
#include "judicious/rng.hpp"

namespace judicious {

namespace detail {

// Rotational tournament on `verts`: verts[i] -> verts[i+j] for j = 1..(q-1)/2.
inline void append_eulerian_clique(std::vector<Arc>& arcs, const VertexSet& verts) {
  const std::size_t q = verts.size();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 1; j <= (q - 1) / 2; ++j) arcs.push_back({verts[i], verts[(i + j) % q]});
}

inline VertexSet range(Vertex from, Vertex count) {
  VertexSet v(count);
  for (Vertex i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

}  // namespace detail

/// Eulerian orientation of K_q, q odd.
inline Digraph gen_eulerian_complete(std::size_t q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenOrder, "q = " + std::to_string(q) + " is even");
  std::vector<Arc> arcs;
  detail::append_eulerian_clique(arcs, detail::range(0, static_cast<Vertex>(q)));
  return Digraph(q, std::move(arcs));
}

/**
 * `copies` Eulerian K_{2d-1} (vertices first) followed by one Eulerian
 * K_{2d+1}. With `augment`, the i-th small-clique vertex gets one extra arc
 * into the big clique (target i mod 2d+1), lifting its outdegree to d.
 */
inline Digraph gen_tight_extremal(std::size_t d, std::size_t copies, bool augment = false) {
  if (d < 2) throw Error(ErrorKind::InfeasibleParams, "d must be >= 2");
  const auto small = static_cast<Vertex>(2 * d - 1);
  const auto big = static_cast<Vertex>(2 * d + 1);
  const auto base = static_cast<Vertex>(copies * small);
  std::vector<Arc> arcs;
  for (std::size_t c = 0; c < copies; ++c)
    detail::append_eulerian_clique(arcs, detail::range(static_cast<Vertex>(c * small), small));
  detail::append_eulerian_clique(arcs, detail::range(base, big));
  if (augment) {
    for (Vertex v = 0; v < base; ++v) arcs.push_back({v, base + v % big});
  }
  return Digraph(base + big, std::move(arcs));
}

/// Vertex 0 is the centre. Triangle 0->1->2->0, every other leaf points at 0.
inline Digraph gen_star_triangle(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::TooSmall, "star-triangle needs n >= 4");
  std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}};
  for (Vertex v = 3; v < n; ++v) arcs.push_back({v, 0});
  return Digraph(n, std::move(arcs));
}

/**
 * X = {0..4} (v1..v5), Y = the rest. v1 -> every y, every y -> v2..v5, and
 * X is a complete bidirected K5.
 */
inline Digraph gen_sec6_d4(std::size_t n) {
  if (n <= 9) throw Error(ErrorKind::TooSmall, "needs n > 9");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < 5; ++i)
    for (Vertex j = 0; j < 5; ++j)
      if (i != j) arcs.push_back({i, j});
  for (Vertex y = 5; y < n; ++y) {
    arcs.push_back({0, y});
    for (Vertex i = 1; i < 5; ++i) arcs.push_back({y, i});
  }
  return Digraph(n, std::move(arcs));
}

/**
 * X = {0,1,2}, Y = the rest. Every y -> every x; x_i -> y_{6i}..y_{6i+5};
 * plus a random 3-out-regular digraph on Y (3 distinct out-neighbours each).
 * n >= 30 is accepted although the construction is meant for n > 900.
 */
inline Digraph gen_sec6_d6(std::size_t n, std::uint64_t seed) {
  if (n < 30) throw Error(ErrorKind::TooSmall, "needs n >= 30");
  const auto ny = static_cast<Vertex>(n - 3);
  std::vector<Arc> arcs;
  for (Vertex y = 3; y < n; ++y)
    for (Vertex x = 0; x < 3; ++x) arcs.push_back({y, x});
  for (Vertex x = 0; x < 3; ++x)
    for (Vertex j = 0; j < 6; ++j) arcs.push_back({x, 3 + 6 * x + j});
  std::mt19937_64 rng(splitmix64(seed));
  // Partial Fisher-Yates over the other ny-1 vertices of Y never repeats a
  // head, so no retries are needed.
  std::vector<Vertex> pool(ny - 1);
  for (Vertex i = 0; i < ny; ++i) {
    for (Vertex j = 0, t = 0; j < ny; ++j)
      if (j != i) pool[t++] = j;
    for (Vertex k = 0; k < 3; ++k) {
      const auto r = k + static_cast<Vertex>(uniform_below(rng, ny - 1 - k));
      std::swap(pool[k], pool[r]);
      arcs.push_back({3 + i, 3 + pool[k]});
    }
  }
  Digraph dg(n, std::move(arcs));
  if (min_outdegree(dg) != 6) throw Error(ErrorKind::RegularityFailure, "minimum outdegree is not 6");
  return dg;
}

/// Each vertex gets d distinct uniform out-neighbours, then `extra` further
/// distinct random arcs.
inline Digraph gen_random_minout(std::size_t n, std::size_t d, std::size_t extra,
                                 std::uint64_t seed) {
  if (n < 1 || d >= n) throw Error(ErrorKind::InfeasibleParams, "need d < n");
  const std::uint64_t cap = static_cast<std::uint64_t>(n) * (n - 1);
  if (static_cast<std::uint64_t>(n) * d + extra > cap) {
    throw Error(ErrorKind::InfeasibleParams, "more arcs requested than n(n-1)");
  }
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<Arc> arcs;
  arcs.reserve(n * d + extra);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(n * d + extra);
  auto key = [n](Vertex u, Vertex v) { return static_cast<std::uint64_t>(u) * n + v; };

  std::vector<Vertex> pool;
  for (Vertex u = 0; u < n; ++u) {
    if (2 * d < n) {
      // Sparse: rejection is cheap.
      for (std::size_t got = 0; got < d;) {
        const auto v = static_cast<Vertex>(uniform_below(rng, n));
        if (v == u || !seen.insert(key(u, v)).second) continue;
        arcs.push_back({u, v});
        ++got;
      }
    } else {
      pool.clear();
      for (Vertex v = 0; v < n; ++v)
        if (v != u) pool.push_back(v);
      for (std::size_t k = 0; k < d; ++k) {
        const auto r = k + uniform_below(rng, pool.size() - k);
        std::swap(pool[k], pool[r]);
        seen.insert(key(u, pool[k]));
        arcs.push_back({u, pool[k]});
      }
    }
  }
  // Dense extra requests would crawl under rejection; list the free pairs.
  if (extra > 0 && 2 * (n * d + extra) > cap) {
    std::vector<Arc> free;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && !seen.count(key(u, v))) free.push_back({u, v});
    for (std::size_t k = 0; k < extra; ++k) {
      const auto r = k + uniform_below(rng, free.size() - k);
      std::swap(free[k], free[r]);
      arcs.push_back(free[k]);
    }
  } else {
    for (std::size_t got = 0; got < extra;) {
      const auto u = static_cast<Vertex>(uniform_below(rng, n));
      const auto v = static_cast<Vertex>(uniform_below(rng, n));
      if (u == v || !seen.insert(key(u, v)).second) continue;
      arcs.push_back({u, v});
      ++got;
    }
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace judicious
