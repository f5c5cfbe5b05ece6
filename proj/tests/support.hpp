#pragma once

// Shared fixtures: arbitrary random digraphs and a fixed instance corpus.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "judicious/judicious.hpp"

namespace jt {

using namespace judicious;

/// Each ordered pair becomes an arc with probability `density`; pairs inside
/// `no_arcs_within` are skipped.
inline Digraph random_digraph(std::size_t n, double density, std::uint64_t seed,
                              const VertexSet& no_arcs_within = {}) {
  std::mt19937_64 rng(splitmix64(seed));
  const auto banned = membership(n, no_arcs_within);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !(banned[u] && banned[v]) && bernoulli(rng, density)) arcs.push_back({u, v});
  return Digraph(n, std::move(arcs));
}

/// `k` distinct vertices out of n, sorted.
inline VertexSet random_subset(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed ^ 0xabcdefULL));
  std::vector<Vertex> pool(n);
  for (Vertex i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  VertexSet out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

struct Instance {
  std::string name;
  Digraph graph;
  VertexSet x;
};

inline VertexSet iota_set(Vertex from, Vertex to) {
  VertexSet s;
  for (Vertex v = from; v < to; ++v) s.push_back(v);
  return s;
}

/// Fixed corpus: random instances with independent X, random min-outdegree
/// instances with the degree split, and the named families.
inline std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (std::uint64_t s = 0; s < 24; ++s) {
    const std::size_t n = 8 + s % 13;
    const auto x = random_subset(n, 1 + s % 7, 100 + s);
    out.push_back({"random-indep-" + std::to_string(s), random_digraph(n, 0.2 + 0.03 * (s % 5), 100 + s, x), x});
  }
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::size_t n = 30 + 7 * s;
    auto g = gen_random_minout(n, 2 + s % 3, 3 * n, 200 + s);
    // X = the six highest-degree vertices, ties to the smaller id.
    VertexSet order = iota_set(0, static_cast<Vertex>(n));
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    VertexSet x(order.begin(), order.begin() + 6);
    std::sort(x.begin(), x.end());
    out.push_back({"random-minout-" + std::to_string(s), std::move(g), std::move(x)});
  }
  for (std::size_t q : {3, 5, 7, 9, 11}) out.push_back({"eulerian-" + std::to_string(q), gen_eulerian_complete(q), {}});
  out.push_back({"tight-extremal-2x4", gen_tight_extremal(4, 2, false), {}});
  out.push_back({"tight-extremal-aug-2x3", gen_tight_extremal(3, 2, true), iota_set(10, 17)});
  for (std::size_t n : {4, 9, 15}) out.push_back({"star-triangle-" + std::to_string(n), gen_star_triangle(n), {0}});
  for (std::size_t n : {10, 20, 40}) out.push_back({"sec6-d4-" + std::to_string(n), gen_sec6_d4(n), iota_set(0, 5)});
  for (std::size_t n : {30, 60, 120}) {
    out.push_back({"sec6-d6-" + std::to_string(n), gen_sec6_d6(n, n), iota_set(0, 3)});
  }
  return out;
}

/// Tight test straight from the definition, no DFS lowpoints. Two edges u-v
/// and v-w lie in one block iff u and w stay connected once v is deleted;
/// blocks are the transitive closure of that relation. Each block must then
/// be an odd clique.
inline bool naive_is_tight(const Digraph& d, const VertexSet& comp) {
  const std::size_t c = comp.size();
  std::vector<std::vector<bool>> adj(c, std::vector<bool>(c, false));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (i != j && (d.has_arc(comp[i], comp[j]) || d.has_arc(comp[j], comp[i]))) adj[i][j] = true;
  auto connected_without = [&](std::size_t a, std::size_t b, std::size_t removed) {
    std::vector<bool> seen(c, false);
    std::vector<std::size_t> st{a};
    seen[a] = true;
    seen[removed] = true;
    while (!st.empty()) {
      auto u = st.back();
      st.pop_back();
      if (u == b) return true;
      for (std::size_t w = 0; w < c; ++w)
        if (adj[u][w] && !seen[w]) {
          seen[w] = true;
          st.push_back(w);
        }
    }
    return false;
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j)
      if (adj[i][j]) edges.emplace_back(i, j);
  const std::size_t e = edges.size();
  std::vector<std::size_t> cls(e);
  for (std::size_t i = 0; i < e; ++i) cls[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) { return cls[i] == i ? i : cls[i] = find(cls[i]); };
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i + 1; j < e; ++j) {
      auto [a, b] = edges[i];
      auto [p, q] = edges[j];
      std::size_t shared = c, u = 0, w = 0;
      if (a == p) { shared = a; u = b; w = q; }
      else if (a == q) { shared = a; u = b; w = p; }
      else if (b == p) { shared = b; u = a; w = q; }
      else if (b == q) { shared = b; u = a; w = p; }
      if (shared == c) continue;
      if (connected_without(u, w, shared)) cls[find(i)] = find(j);
    }
  std::map<std::size_t, std::pair<std::set<std::size_t>, std::size_t>> blk;
  for (std::size_t i = 0; i < e; ++i) {
    auto& [vs, cnt] = blk[find(i)];
    vs.insert(edges[i].first);
    vs.insert(edges[i].second);
    ++cnt;
  }
  for (const auto& [id, b] : blk) {
    const std::size_t k = b.first.size();
    if (k % 2 == 0 || b.second != k * (k - 1) / 2) return false;
  }
  return true;  // an isolated vertex is K1
}

}  // namespace jt
