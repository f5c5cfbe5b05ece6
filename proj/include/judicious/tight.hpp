#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "judicious/digraph.hpp"

namespace judicious {

/// A biconnected block of an undirected graph, or an isolated vertex.
struct Block {
  VertexSet vertices;
  std::size_t edges = 0;

  bool is_odd_clique() const {
    const std::size_t k = vertices.size();
    return k % 2 == 1 && edges == k * (k - 1) / 2;
  }
};

struct TightReport {
  std::vector<VertexSet> components;
  std::vector<bool> tight_flags;
  std::vector<bool> essential_flags;
  std::size_t tau = 0;
};

namespace detail {

// Simple undirected graph induced on `verts` (local ids 0..|verts|-1).
struct LocalGraph {
  VertexSet verts;
  std::vector<std::vector<std::uint32_t>> adj;
};

inline LocalGraph underlying_local(const Digraph& d, std::span<const Vertex> verts) {
  LocalGraph g;
  g.verts.assign(verts.begin(), verts.end());
  std::sort(g.verts.begin(), g.verts.end());
  std::vector<std::int64_t> local(d.vertex_count(), -1);
  for (std::size_t i = 0; i < g.verts.size(); ++i) local[g.verts[i]] = static_cast<std::int64_t>(i);
  g.adj.resize(g.verts.size());
  for (std::size_t i = 0; i < g.verts.size(); ++i) {
    auto& row = g.adj[i];
    for (Vertex w : d.out_neighbors(g.verts[i]))
      if (local[w] >= 0) row.push_back(static_cast<std::uint32_t>(local[w]));
    for (Vertex w : d.in_neighbors(g.verts[i]))
      if (local[w] >= 0) row.push_back(static_cast<std::uint32_t>(local[w]));
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

}  // namespace detail

/// Connected components of the underlying simple graph of D[Y], each sorted,
/// ordered by smallest vertex.
inline std::vector<VertexSet> underlying_components(const Digraph& d, std::span<const Vertex> y) {
  const auto g = detail::underlying_local(d, y);
  std::vector<VertexSet> out;
  std::vector<std::uint8_t> seen(g.verts.size(), 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < g.verts.size(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      comp.push_back(g.verts[u]);
      for (auto w : g.adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/**
 * Biconnected blocks of the underlying graph induced on a vertex set
 * (usually one connected component). Bridges come out as two-vertex blocks; an isolated vertex is its own
 * block with no edges. Iterative Hopcroft-Tarjan with an edge stack.
 */
inline std::vector<Block> blocks(const Digraph& d, std::span<const Vertex> component) {
  const auto g = detail::underlying_local(d, component);
  const std::size_t c = g.verts.size();
  std::vector<Block> out;
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> disc(c, kNone);
  std::vector<std::uint32_t> low(c, 0);
  std::vector<std::uint32_t> parent(c, kNone);
  std::vector<std::size_t> next(c, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_stack;
  std::vector<std::uint32_t> dfs;
  std::vector<std::uint32_t> mark(c, kNone);
  std::uint32_t clock = 0;

  auto emit_block = [&](std::uint32_t p, std::uint32_t u) {
    Block blk;
    const auto stamp = static_cast<std::uint32_t>(out.size());
    while (!edge_stack.empty()) {
      const auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      ++blk.edges;
      for (auto v : {a, b}) {
        if (mark[v] != stamp) {
          mark[v] = stamp;
          blk.vertices.push_back(g.verts[v]);
        }
      }
      if (a == p && b == u) break;
    }
    std::sort(blk.vertices.begin(), blk.vertices.end());
    out.push_back(std::move(blk));
  };

  for (std::uint32_t root = 0; root < c; ++root) {
    if (disc[root] != kNone) continue;
    if (g.adj[root].empty()) {
      disc[root] = clock++;
      out.push_back(Block{{g.verts[root]}, 0});
      continue;
    }
    disc[root] = low[root] = clock++;
    dfs.assign(1, root);
    while (!dfs.empty()) {
      const auto u = dfs.back();
      if (next[u] < g.adj[u].size()) {
        const auto w = g.adj[u][next[u]++];
        if (disc[w] == kNone) {
          parent[w] = u;
          disc[w] = low[w] = clock++;
          edge_stack.emplace_back(u, w);
          dfs.push_back(w);
        } else if (w != parent[u] && disc[w] < disc[u]) {
          edge_stack.emplace_back(u, w);
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        dfs.pop_back();
        const auto p = parent[u];
        if (p == kNone) continue;
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) emit_block(p, u);
      }
    }
  }
  return out;
}

/// True iff every block of the component is a complete graph of odd order.
inline bool is_tight(const Digraph& d, std::span<const Vertex> component) {
  const auto bs = blocks(d, component);
  return std::all_of(bs.begin(), bs.end(), [](const Block& b) { return b.is_odd_clique(); });
}

/// True iff D restricted to `verts` has no pair of opposite arcs.
inline bool has_no_antiparallel(const Digraph& d, std::span<const Vertex> verts) {
  const auto inside = membership(d.vertex_count(), verts);
  for (Vertex u : verts)
    for (Vertex v : d.out_neighbors(u))
      if (inside[v] && d.has_arc(v, u)) return false;
  return true;
}

inline TightReport essential_tight_components(const Digraph& d, std::span<const Vertex> y) {
  TightReport r;
  r.components = underlying_components(d, y);
  const std::size_t nc = r.components.size();
  std::vector<std::int64_t> comp_of(d.vertex_count(), -1);
  for (std::size_t i = 0; i < nc; ++i)
    for (Vertex v : r.components[i]) comp_of[v] = static_cast<std::int64_t>(i);

  // blocks() handles disconnected input, so one pass covers every component.
  std::vector<bool> tight(nc, true);
  for (const auto& blk : blocks(d, y)) {
    if (!blk.is_odd_clique()) tight[static_cast<std::size_t>(comp_of[blk.vertices.front()])] = false;
  }
  std::vector<bool> antiparallel(nc, false);
  for (Vertex u : y) {
    for (Vertex v : d.out_neighbors(u)) {
      if (comp_of[v] >= 0 && d.has_arc(v, u)) antiparallel[static_cast<std::size_t>(comp_of[u])] = true;
    }
  }
  r.tight_flags = tight;
  r.essential_flags.assign(nc, false);
  for (std::size_t i = 0; i < nc; ++i) {
    r.essential_flags[i] = tight[i] && !antiparallel[i];
    if (r.essential_flags[i]) ++r.tau;
  }
  return r;
}

}  // namespace judicious
