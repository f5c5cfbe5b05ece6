#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "judicious/error.hpp"

namespace judicious {

using Vertex = std::uint32_t;
using Count = std::int64_t;
using VertexSet = std::vector<Vertex>;

struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/**
 * Loop-free digraph on vertices 0..n-1 with at most one arc per ordered
 * pair. Anti-parallel pairs (u,v), (v,u) are allowed. Immutable once built.
 *
 * Out- and in-neighbourhoods are stored as sorted CSR slices; arc membership
 * is answered from a hash index built at construction.
 */
class Digraph {
 public:
  Digraph() = default;

  Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    std::vector<std::size_t> out_count(n_ + 1, 0);
    std::vector<std::size_t> in_count(n_ + 1, 0);
    index_.reserve(arcs_.size() * 2);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const auto [u, v] = arcs_[i];
      if (u >= n_ || v >= n_) {
        throw Error(ErrorKind::VertexOutOfRange, "arc " + std::to_string(i) + " (" +
                                                     std::to_string(u) + "," + std::to_string(v) +
                                                     ") with n = " + std::to_string(n_));
      }
      if (u == v) {
        throw Error(ErrorKind::LoopArc, "arc " + std::to_string(i) + " is a loop at " +
                                            std::to_string(u));
      }
      if (!index_.insert(key(u, v)).second) {
        throw Error(ErrorKind::DuplicateArc, "arc " + std::to_string(i) + " (" +
                                                 std::to_string(u) + "," + std::to_string(v) +
                                                 ") repeats an earlier arc");
      }
      ++out_count[u + 1];
      ++in_count[v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) {
      out_count[v + 1] += out_count[v];
      in_count[v + 1] += in_count[v];
    }
    out_offsets_ = out_count;
    in_offsets_ = in_count;
    out_targets_.resize(arcs_.size());
    in_sources_.resize(arcs_.size());
    for (const auto& [u, v] : arcs_) {
      out_targets_[out_count[u]++] = v;
      in_sources_[in_count[v]++] = u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(out_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v]),
                out_targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v + 1]));
      std::sort(in_sources_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[v]),
                in_sources_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[v + 1]));
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Arcs in construction order.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  Count out_degree(Vertex v) const {
    return static_cast<Count>(out_offsets_[v + 1] - out_offsets_[v]);
  }
  Count in_degree(Vertex v) const {
    return static_cast<Count>(in_offsets_[v + 1] - in_offsets_[v]);
  }
  Count degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  bool has_arc(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && index_.count(key(u, v)) != 0;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
  }

  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<Vertex> in_sources_;
  std::unordered_set<std::uint64_t> index_;
};

inline Digraph from_arc_list(std::size_t n, std::span<const Arc> arcs) {
  return Digraph(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

inline Digraph from_arc_list(std::size_t n, std::initializer_list<Arc> arcs) {
  return Digraph(n, std::vector<Arc>(arcs));
}

struct VertexStats {
  Count dplus = 0;
  Count dminus = 0;
  Count degree = 0;
  Count splus = 0;
  Count sminus = 0;
  Count s = 0;

  friend bool operator==(const VertexStats&, const VertexStats&) = default;
};

inline VertexStats stats_of(const Digraph& d, Vertex v) {
  VertexStats st;
  st.dplus = d.out_degree(v);
  st.dminus = d.in_degree(v);
  st.degree = st.dplus + st.dminus;
  st.splus = st.dplus - st.dminus;
  st.sminus = -st.splus;
  st.s = std::max(st.splus, st.sminus);
  return st;
}

inline std::vector<VertexStats> vertex_stats(const Digraph& d) {
  std::vector<VertexStats> out(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) out[v] = stats_of(d, v);
  return out;
}

/// Indicator vector over V(D); throws VertexOutOfRange for foreign ids.
inline std::vector<std::uint8_t> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<std::uint8_t> mask(n, 0);
  for (Vertex v : set) {
    if (v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " with n = " + std::to_string(n));
    }
    mask[v] = 1;
  }
  return mask;
}

/// Number of arcs directed from A to B. A and B may overlap.
inline Count e_between(const Digraph& d, std::span<const Vertex> a, std::span<const Vertex> b) {
  const auto in_a = membership(d.vertex_count(), a);
  const auto in_b = membership(d.vertex_count(), b);
  Count total = 0;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    if (!in_a[u]) continue;
    for (Vertex v : d.out_neighbors(u)) total += in_b[v];
  }
  return total;
}

inline Count e_within(const Digraph& d, std::span<const Vertex> a) { return e_between(d, a, a); }

enum class Side : std::uint8_t { One = 1, Two = 2 };

constexpr Side other(Side s) { return s == Side::One ? Side::Two : Side::One; }

struct Bipartition {
  std::vector<Side> side;

  Bipartition() = default;
  explicit Bipartition(std::size_t n, Side fill = Side::One) : side(n, fill) {}

  std::size_t size() const noexcept { return side.size(); }
  Side operator[](Vertex v) const { return side[v]; }
  Side& operator[](Vertex v) { return side[v]; }

  VertexSet members(Side s) const {
    VertexSet out;
    for (Vertex v = 0; v < side.size(); ++v)
      if (side[v] == s) out.push_back(v);
    return out;
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct CutValue {
  Count e12 = 0;
  Count e21 = 0;
  Count minval = 0;

  CutValue() = default;
  CutValue(Count a, Count b) : e12(a), e21(b), minval(std::min(a, b)) {}

  Count sum() const { return e12 + e21; }

  friend bool operator==(const CutValue&, const CutValue&) = default;
};

inline CutValue cut_counts(const Digraph& d, const Bipartition& p) {
  if (p.size() != d.vertex_count()) {
    throw Error(ErrorKind::PreconditionViolated,
                "bipartition covers " + std::to_string(p.size()) + " of " +
                    std::to_string(d.vertex_count()) + " vertices");
  }
  Count e12 = 0;
  Count e21 = 0;
  for (const auto& [u, v] : d.arcs()) {
    if (p[u] == Side::One && p[v] == Side::Two) ++e12;
    if (p[u] == Side::Two && p[v] == Side::One) ++e21;
  }
  return {e12, e21};
}

inline Count max_degree(const Digraph& d) {
  if (d.vertex_count() == 0) throw Error(ErrorKind::EmptyGraph, "max_degree of empty digraph");
  Count best = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v) best = std::max(best, d.degree(v));
  return best;
}

inline Count min_outdegree(const Digraph& d) {
  if (d.vertex_count() == 0) throw Error(ErrorKind::EmptyGraph, "min_outdegree of empty digraph");
  Count best = d.out_degree(0);
  for (Vertex v = 1; v < d.vertex_count(); ++v) best = std::min(best, d.out_degree(v));
  return best;
}

inline bool is_eulerian(const Digraph& d) {
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) return false;
  return true;
}

/// Sorted complement of `set` in V(D).
inline VertexSet complement(std::size_t n, std::span<const Vertex> set) {
  const auto mask = membership(n, set);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!mask[v]) out.push_back(v);
  return out;
}

}  // namespace judicious
