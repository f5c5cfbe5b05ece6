#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "judicious/digraph.hpp"
#include "judicious/error.hpp"

namespace judicious {

struct OracleResult {
  Count optimum = 0;
  Bipartition witness;
  std::uint64_t evaluated = 0;
};

/**
 * Exact max over bipartitions of min{e(V1,V2), e(V2,V1)}.
 *
 * Vertex 0 stays on side 1; the remaining n-1 vertices run through a
 * reflected Gray code so each step moves one vertex and the two cut counts
 * are updated from its neighbourhood alone. The witness is the first optimum
 * met in that order.
 */
inline OracleResult exact_max_min_cut(const Digraph& d, std::size_t limit = 24) {
  const std::size_t n = d.vertex_count();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "oracle on empty digraph");
  if (n > limit || n > 63) {
    throw Error(ErrorKind::TooLarge,
                "n = " + std::to_string(n) + " exceeds oracle limit " + std::to_string(limit));
  }
  std::vector<Side> side(n, Side::One);
  Count e12 = 0;
  Count e21 = 0;
  OracleResult res;
  res.optimum = 0;
  res.witness = Bipartition(n);
  res.evaluated = 1;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto v = static_cast<Vertex>(__builtin_ctzll(step) + 1);
    const Side from = side[v];
    // Remove v's contribution, move it, add it back.
    for (Vertex w : d.out_neighbors(v)) {
      if (from == Side::One && side[w] == Side::Two) --e12;
      if (from == Side::Two && side[w] == Side::One) --e21;
    }
    for (Vertex w : d.in_neighbors(v)) {
      if (side[w] == Side::One && from == Side::Two) --e12;
      if (side[w] == Side::Two && from == Side::One) --e21;
    }
    const Side to = other(from);
    side[v] = to;
    for (Vertex w : d.out_neighbors(v)) {
      if (to == Side::One && side[w] == Side::Two) ++e12;
      if (to == Side::Two && side[w] == Side::One) ++e21;
    }
    for (Vertex w : d.in_neighbors(v)) {
      if (side[w] == Side::One && to == Side::Two) ++e12;
      if (side[w] == Side::Two && to == Side::One) ++e21;
    }
    ++res.evaluated;
    const Count val = std::min(e12, e21);
    if (val > res.optimum) {
      res.optimum = val;
      res.witness.side = side;
    }
  }
  return res;
}

struct MinGapWitness {
  Count theta_abs = 0;
  VertexSet x1;
  VertexSet x2;
  std::uint64_t evaluated = 0;
};

/// Brute-force min |theta| over all 2^|X| partitions of X, maintaining the
/// four counts e(X1,Y), e(Y,X1), e(X2,Y), e(Y,X2) of the gap definition.
/// Starts from X1 = {} and keeps the first optimum in Gray-code order.
inline MinGapWitness exact_min_gap(const Digraph& d, std::span<const Vertex> x,
                                   std::span<const Vertex> y, std::size_t limit = 24) {
  if (x.size() > limit || x.size() > 62) {
    throw Error(ErrorKind::TooLarge, "|X| = " + std::to_string(x.size()) +
                                         " exceeds oracle limit " + std::to_string(limit));
  }
  const auto in_y = membership(d.vertex_count(), y);
  VertexSet xs(x.begin(), x.end());
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size();
  std::vector<Count> to_y(k, 0);
  std::vector<Count> from_y(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex w : d.out_neighbors(xs[i])) to_y[i] += in_y[w];
    for (Vertex w : d.in_neighbors(xs[i])) from_y[i] += in_y[w];
  }
  Count x1_to_y = 0;
  Count y_to_x1 = 0;
  Count x2_to_y = 0;
  Count y_to_x2 = 0;
  for (std::size_t i = 0; i < k; ++i) {
    x2_to_y += to_y[i];
    y_to_x2 += from_y[i];
  }
  auto current = [&] { return std::abs((x1_to_y + y_to_x2) - (x2_to_y + y_to_x1)); };
  std::uint64_t mask = 0;
  std::uint64_t best_mask = 0;
  MinGapWitness res;
  res.theta_abs = current();
  res.evaluated = 1;
  const std::uint64_t steps = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto i = static_cast<std::size_t>(__builtin_ctzll(step));
    mask ^= std::uint64_t{1} << i;
    const Count sign = (mask >> i & 1U) ? 1 : -1;
    x1_to_y += sign * to_y[i];
    y_to_x1 += sign * from_y[i];
    x2_to_y -= sign * to_y[i];
    y_to_x2 -= sign * from_y[i];
    ++res.evaluated;
    if (const Count t = current(); t < res.theta_abs) {
      res.theta_abs = t;
      best_mask = mask;
    }
  }
  for (std::size_t i = 0; i < k; ++i) ((best_mask >> i & 1U) ? res.x1 : res.x2).push_back(xs[i]);
  return res;
}

}  // namespace judicious
