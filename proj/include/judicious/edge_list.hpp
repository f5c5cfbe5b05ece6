#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "judicious/digraph.hpp"
#include "judicious/error.hpp"

namespace judicious {

// Edge-list text format:
//   # optional comment lines (anywhere)
//   n m
//   u v        (m lines, 0-based, arc u -> v)

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

/// Parses exactly two non-negative integers from a data line.
inline std::pair<unsigned long long, unsigned long long> two_ints(const std::string& line,
                                                                  std::size_t line_no) {
  std::istringstream in(line);
  long long a = 0;
  long long b = 0;
  if (!(in >> a >> b)) parse_fail(line_no, "expected two integers, got '" + line + "'");
  std::string rest;
  if (in >> rest) parse_fail(line_no, "trailing token '" + rest + "'");
  if (a < 0 || b < 0) parse_fail(line_no, "negative value");
  return {static_cast<unsigned long long>(a), static_cast<unsigned long long>(b)};
}

}  // namespace detail

inline Digraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned long long n = 0;
  unsigned long long m = 0;
  std::vector<Arc> arcs;
  std::vector<std::size_t> arc_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line)) continue;
    const auto [a, b] = detail::two_ints(line, line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      arcs.reserve(m);
      continue;
    }
    if (arcs.size() == m) detail::parse_fail(line_no, "more than the declared " + std::to_string(m) + " arcs");
    if (a >= n || b >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line_no) + ": arc (" +
                                                   std::to_string(a) + "," + std::to_string(b) +
                                                   ") with n = " + std::to_string(n));
    }
    arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    arc_lines.push_back(line_no);
  }
  if (!have_header) detail::parse_fail(line_no, "missing 'n m' header");
  if (arcs.size() != m) {
    detail::parse_fail(line_no, "declared " + std::to_string(m) + " arcs but found " +
                                    std::to_string(arcs.size()));
  }
  try {
    return Digraph(n, std::move(arcs));
  } catch (const Error& e) {
    // Re-attach the offending line: the constructor reports the arc index.
    const std::string what = e.what();
    const auto pos = what.find("arc ");
    if (pos != std::string::npos) {
      std::size_t idx = 0;
      if (std::istringstream(what.substr(pos + 4)) >> idx; idx < arc_lines.size()) {
        throw Error(e.kind(), "line " + std::to_string(arc_lines[idx]) + ": " + what);
      }
    }
    throw;
  }
}

inline Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  write_edge_list(out, d);
  return out.str();
}

inline Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

/// One vertex id per line; blank and '#' lines are skipped.
inline VertexSet read_vertex_list(std::istream& in, std::size_t n) {
  VertexSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    long long v = 0;
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) detail::parse_fail(line_no, "expected one vertex id, got '" + line + "'");
    if (v < 0 || static_cast<unsigned long long>(v) >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " with n = " + std::to_string(n));
    }
    out.push_back(static_cast<Vertex>(v));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorKind::ParseError, "vertex list repeats an id");
  }
  return out;
}

inline VertexSet read_vertex_list_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return read_vertex_list(in, n);
}

}  // namespace judicious
