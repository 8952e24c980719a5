#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coloring.hpp"
#include "digraph.hpp"
#include "errors.hpp"

// Edge-list documents: a header line "n m", then m lines "u v" with
// 0 <= u,v < n. Lines starting with '#' are comments.

namespace dichro::io {

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string s;
  for (std::size_t no = 1; std::getline(in, s); ++no) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos || s[first] == '#') continue;
    lines.push_back({no, s});
  }
  return lines;
}

/// Reads exactly two non-negative integers from the line.
inline std::pair<std::size_t, std::size_t> two_numbers(const Line& line, const char* what) {
  std::istringstream in(line.text);
  long long a = -1, b = -1;
  std::string extra;
  if (!(in >> a >> b) || (in >> extra) || a < 0 || b < 0)
    throw parse_error(line.number, std::string("expected ") + what);
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

}  // namespace detail

inline Digraph parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw parse_error(1, "missing header \"n m\"");
  const auto [n, m] = detail::two_numbers(lines[0], "header \"n m\"");
  Digraph d = Digraph::with_vertices(n);
  std::size_t seen = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto [u, v] = detail::two_numbers(line, "arc \"u v\"");
    if (u >= n || v >= n) throw parse_error(line.number, "vertex id out of range");
    if (u == v) throw parse_error(line.number, "loop at vertex " + std::to_string(u));
    if (d.has_arc(u, v)) throw parse_error(line.number, "duplicate arc");
    d.insert_arc(u, v);
    ++seen;
  }
  if (seen != m) {
    const std::size_t where = lines.size() > 1 ? lines.back().number : lines[0].number;
    throw parse_error(where, "header announces " + std::to_string(m) + " arcs, found " + std::to_string(seen));
  }
  return d;
}

/// Dense re-indexing in ascending id order; non-identity maps are written as
/// "# map old new" comments.
inline std::string serialize_edge_list(const Digraph& d) {
  std::map<Vertex, Vertex> dense;
  for (Vertex v : d.vertices()) dense.emplace(v, dense.size());
  std::ostringstream out;
  for (const auto& [old_id, new_id] : dense)
    if (old_id != new_id) out << "# map " << old_id << ' ' << new_id << '\n';
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << dense.at(u) << ' ' << dense.at(v) << '\n';
  return out.str();
}

/// "vertex color" lines.
inline Coloring parse_coloring(std::string_view text) {
  Coloring c;
  for (const auto& line : detail::content_lines(text)) {
    const auto [v, col] = detail::two_numbers(line, "\"vertex color\"");
    if (col < 1) throw parse_error(line.number, "colours are 1-based");
    if (c.covers(v)) throw parse_error(line.number, "vertex coloured twice");
    c.set(v, static_cast<int>(col));
  }
  c.palette_size = c.max_color();
  return c;
}

inline std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  for (const auto& [v, col] : c.assignment) out << v << ' ' << col << '\n';
  return out.str();
}

}  // namespace dichro::io
