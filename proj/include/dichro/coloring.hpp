#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "digraph.hpp"

namespace dichro {

/// Vertex -> colour in [1, palette_size].
struct Coloring {
  std::map<Vertex, int> assignment;
  int palette_size = 0;

  int color(Vertex v) const {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw std::invalid_argument("vertex " + std::to_string(v) + " is uncoloured");
    return it->second;
  }

  void set(Vertex v, int c) { assignment[v] = c; }

  bool covers(Vertex v) const { return assignment.count(v) != 0; }

  std::size_t colors_used() const {
    std::set<int> seen;
    for (const auto& [v, c] : assignment) seen.insert(c);
    return seen.size();
  }

  int max_color() const {
    int m = 0;
    for (const auto& [v, c] : assignment) m = std::max(m, c);
    return m;
  }

  bool within_palette() const {
    return std::all_of(assignment.begin(), assignment.end(),
                       [&](const auto& e) { return e.second >= 1 && e.second <= palette_size; });
  }

  VertexSet color_class(int c) const {
    VertexSet r;
    for (const auto& [v, col] : assignment)
      if (col == c) r.insert(v);
    return r;
  }

  /// Exchanges two colours everywhere.
  void swap_colors(int a, int b) {
    if (a == b) return;
    for (auto& [v, c] : assignment) {
      if (c == a) c = b;
      else if (c == b) c = a;
    }
  }

  /// Adds offset to every colour (palette_size is left to the caller).
  void shift(int offset) {
    for (auto& [v, c] : assignment) c += offset;
  }

  /// Copies the colours of other onto the vertices it covers.
  void merge(const Coloring& other) {
    for (const auto& [v, c] : other.assignment) assignment[v] = c;
  }
};

}  // namespace dichro
