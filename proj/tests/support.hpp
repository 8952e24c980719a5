#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dichro/dichro.hpp"

namespace testing_support {

using namespace dichro;

/// Uniformly random labeled digraph on 0..n-1 (digons allowed).
inline Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Digraph d = Digraph::with_vertices(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.insert_arc(u, v);
  return d;
}

/// Calls f on every labeled digraph on 0..n-1.
inline void for_each_digraph(std::size_t n, const std::function<void(const Digraph&)>& f) {
  std::vector<Arc> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Digraph d = Digraph::with_vertices(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) d.insert_arc(slots[i].first, slots[i].second);
    f(d);
  }
}

/// Directed cycle search by trying every vertex sequence; only for tiny n.
inline bool has_cycle_by_enumeration(const Digraph& d) {
  std::vector<Vertex> vs(d.vertices().begin(), d.vertices().end());
  const std::size_t n = vs.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(vs[i]);
    if (sub.size() < 2) continue;
    std::sort(sub.begin(), sub.end());
    do {
      bool closed = true;
      for (std::size_t i = 0; i < sub.size() && closed; ++i) closed = d.has_arc(sub[i], sub[(i + 1) % sub.size()]);
      if (closed) return true;
    } while (std::next_permutation(sub.begin(), sub.end()));
  }
  return false;
}

/// Lengths of all simple u-v dipaths, by depth-first enumeration.
inline std::vector<std::size_t> all_dipath_lengths(const Digraph& d, Vertex u, Vertex v) {
  std::vector<std::size_t> lengths;
  VertexSet on;
  std::function<void(Vertex, std::size_t)> walk = [&](Vertex x, std::size_t len) {
    if (x == v) {
      lengths.push_back(len);
      return;
    }
    on.insert(x);
    for (Vertex y : d.out(x))
      if (!on.count(y)) walk(y, len + 1);
    on.erase(x);
  };
  walk(u, 0);
  return lengths;
}

inline bool reaches(const Digraph& d, Vertex u, Vertex v) { return shortest_dipath(d, u, v).has_value(); }

/// The named catalog patterns used by the cross-checks.
inline std::vector<Pattern> catalog_patterns() {
  return {pattern::digon(),  pattern::empty_pair(), pattern::s2_plus(),  pattern::s2_minus(),
          pattern::transitive(1), pattern::transitive(2), pattern::transitive(3), pattern::transitive(4),
          pattern::c3(),     pattern::w3_plus(),    pattern::w3_minus(), pattern::p111(),
          pattern::k4_strong()};
}

inline Arc arc(Vertex u, Vertex v) { return {u, v}; }

}  // namespace testing_support
