#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "digraph.hpp"

/// Canonical small digraphs. Vertex 0 is the centre/hub where there is one.
namespace dichro::catalog {

inline Digraph digon() { return Digraph::with_vertices(2, {{0, 1}, {1, 0}}); }

/// Two isolated vertices.
inline Digraph empty_pair() { return Digraph::with_vertices(2); }

inline Digraph transitive_tournament(std::size_t k) {
  if (k < 1) throw std::invalid_argument("transitive tournament needs k >= 1");
  Digraph d = Digraph::with_vertices(k);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) d.insert_arc(i, j);
  return d;
}

/// 0 -> 1 -> ... -> k-1 -> 0. k = 2 is a digon.
inline Digraph directed_cycle(std::size_t k) {
  if (k < 2) throw std::invalid_argument("directed cycle needs k >= 2");
  Digraph d = Digraph::with_vertices(k);
  for (Vertex i = 0; i < k; ++i) d.insert_arc(i, (i + 1) % k);
  return d;
}

inline Digraph directed_path(std::size_t k) {
  if (k < 1) throw std::invalid_argument("directed path needs k >= 1");
  Digraph d = Digraph::with_vertices(k);
  for (Vertex i = 0; i + 1 < k; ++i) d.insert_arc(i, i + 1);
  return d;
}

inline Digraph out_star(std::size_t k) {
  Digraph d = Digraph::with_vertices(k + 1);
  for (Vertex i = 1; i <= k; ++i) d.insert_arc(0, i);
  return d;
}

inline Digraph in_star(std::size_t k) {
  Digraph d = Digraph::with_vertices(k + 1);
  for (Vertex i = 1; i <= k; ++i) d.insert_arc(i, 0);
  return d;
}

namespace detail {
inline void close_leaf_cycle(Digraph& d, std::size_t k) {
  for (Vertex i = 1; i <= k; ++i) d.insert_arc(i, i % k + 1);
}
}  // namespace detail

/// Hub 0 dominating the directed cycle 1 -> 2 -> ... -> k -> 1.
inline Digraph out_wheel(std::size_t k) {
  if (k < 3) throw std::invalid_argument("wheel needs k >= 3");
  Digraph d = out_star(k);
  detail::close_leaf_cycle(d, k);
  return d;
}

/// Hub 0 dominated by the directed cycle 1 -> 2 -> ... -> k -> 1.
inline Digraph in_wheel(std::size_t k) {
  if (k < 3) throw std::invalid_argument("wheel needs k >= 3");
  Digraph d = in_star(k);
  detail::close_leaf_cycle(d, k);
  return d;
}

/// Anti-directed path 0 -> 1 <- 2 -> 3.
inline Digraph antidirected_p4() { return Digraph::with_vertices(4, {{0, 1}, {2, 1}, {2, 3}}); }

/// The strong tournament on four vertices: Hamiltonian cycle 0123 plus 0->2, 1->3.
inline Digraph strong_k4() {
  return Digraph::with_vertices(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
}

/// All ordered pairs on k vertices.
inline Digraph bioriented_complete(std::size_t k) {
  if (k < 1) throw std::invalid_argument("complete digraph needs k >= 1");
  Digraph d = Digraph::with_vertices(k);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = 0; j < k; ++j)
      if (i != j) d.insert_arc(i, j);
  return d;
}

/// H plus one new vertex receiving an arc from every vertex of H.
inline Digraph with_dominated_sink(const Digraph& h) {
  Digraph d = h;
  const Vertex sink = h.fresh_id();
  d.insert_vertex(sink);
  for (Vertex v : h.vertices()) d.insert_arc(v, sink);
  return d;
}

/// Quadratic-residue tournament on 7 vertices (i -> i+1, i+2, i+4 mod 7).
inline Digraph paley7() {
  Digraph d = Digraph::with_vertices(7);
  for (Vertex i = 0; i < 7; ++i)
    for (Vertex r : {1u, 2u, 4u}) d.insert_arc(i, (i + r) % 7);
  return d;
}

}  // namespace dichro::catalog
