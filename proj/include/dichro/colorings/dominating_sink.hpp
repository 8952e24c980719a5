#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../catalog.hpp"
#include "../coloring.hpp"
#include "../digraph.hpp"
#include "../errors.hpp"
#include "../patterns.hpp"
#include "hero_oracle.hpp"

namespace dichro {

/// Palette of color_addsink for a hero on h vertices whose class needs C colours.
inline int addsink_palette(std::size_t hero_order, int c) {
  return static_cast<int>(hero_order) * (c + 1) + 3 * c + 2;
}

namespace detail {

inline void require_shortest(const Digraph& d, const Dipath& p) {
  if (p.trace.empty()) throw std::invalid_argument("dipath is empty");
  d.require_all(p.trace);
  if (p.vertex_set().size() != p.trace.size()) throw std::invalid_argument("dipath repeats a vertex");
  for (std::size_t i = 0; i + 1 < p.trace.size(); ++i)
    if (!d.has_arc(p.trace[i], p.trace[i + 1])) throw std::invalid_argument("dipath uses a non-arc");
  auto best = shortest_dipath(d, p.trace.front(), p.trace.back());
  if (best->length() != p.length()) throw std::invalid_argument("dipath is not a shortest dipath");
}

/// Colours X = V(P) u N-(V(P)) with 3C+2 colours. The in-neighbourhood of P
/// is split into layers A_i (first path vertex that sees it); layers whose
/// index agrees mod 3 share a C-colour block since no arc jumps three or more
/// layers forward. Even and odd path vertices take the last two colours.
inline Coloring shortpath_partition_unchecked(const Digraph& d, const Dipath& p, int c, const HeroOracle& sub) {
  const VertexSet on_path = p.vertex_set();
  Coloring result;
  result.palette_size = 3 * c + 2;
  VertexSet taken = on_path;
  for (std::size_t i = 0; i < p.trace.size(); ++i) {
    const VertexSet layer = set_minus(d.in(p.trace[i]), taken);
    taken.insert(layer.begin(), layer.end());
    if (!layer.empty()) {
      Coloring part = consult(sub, induced(d, layer));
      part.shift(static_cast<int>(i % 3) * c);
      result.merge(part);
    }
    result.set(p.trace[i], i % 2 == 0 ? 3 * c + 1 : 3 * c + 2);
  }
  return result;
}

}  // namespace detail

/// Acyclic (3C+2)-coloring of D[V(P) u N-(V(P))] for a shortest dipath P in
/// D in Forb_ind(digon, s2+), with sub colouring each in-neighbourhood layer
/// within C colours.
inline Coloring shortpath_partition(const Digraph& d, const Dipath& p, int c, const HeroOracle& sub) {
  if (c < sub.bound) throw std::invalid_argument("shortpath_partition: block narrower than the oracle bound");
  detail::require_shortest(d, p);
  require_class(d, ClassSpec{{pattern::digon(), pattern::s2_plus()}}, "shortpath_partition");
  return detail::shortpath_partition_unchecked(d, p, c, sub);
}

struct AddSinkTrace {
  std::size_t delegated = 0;     // strong components without an induced hero
  std::size_t hero_strong = 0;   // hero copy already strongly connected
  std::size_t hero_joined = 0;   // hero copy closed up by a shortest dipath
};

/**
 * Acyclic coloring of D in Forb_ind(digon, s2+, H-) with at most
 * v(H)(C+1) + 3C+2 colours, where H- is the hero plus a dominated sink and C is
 * the sub-oracle's bound.
 *
 * Strong components are coloured independently from the same palette. A
 * component without an induced H goes to the sub-oracle. Otherwise take the
 * first copy Y of H; if D[Y] is not strong, join its last strong component
 * back to its first by a shortest dipath P. Every vertex of the component is
 * then in Y or an in-neighbour of Y or P. Each y in Y gets its own (C+1)-block
 * (y alone on the first colour, N-(y) via the oracle), and the path part gets
 * a final (3C+2)-block. A vertex in several parts keeps its first assignment.
 */
inline Coloring color_addsink(const Digraph& d, const HeroOracle& sub, AddSinkTrace* trace = nullptr) {
  const Pattern hero{"hero", sub.hero};
  const Pattern hero_minus{"hero+sink", catalog::with_dominated_sink(sub.hero)};
  require_class(d, ClassSpec{{pattern::digon(), pattern::s2_plus(), hero_minus}}, "color_addsink");
  AddSinkTrace local;
  AddSinkTrace& t = trace ? *trace : local;

  const int c = sub.bound;
  const int y_block = c + 1;
  const int path_base = static_cast<int>(sub.hero.order()) * y_block;
  Coloring result;
  result.palette_size = addsink_palette(sub.hero.order(), c);

  for (const VertexSet& comp : strong_components(d)) {
    const Digraph k = induced(d, comp);
    auto copy = find_induced(k, hero);
    if (!copy) {
      ++t.delegated;
      result.merge(consult(sub, k));
      continue;
    }
    const std::vector<Vertex> ys_in_order = copy->host_vertices();
    const VertexSet ys(ys_in_order.begin(), ys_in_order.end());
    VertexSet s = ys;
    std::optional<Dipath> path;
    const Digraph hy = induced(k, ys);
    if (is_strongly_connected(hy)) {
      ++t.hero_strong;
    } else {
      ++t.hero_joined;
      const auto parts = strong_components(hy);
      path = shortest_dipath(k, *parts.back().begin(), *parts.front().begin());
      if (!path) throw internal_inconsistency("color_addsink: strong component without the joining dipath");
      const VertexSet on_path = path->vertex_set();
      s.insert(on_path.begin(), on_path.end());
    }
    if (set_union(s, in_neighbors(k, s)) != comp)
      throw internal_inconsistency("color_addsink: arcs leave the closed in-neighbourhood of the hero copy");

    Coloring local_c;
    int block = 0;
    for (Vertex y : ys) {
      const int base = block * y_block;
      if (!local_c.covers(y)) local_c.set(y, base + 1);
      Coloring part = consult(sub, k.in(y).empty() ? Digraph{} : induced(k, k.in(y)));
      for (const auto& [v, col] : part.assignment)
        if (!local_c.covers(v)) local_c.set(v, base + 1 + col);
      ++block;
    }
    if (path) {
      Coloring part = detail::shortpath_partition_unchecked(k, *path, c, sub);
      for (const auto& [v, col] : part.assignment)
        if (!local_c.covers(v)) local_c.set(v, path_base + col);
    }
    result.merge(local_c);
  }
  return result;
}

}  // namespace dichro
