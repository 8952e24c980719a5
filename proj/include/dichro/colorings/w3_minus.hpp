#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "../coloring.hpp"
#include "../detail/recursion.hpp"
#include "../digraph.hpp"
#include "../errors.hpp"
#include "../patterns.hpp"
#include "out_transitive.hpp"

namespace dichro {

namespace detail {

struct ArcAnchoredDigraph {
  Digraph graph;
  std::optional<Arc> anchor;  // none: any acyclic 4-coloring will do
};

using W3MinusStep = Step<ArcAnchoredDigraph, Coloring>;

inline Coloring constant_coloring(const VertexSet& vs, int color, int palette) {
  Coloring c;
  c.palette_size = palette;
  for (Vertex v : vs) c.set(v, color);
  return c;
}

inline W3MinusStep expand_w3_minus(ArcAnchoredDigraph p) {
  const Digraph& d = p.graph;
  if constexpr (expensive_checks) require_class(d, classes::w3_minus_free(), "color_w3minus (inner)");
  if (!p.anchor) {
    if (d.arc_count() == 0) return W3MinusStep::done(constant_coloring(d.vertices(), 1, 4));
    p.anchor = d.arcs().front();
  }
  const auto [u, v] = *p.anchor;

  VertexSet v_closed_out = d.out(v);
  v_closed_out.insert(v);
  const VertexSet a_set = set_minus(d.out(u), v_closed_out);
  const VertexSet b_set = set_intersection(d.in(u), d.out(v));
  VertexSet u_closed_in = d.in(u);
  u_closed_in.insert(u);
  Digraph rest = delete_vertices(d, u_closed_in);

  std::optional<Arc> rest_anchor;
  bool v_is_sink = false;
  if (!a_set.empty()) {
    rest_anchor = Arc{transitive_source(d, a_set), v};
  } else if (!rest.out(v).empty()) {
    rest_anchor = Arc{v, *rest.out(v).begin()};
  } else {
    v_is_sink = true;
  }

  // In-neighbourhood minus B is c3-free, hence w3+-free: two colours 3 and 4.
  Coloring lower = constant_coloring(b_set, 2, 4);
  const VertexSet lower_rest = set_minus(d.in(u), b_set);
  if (!lower_rest.empty()) {
    OutTransitiveTrace ignored;
    Coloring two = color_out_transitive_unchecked(induced(d, lower_rest), *lower_rest.begin(), ignored);
    two.shift(2);
    lower.merge(two);
  }

  return W3MinusStep::split({{std::move(rest), rest_anchor}},
                            [u = u, v = v, v_is_sink, lower = std::move(lower)](std::vector<Coloring>&& r) {
                              Coloring c = std::move(r[0]);
                              // A sink cannot lie on a cycle, so recolouring it is safe.
                              if (v_is_sink) c.set(v, 1);
                              c.merge(lower);
                              c.set(u, 1);
                              c.palette_size = 4;
                              return c;
                            });
}

inline Coloring color_w3_minus_unchecked(const Digraph& d, std::optional<Arc> anchor, RecursionStats* stats) {
  RecursionStats local;
  RecursionStats& s = stats ? *stats : local;
  return run_recursion<ArcAnchoredDigraph, Coloring>(
      ArcAnchoredDigraph{d, anchor}, [](ArcAnchoredDigraph p) { return expand_w3_minus(std::move(p)); },
      [](const ArcAnchoredDigraph& p) { return p.graph.order(); }, &s);
}

}  // namespace detail

/**
 * Acyclic 4-coloring of D in Forb_ind(digon, s2+, w3-) anchored at the arc
 * (u,v): c(u) = 1, c = 1 on N+(u) - N+(v) (so c(v) = 1), and c in {1,2} on N+(v).
 *
 * With A = N+(u) - (N+(v) u {v}) and B = N-(u) n N+(v): the digraph without
 * u's closed in-neighbourhood is coloured recursively, anchored at (a,v) for
 * the source a of A, else at some arc (v,y), else arbitrarily with v reset to
 * colour 1. B takes colour 2, the rest of N-(u) is 2-coloured with {3,4}, and
 * u takes colour 1.
 */
inline Coloring color_w3minus(const Digraph& d, Arc e, detail::RecursionStats* stats = nullptr) {
  if (!d.has_vertex(e.first) || !d.has_vertex(e.second) || !d.has_arc(e.first, e.second))
    throw std::invalid_argument("color_w3minus: anchor is not an arc of the digraph");
  require_class(d, classes::w3_minus_free(), "color_w3minus");
  return detail::color_w3_minus_unchecked(d, e, stats);
}

/// Arc-free input gets colour 1 everywhere; otherwise anchors at the smallest arc.
inline Coloring color_w3minus_any(const Digraph& d) {
  require_class(d, classes::w3_minus_free(), "color_w3minus");
  if (d.arc_count() == 0) return detail::constant_coloring(d.vertices(), 1, 4);
  return detail::color_w3_minus_unchecked(d, d.arcs().front(), nullptr);
}

}  // namespace dichro
