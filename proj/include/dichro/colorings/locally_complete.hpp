#pragma once

#include "../coloring.hpp"
#include "../digraph.hpp"
#include "../patterns.hpp"
#include "hero_oracle.hpp"

namespace dichro {

/**
 * Acyclic 2C-coloring of D in Forb_ind(digon, s2+, s2-, H), where the
 * sub-oracle colours H-free tournaments with C colours. Every closed out- and
 * every in-neighbourhood of such a D is a tournament. Take the smallest vertex v,
 * colour {v} u N+(v) from the first C colours and N-(v) from the last C,
 * delete v and its neighbours, repeat. No arc enters or leaves the removed
 * part towards what remains.
 */
inline Coloring color_locally_complete(const Digraph& d, const HeroOracle& sub) {
  require_class(d, ClassSpec{{pattern::digon(), pattern::s2_plus(), pattern::s2_minus(), Pattern{"hero", sub.hero}}},
                "color_locally_complete");
  Coloring c;
  c.palette_size = 2 * sub.bound;
  Digraph rest = d;
  while (!rest.empty()) {
    const Vertex v = *rest.vertices().begin();
    VertexSet upper = rest.out(v);
    upper.insert(v);
    const VertexSet lower = rest.in(v);
    c.merge(consult(sub, induced(rest, upper)));
    if (!lower.empty()) {
      Coloring part = consult(sub, induced(rest, lower));
      part.shift(sub.bound);
      c.merge(part);
    }
    rest = delete_vertices(rest, set_union(upper, lower));
  }
  c.palette_size = 2 * sub.bound;
  return c;
}

}  // namespace dichro
