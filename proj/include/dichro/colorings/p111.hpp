#pragma once

#include <functional>
#include <vector>

#include "../coloring.hpp"
#include "../digraph.hpp"
#include "../patterns.hpp"

namespace dichro {

/// Alternating neighbourhood layers around a root: layer 0 is {root}, odd
/// layers are out-neighbours of the previous layer and even layers are
/// in-neighbours, each excluding everything seen before.
struct LayerDecomposition {
  Vertex root = 0;
  std::vector<VertexSet> layers;

  VertexSet all() const {
    VertexSet r;
    for (const auto& l : layers) r.insert(l.begin(), l.end());
    return r;
  }
};

inline LayerDecomposition layer_decompose(const Digraph& d, Vertex x) {
  d.require(x);
  LayerDecomposition ld;
  ld.root = x;
  ld.layers.push_back({x});
  VertexSet seen{x};
  for (std::size_t i = 1;; ++i) {
    const VertexSet& prev = ld.layers.back();
    VertexSet next = i % 2 == 1 ? out_neighbors(d, prev) : in_neighbors(d, prev);
    next = set_minus(next, seen);
    if (next.empty()) break;
    seen.insert(next.begin(), next.end());
    ld.layers.push_back(std::move(next));
  }
  return ld;
}

/**
 * Acyclic 2-coloring of D in Forb_ind(digon, tt3, p111). Repeatedly layers the
 * remaining digraph around its smallest vertex, puts even layers on colour 1
 * and odd layers on colour 2, and deletes the layered part. Each layer is
 * independent and every arc inside the layered part joins consecutive layers.
 */
inline Coloring color_p111(const Digraph& d,
                           const std::function<void(const Digraph&, const LayerDecomposition&)>& observe = {}) {
  require_class(d, classes::p111_free(), "color_p111");
  Coloring c;
  c.palette_size = 2;
  Digraph rest = d;
  while (!rest.empty()) {
    const LayerDecomposition ld = layer_decompose(rest, *rest.vertices().begin());
    if (observe) observe(rest, ld);
    for (std::size_t i = 0; i < ld.layers.size(); ++i)
      for (Vertex v : ld.layers[i]) c.set(v, i % 2 == 0 ? 1 : 2);
    rest = delete_vertices(rest, ld.all());
  }
  return c;
}

}  // namespace dichro
