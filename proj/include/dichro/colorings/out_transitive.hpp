#pragma once

#include <string>
#include <utility>
#include <vector>

#include "../coloring.hpp"
#include "../detail/recursion.hpp"
#include "../digraph.hpp"
#include "../errors.hpp"
#include "../patterns.hpp"
#include "hero_oracle.hpp"

// Acyclic 2-colorings of oriented graphs whose out-neighbourhoods all induce
// transitive tournaments, i.e. the class Forb_ind(digon, s2+, w3+).

namespace dichro {

/// Out-module M inside N-(anchor) whose outside out-neighbours all lie in
/// N+(anchor) u {anchor}.
struct OutModuleCertificate {
  VertexSet module;
  Vertex anchor = 0;
};

/// Returns an empty string when every certificate condition holds, and the
/// first failed condition otherwise.
inline std::string certificate_defect(const Digraph& d, const OutModuleCertificate& cert) {
  if (cert.module.empty()) return "module is empty";
  if (!is_subset(cert.module, d.in(cert.anchor))) return "module is not inside the in-neighbourhood";
  if (!is_out_module(d, cert.module)) return "module is not an out-module";
  VertexSet allowed = d.out(cert.anchor);
  allowed.insert(cert.anchor);
  if (!is_subset(out_neighbors(d, cert.module), allowed)) return "module escapes the closed out-neighbourhood";
  return {};
}

namespace detail {

/// Certificate search without the class check. Walks F inside N-(v); when no
/// in-neighbour points at v it contracts the F-cycle found there and retries,
/// then expands the contracted vertices again on the way out.
inline VertexSet in_module_unchecked(const Digraph& d, Vertex v) {
  struct Level {
    Vertex representative;
    VertexSet members;
  };
  std::vector<Level> levels;
  Digraph current = d;
  VertexSet module;
  for (;;) {
    const VertexSet in = current.in(v);
    if (in.empty()) throw precondition_violation("anchor has no in-neighbours");
    const FunctionalOutGraph f = functional_out_graph(current, in);
    for (Vertex w : in) {
      if (f.next(w) == v) {
        module = {w};
        break;
      }
    }
    if (!module.empty()) break;
    const std::vector<Vertex> cycle = find_functional_cycle(f, in);
    ContractionResult c = contract(current, VertexSet(cycle.begin(), cycle.end()));
    levels.push_back({c.representative, c.contracted_set});
    current = std::move(c.result);
  }
  for (auto it = levels.rbegin(); it != levels.rend(); ++it)
    if (module.erase(it->representative)) module.insert(it->members.begin(), it->members.end());
  return module;
}

}  // namespace detail

/// Out-module certificate for v. Needs N-(v) nonempty and D in the class.
inline OutModuleCertificate find_in_module(const Digraph& d, Vertex v) {
  d.require(v);
  if (d.in(v).empty()) throw precondition_violation("find_in_module: vertex has no in-neighbours");
  require_class(d, classes::out_transitive(), "find_in_module");
  OutModuleCertificate cert{detail::in_module_unchecked(d, v), v};
  if (auto defect = certificate_defect(d, cert); !defect.empty())
    throw internal_inconsistency("find_in_module: " + defect);
  return cert;
}

/// Which branch each expansion took; used by tests to see that the
/// contraction branch is exercised.
struct OutTransitiveTrace {
  std::size_t single_vertex = 0;
  std::size_t source_anchor = 0;
  std::size_t acyclic_module = 0;
  std::size_t contraction = 0;
  detail::RecursionStats recursion;
};

namespace detail {

struct AnchoredDigraph {
  Digraph graph;
  Vertex anchor;
};

using W3PlusStep = Step<AnchoredDigraph, Coloring>;

inline W3PlusStep expand_out_transitive(AnchoredDigraph p, OutTransitiveTrace& trace) {
  const Digraph& d = p.graph;
  const Vertex v = p.anchor;
  if constexpr (expensive_checks) require_class(d, classes::out_transitive(), "color_w3plus (inner)");

  if (d.order() == 1) {
    ++trace.single_vertex;
    Coloring c;
    c.palette_size = 2;
    c.set(v, 1);
    return W3PlusStep::done(std::move(c));
  }

  if (d.in(v).empty()) {
    ++trace.source_anchor;
    Digraph rest = delete_vertices(d, {v});
    if (d.out(v).empty()) {
      const Vertex root = *rest.vertices().begin();
      return W3PlusStep::split({{std::move(rest), root}}, [v](std::vector<Coloring>&& r) {
        Coloring c = std::move(r[0]);
        c.set(v, 1);
        return c;
      });
    }
    // v copies the colour of its F-successor u; N+(v) lies in N+(u) u {u}.
    const Vertex u = transitive_source(d, d.out(v));
    return W3PlusStep::split({{std::move(rest), u}}, [v, u](std::vector<Coloring>&& r) {
      Coloring c = std::move(r[0]);
      c.set(v, c.color(u));
      return c;
    });
  }

  const VertexSet module = in_module_unchecked(d, v);

  if (is_acyclic(induced(d, module))) {
    ++trace.acyclic_module;
    return W3PlusStep::split({{delete_vertices(d, module), v}}, [v, module](std::vector<Coloring>&& r) {
      Coloring c = std::move(r[0]);
      if (c.color(v) != 1) c.swap_colors(1, 2);
      for (Vertex x : module) c.set(x, 2);
      return c;
    });
  }

  ++trace.contraction;
  const VertexSet two_step = two_step_set(d, module, v);
  const Vertex module_anchor = two_step.empty() ? *module.begin() : transitive_source(d, two_step);

  ContractionResult shrunk = contract(delete_vertices(d, two_step), set_minus(module, two_step));
  const Vertex x = shrunk.representative;
  Digraph star = std::move(shrunk.result);
  // Arcs from x to N+(v), one at a time in ascending head order.
  const VertexSet heads = star.out(v);
  for (Vertex u : heads) {
    if (star.has_arc(x, u)) continue;
    star.insert_arc(x, u);
    if constexpr (expensive_checks) require_class(star, classes::out_transitive(), "color_w3plus (arc addition)");
  }

  std::vector<AnchoredDigraph> subs;
  subs.push_back({induced(d, module), module_anchor});
  subs.push_back({std::move(star), x});
  return W3PlusStep::split(std::move(subs), [two_step, module_anchor, x](std::vector<Coloring>&& r) {
    Coloring inside = std::move(r[0]);
    if (!two_step.empty() && inside.color(module_anchor) != 2) inside.swap_colors(1, 2);
    Coloring outside = std::move(r[1]);
    if (outside.color(x) != 1) outside.swap_colors(1, 2);
    outside.assignment.erase(x);
    outside.merge(inside);
    return outside;
  });
}

inline Coloring color_out_transitive_unchecked(const Digraph& d, Vertex v, OutTransitiveTrace& trace) {
  return run_recursion<AnchoredDigraph, Coloring>(
      AnchoredDigraph{d, v}, [&](AnchoredDigraph p) { return expand_out_transitive(std::move(p), trace); },
      [](const AnchoredDigraph& p) { return p.graph.order(); }, &trace.recursion);
}

}  // namespace detail

/**
 * Acyclic 2-coloring of D in Forb_ind(digon, s2+, w3+) in which v and all of
 * N+(v) share a colour.
 *
 * Read as a recursion on the number of vertices:
 *  - v has no in-neighbours: drop v, colour the rest anchored at v's F-successor
 *    (or anywhere if v is isolated) and give v that successor's colour;
 *  - otherwise take the out-module M from find_in_module. If D[M] is acyclic,
 *    colour D - M anchored at v with v on colour 1 and put M on colour 2;
 *  - otherwise colour D[M] so that the two-step set T lands on colour 2, and
 *    colour the digraph obtained by deleting T, contracting M - T to x and
 *    joining x to N+(v), anchored at x with x on colour 1.
 */
inline Coloring color_w3plus(const Digraph& d, Vertex v, OutTransitiveTrace* trace = nullptr) {
  d.require(v);
  require_class(d, classes::out_transitive(), "color_w3plus");
  OutTransitiveTrace local;
  Coloring c = detail::color_out_transitive_unchecked(d, v, trace ? *trace : local);
  c.palette_size = 2;
  return c;
}

/// Sub-oracle backed by color_w3plus. Valid for any hero that is an induced
/// subdigraph of w3+ (c3 or w3+ itself), since then every hero-free member of
/// Forb_ind(digon, s2+, .) is also w3+-free.
inline HeroOracle out_transitive_oracle(Digraph hero) {
  if (!find_induced(catalog::out_wheel(3), Pattern{"hero", hero}))
    throw std::invalid_argument("out_transitive_oracle: hero is not an induced subdigraph of w3+");
  HeroOracle o;
  o.hero = std::move(hero);
  o.bound = 2;
  o.color_fn = [](const Digraph& g) {
    Coloring c = color_w3plus(g, *g.vertices().begin());
    return c;
  };
  return o;
}

}  // namespace dichro
