#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "digraph.hpp"
#include "errors.hpp"

namespace dichro {

#ifdef DICHRO_EXPENSIVE_CHECKS
inline constexpr bool expensive_checks = true;
#else
inline constexpr bool expensive_checks = false;
#endif

struct Pattern {
  std::string name;
  Digraph graph;
};

namespace pattern {

inline Pattern digon() { return {"digon", catalog::digon()}; }
inline Pattern empty_pair() { return {"empty2", catalog::empty_pair()}; }
inline Pattern s2_plus() { return {"s2+", catalog::out_star(2)}; }
inline Pattern s2_minus() { return {"s2-", catalog::in_star(2)}; }
inline Pattern transitive(std::size_t k) { return {"tt" + std::to_string(k), catalog::transitive_tournament(k)}; }
inline Pattern c3() { return {"c3", catalog::directed_cycle(3)}; }
inline Pattern w3_plus() { return {"w3+", catalog::out_wheel(3)}; }
inline Pattern w3_minus() { return {"w3-", catalog::in_wheel(3)}; }
inline Pattern p111() { return {"p111", catalog::antidirected_p4()}; }
inline Pattern k4_strong() { return {"k4s", catalog::strong_k4()}; }

/// Looks up a catalog name: digon, empty2, s2+, s2-, c3, w3+, w3-, tt<k>, p111, k4s.
inline Pattern by_name(std::string_view name) {
  static const std::map<std::string, std::function<Pattern()>, std::less<>> fixed = {
      {"digon", digon}, {"empty2", empty_pair}, {"s2+", s2_plus}, {"s2-", s2_minus}, {"c3", c3},
      {"w3+", w3_plus}, {"w3-", w3_minus},      {"p111", p111},   {"k4s", k4_strong},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();
  if (name.size() > 2 && name.substr(0, 2) == "tt") {
    std::size_t k = 0;
    for (char ch : name.substr(2)) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
      k = k * 10 + static_cast<std::size_t>(ch - '0');
    }
    if (k >= 1) return transitive(k);
  }
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

}  // namespace pattern

/// Forb_ind(F): the list F of forbidden induced patterns.
struct ClassSpec {
  std::vector<Pattern> forbidden;

  /// Comma-separated catalog names, e.g. "digon,s2+,w3+".
  static ClassSpec parse(std::string_view text) {
    ClassSpec spec;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(start, end - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (item.empty()) throw std::invalid_argument("empty pattern name in class spec");
      spec.forbidden.push_back(pattern::by_name(item));
      start = end + 1;
    }
    return spec;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& p : forbidden) s += (s.empty() ? "" : ",") + p.name;
    return s;
  }
};

/// The classes the coloring algorithms are stated for.
namespace classes {
inline ClassSpec out_transitive() { return {{pattern::digon(), pattern::s2_plus(), pattern::w3_plus()}}; }
inline ClassSpec directed_triangle_free() { return {{pattern::digon(), pattern::s2_plus(), pattern::c3()}}; }
inline ClassSpec w3_minus_free() { return {{pattern::digon(), pattern::s2_plus(), pattern::w3_minus()}}; }
inline ClassSpec p111_free() { return {{pattern::digon(), pattern::transitive(3), pattern::p111()}}; }
inline ClassSpec strong_k4_free() { return {{pattern::digon(), pattern::s2_plus(), pattern::k4_strong()}}; }
}  // namespace classes

/// Induced embedding: pattern vertex -> host vertex.
struct Embedding {
  std::map<Vertex, Vertex> map;

  /// Host vertices listed in ascending pattern-vertex order.
  std::vector<Vertex> host_vertices() const {
    std::vector<Vertex> r;
    for (const auto& [p, h] : map) r.push_back(h);
    return r;
  }
};

namespace detail {

/// Depth-first search for the lexicographically smallest host tuple.
class InducedMatcher {
 public:
  InducedMatcher(const Digraph& host, const Digraph& pat) : InducedMatcher(host, pat, {pat.vertices().begin(), pat.vertices().end()}) {}

  /// Pattern vertices are placed in the given order; with a pin, order[0] may
  /// only go to the pinned host vertex.
  InducedMatcher(const Digraph& host, const Digraph& pat, std::vector<Vertex> order, std::optional<Vertex> pin = {})
      : host_(host), pin_(pin) {
    pv_ = std::move(order);
    const std::size_t k = pv_.size();
    arc_.assign(k, std::vector<char>(k, 0));
    out_deg_.assign(k, 0);
    in_deg_.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && pat.has_arc(pv_[i], pv_[j])) {
          arc_[i][j] = 1;
          ++out_deg_[i];
          ++in_deg_[j];
        }
    image_.assign(k, 0);
  }

  std::optional<Embedding> run() {
    if (pv_.empty() || pv_.size() > host_.order()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    Embedding e;
    for (std::size_t i = 0; i < pv_.size(); ++i) e.map[pv_[i]] = image_[i];
    return e;
  }

 private:
  bool extend(std::size_t i) {
    if (i == pv_.size()) return true;
    // Candidates: neighbours of an already-placed adjacent pattern vertex, if any.
    const VertexSet pinned = pin_ && i == 0 ? VertexSet{*pin_} : VertexSet{};
    const VertexSet* cand = pin_ && i == 0 ? &pinned : &host_.vertices();
    for (std::size_t j = 0; j < i; ++j) {
      const VertexSet* c = nullptr;
      if (arc_[j][i]) c = &host_.out(image_[j]);
      else if (arc_[i][j]) c = &host_.in(image_[j]);
      if (c && c->size() < cand->size()) cand = c;
    }
    for (Vertex h : *cand) {
      if (host_.out(h).size() < out_deg_[i] || host_.in(h).size() < in_deg_[i]) continue;
      if (pin_ && i > 0 && h == *pin_) continue;
      if (!consistent(i, h)) continue;
      image_[i] = h;
      if (extend(i + 1)) return true;
    }
    return false;
  }

  bool consistent(std::size_t i, Vertex h) const {
    for (std::size_t j = 0; j < i; ++j) {
      const Vertex g = image_[j];
      if (g == h) return false;
      if (host_.has_arc(g, h) != static_cast<bool>(arc_[j][i])) return false;
      if (host_.has_arc(h, g) != static_cast<bool>(arc_[i][j])) return false;
    }
    return true;
  }

  const Digraph& host_;
  std::optional<Vertex> pin_;
  std::vector<Vertex> pv_;
  std::vector<std::vector<char>> arc_;
  std::vector<std::size_t> out_deg_, in_deg_;
  std::vector<Vertex> image_;
};

}  // namespace detail

/// First induced copy of p in d, scanning host tuples lexicographically.
inline std::optional<Embedding> find_induced(const Digraph& d, const Pattern& p) {
  return detail::InducedMatcher(d, p.graph).run();
}

/// Some induced copy of p in d that uses host vertex v, if any.
inline std::optional<Embedding> find_induced_through(const Digraph& d, const Pattern& p, Vertex v) {
  d.require(v);
  const Digraph& g = p.graph;
  for (Vertex t : g.vertices()) {
    // Breadth-first order from t so later vertices have a placed neighbour.
    std::vector<Vertex> order{t};
    VertexSet placed{t};
    for (std::size_t head = 0; order.size() < g.order(); ++head) {
      if (head == order.size()) {
        const Vertex next = *set_minus(g.vertices(), placed).begin();
        order.push_back(next);
        placed.insert(next);
        continue;
      }
      for (Vertex w : neighbors(g, order[head]))
        if (placed.insert(w).second) order.push_back(w);
    }
    if (auto e = detail::InducedMatcher(d, g, std::move(order), v).run()) return e;
  }
  return std::nullopt;
}

struct Violation {
  std::string pattern;
  Embedding embedding;
};

struct ClassMembership {
  bool member = true;
  std::optional<Violation> violation;

  explicit operator bool() const { return member; }
};

inline ClassMembership in_class(const Digraph& d, const ClassSpec& spec) {
  for (const auto& p : spec.forbidden) {
    if (auto e = find_induced(d, p)) return {false, Violation{p.name, std::move(*e)}};
  }
  return {};
}

/// Throws class_violation naming the first forbidden pattern found.
inline void require_class(const Digraph& d, const ClassSpec& spec, std::string_view context) {
  auto m = in_class(d, spec);
  if (m) return;
  const auto hosts = m.violation->embedding.host_vertices();
  std::ostringstream msg;
  msg << context << ": input contains an induced " << m.violation->pattern << " on";
  for (Vertex h : hosts) msg << ' ' << h;
  throw class_violation(msg.str(), m.violation->pattern, {hosts.begin(), hosts.end()});
}

/// The source of the transitive tournament D[T].
inline Vertex transitive_source(const Digraph& d, const VertexSet& ts) {
  if (ts.empty()) throw std::invalid_argument("transitive_source: empty set");
  d.require_all(ts);
  const Digraph sub = induced(d, ts);
  if (!is_tournament(sub) || !is_acyclic(sub))
    throw not_transitive_tournament("vertex set does not induce a transitive tournament");
  for (Vertex t : ts)
    if (sub.out(t).size() + 1 == ts.size()) return t;
  throw internal_inconsistency("transitive tournament without a source");
}

/// F(D): every non-sink points at the source of its out-neighbourhood.
struct FunctionalOutGraph {
  std::map<Vertex, Vertex> f_arc;

  std::optional<Vertex> next(Vertex x) const {
    auto it = f_arc.find(x);
    if (it == f_arc.end()) return std::nullopt;
    return it->second;
  }
};

/// F(D) restricted to the vertices in domain. Requires each of their
/// out-neighbourhoods to induce a transitive tournament.
inline FunctionalOutGraph functional_out_graph(const Digraph& d, const VertexSet& domain) {
  d.require_all(domain);
  FunctionalOutGraph f;
  for (Vertex x : domain) {
    const VertexSet& out = d.out(x);
    if (out.empty()) continue;
    try {
      f.f_arc.emplace(x, transitive_source(d, out));
    } catch (const not_transitive_tournament&) {
      throw class_violation("out-neighbourhood of vertex " + std::to_string(x) +
                                " is not a transitive tournament",
                            "w3+", {x});
    }
  }
  return f;
}

inline FunctionalOutGraph functional_out_graph(const Digraph& d) { return functional_out_graph(d, d.vertices()); }

/// Every member of M has the same out-neighbours outside M.
inline bool is_out_module(const Digraph& d, const VertexSet& m) {
  if (m.empty()) throw std::invalid_argument("is_out_module: empty set");
  d.require_all(m);
  const VertexSet first = set_minus(d.out(*m.begin()), m);
  for (Vertex x : m)
    if (set_minus(d.out(x), m) != first) return false;
  return true;
}

/// Follows F from the smallest vertex of S until a vertex repeats and returns
/// the cycle that closes. Every vertex of S must have its F-arc inside S.
inline std::vector<Vertex> find_functional_cycle(const FunctionalOutGraph& f, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("find_functional_cycle: empty set");
  for (Vertex x : s) {
    auto y = f.next(x);
    if (!y || !s.count(*y))
      throw precondition_violation("vertex " + std::to_string(x) + " has no F-arc inside the set");
  }
  std::map<Vertex, std::size_t> position;
  std::vector<Vertex> walk;
  Vertex x = *s.begin();
  while (!position.count(x)) {
    position[x] = walk.size();
    walk.push_back(x);
    x = *f.next(x);
  }
  return {walk.begin() + static_cast<std::ptrdiff_t>(position[x]), walk.end()};
}

inline std::vector<Vertex> find_functional_cycle(const Digraph& d, const VertexSet& s) {
  d.require_all(s);
  return find_functional_cycle(functional_out_graph(d), s);
}

/// Members of the out-module M reachable from v in exactly two steps through
/// a vertex outside M.
inline VertexSet two_step_set(const Digraph& d, const VertexSet& m, Vertex v) {
  d.require(v);
  if (m.count(v)) throw precondition_violation("two_step_set: anchor lies inside the module");
  if (!is_out_module(d, m)) throw precondition_violation("two_step_set: set is not an out-module");
  VertexSet t;
  for (Vertex u : d.out(v)) {
    if (m.count(u)) continue;
    for (Vertex w : d.out(u))
      if (m.count(w)) t.insert(w);
  }
  if constexpr (expensive_checks) {
    if (!t.empty() && in_class(d, classes::out_transitive())) {
      const Digraph sub = induced(d, t);
      if (!is_tournament(sub) || !is_acyclic(sub))
        throw internal_inconsistency("two-step set is not a transitive tournament");
    }
  }
  return t;
}

}  // namespace dichro
