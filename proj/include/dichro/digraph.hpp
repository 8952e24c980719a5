#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dichro {

using Vertex = std::size_t;
using VertexSet = std::set<Vertex>;
using Arc = std::pair<Vertex, Vertex>;

/**
 * Simple digraph over sparse non-negative vertex ids.
 *
 * Loops and parallel arcs are rejected; a digon (u,v),(v,u) is allowed.
 * Out- and in-adjacency are both kept so that either direction is a lookup.
 *
 * Every digraph remembers the smallest id never used in its lineage
 * (fresh_id()). Induced subdigraphs inherit it, so a vertex created by
 * contraction never reuses an id that existed in any ancestor.
 */
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(const VertexSet& vertices, const std::vector<Arc>& arcs = {}) {
    for (Vertex v : vertices) insert_vertex(v);
    for (const auto& [u, v] : arcs) insert_arc(u, v);
  }

  /// Digraph on 0..n-1 with the given arcs.
  static Digraph with_vertices(std::size_t n, const std::vector<Arc>& arcs = {}) {
    Digraph d;
    for (Vertex v = 0; v < n; ++v) d.insert_vertex(v);
    for (const auto& [u, v] : arcs) d.insert_arc(u, v);
    return d;
  }

  /// Digraph whose vertex set is exactly the arc endpoints.
  static Digraph from_arcs(std::initializer_list<Arc> arcs) {
    Digraph d;
    for (const auto& [u, v] : arcs) {
      d.insert_vertex(u);
      d.insert_vertex(v);
    }
    for (const auto& [u, v] : arcs) d.insert_arc(u, v);
    return d;
  }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  bool empty() const noexcept { return vertices_.empty(); }

  const VertexSet& vertices() const noexcept { return vertices_; }
  bool has_vertex(Vertex v) const { return vertices_.count(v) != 0; }

  bool has_arc(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.out.count(v) != 0;
  }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  const VertexSet& out(Vertex v) const { return entry(v).out; }
  const VertexSet& in(Vertex v) const { return entry(v).in; }

  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (const auto& [u, a] : adj_)
      for (Vertex v : a.out) result.emplace_back(u, v);
    return result;
  }

  Vertex fresh_id() const noexcept { return next_id_; }

  void insert_vertex(Vertex v) {
    if (vertices_.insert(v).second) adj_[v];
    next_id_ = std::max(next_id_, v + 1);
  }

  /// Idempotent. Throws std::invalid_argument on loops and unknown endpoints.
  void insert_arc(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    require(u);
    require(v);
    if (adj_[u].out.insert(v).second) {
      adj_[v].in.insert(u);
      ++arc_count_;
    }
  }

  void erase_vertex(Vertex v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) return;
    for (Vertex w : it->second.out) adj_[w].in.erase(v);
    for (Vertex w : it->second.in) adj_[w].out.erase(v);
    arc_count_ -= it->second.out.size() + it->second.in.size();
    adj_.erase(it);
    vertices_.erase(v);
  }

  void reserve_ids(Vertex next) { next_id_ = std::max(next_id_, next); }

  void require(Vertex v) const {
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }

  template <class Range>
  void require_all(const Range& xs) const {
    for (Vertex x : xs) require(x);
  }

  /// Structural equality: same vertices, same arcs. Lineage is ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    if (a.vertices_ != b.vertices_ || a.arc_count_ != b.arc_count_) return false;
    for (const auto& [v, adj] : a.adj_)
      if (adj.out != b.adj_.at(v).out) return false;
    return true;
  }

 private:
  struct Adjacency {
    VertexSet out;
    VertexSet in;
  };

  const Adjacency& entry(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
  }

  std::map<Vertex, Adjacency> adj_;
  VertexSet vertices_;
  std::size_t arc_count_ = 0;
  Vertex next_id_ = 0;
};

/// Directed path given by its vertex trace; length() counts arcs.
struct Dipath {
  std::vector<Vertex> trace;

  std::size_t length() const { return trace.empty() ? 0 : trace.size() - 1; }
  VertexSet vertex_set() const { return {trace.begin(), trace.end()}; }
};

/// Result of identifying a vertex set into one fresh vertex.
struct ContractionResult {
  Digraph result;
  Vertex representative = 0;
  VertexSet contracted_set;

  /// Identity off the contracted set, contracted vertices go to the representative.
  Vertex map(Vertex v) const { return contracted_set.count(v) ? representative : v; }
};

// ---------------------------------------------------------------------------
// set helpers

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// neighbourhoods

/// N+(X): out-neighbours of members of X that lie outside X.
inline VertexSet out_neighbors(const Digraph& d, const VertexSet& xs) {
  d.require_all(xs);
  VertexSet r;
  for (Vertex x : xs)
    for (Vertex y : d.out(x))
      if (!xs.count(y)) r.insert(y);
  return r;
}

/// N-(X), the mirror of out_neighbors.
inline VertexSet in_neighbors(const Digraph& d, const VertexSet& xs) {
  d.require_all(xs);
  VertexSet r;
  for (Vertex x : xs)
    for (Vertex y : d.in(x))
      if (!xs.count(y)) r.insert(y);
  return r;
}

/// N(v) = N+(v) u N-(v).
inline VertexSet neighbors(const Digraph& d, Vertex v) { return set_union(d.out(v), d.in(v)); }

// ---------------------------------------------------------------------------
// derived digraphs

/// D[X]. Ids are kept, and so is the lineage counter.
inline Digraph induced(const Digraph& d, const VertexSet& xs) {
  if (xs.empty()) throw std::invalid_argument("induced: empty vertex set");
  d.require_all(xs);
  Digraph r;
  for (Vertex x : xs) r.insert_vertex(x);
  for (Vertex x : xs)
    for (Vertex y : d.out(x))
      if (xs.count(y)) r.insert_arc(x, y);
  r.reserve_ids(d.fresh_id());
  return r;
}

/// D - X. Deleting every vertex yields the empty digraph.
inline Digraph delete_vertices(const Digraph& d, const VertexSet& xs) {
  d.require_all(xs);
  Digraph r = d;
  for (Vertex x : xs) r.erase_vertex(x);
  return r;
}

inline Digraph add_arc(const Digraph& d, Arc a) {
  Digraph r = d;
  r.insert_arc(a.first, a.second);
  return r;
}

/// D/U. The representative is d.fresh_id(). May create digons when U is not
/// an out-module.
inline ContractionResult contract(const Digraph& d, const VertexSet& us) {
  if (us.empty()) throw std::invalid_argument("contract: empty vertex set");
  d.require_all(us);
  ContractionResult c;
  c.contracted_set = us;
  c.representative = d.fresh_id();
  const VertexSet outside = out_neighbors(d, us);
  const VertexSet inside = in_neighbors(d, us);
  Digraph r = delete_vertices(d, us);
  r.reserve_ids(d.fresh_id());
  r.insert_vertex(c.representative);
  for (Vertex v : outside) r.insert_arc(c.representative, v);
  for (Vertex v : inside) r.insert_arc(v, c.representative);
  c.result = std::move(r);
  return c;
}

// ---------------------------------------------------------------------------
// structure

inline bool is_oriented(const Digraph& d) {
  for (Vertex v : d.vertices())
    for (Vertex w : d.out(v))
      if (d.has_arc(w, v)) return false;
  return true;
}

/// Oriented and every pair adjacent.
inline bool is_tournament(const Digraph& d) {
  const std::size_t n = d.order();
  if (n == 0) return true;
  return is_oriented(d) && d.arc_count() == n * (n - 1) / 2;
}

/// Digons count as cycles. The empty digraph is acyclic.
inline bool is_acyclic(const Digraph& d) {
  std::map<Vertex, std::size_t> indeg;
  std::vector<Vertex> ready;
  for (Vertex v : d.vertices()) {
    indeg[v] = d.in(v).size();
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : d.out(v))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == d.order();
}

/// Some directed cycle as a vertex trace (first vertex not repeated), if any.
inline std::optional<std::vector<Vertex>> find_directed_cycle(const Digraph& d) {
  enum class Mark { fresh, active, done };
  std::map<Vertex, Mark> mark;
  for (Vertex v : d.vertices()) mark[v] = Mark::fresh;
  std::map<Vertex, Vertex> parent;
  for (Vertex root : d.vertices()) {
    if (mark[root] != Mark::fresh) continue;
    // explicit stack of (vertex, iterator into its out-set)
    std::vector<std::pair<Vertex, VertexSet::const_iterator>> stack;
    stack.emplace_back(root, d.out(root).begin());
    mark[root] = Mark::active;
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == d.out(v).end()) {
        mark[v] = Mark::done;
        stack.pop_back();
        continue;
      }
      Vertex w = *it++;
      if (mark[w] == Mark::active) {
        std::vector<Vertex> cycle;
        for (Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (mark[w] == Mark::fresh) {
        mark[w] = Mark::active;
        parent[w] = v;
        stack.emplace_back(w, d.out(w).begin());
      }
    }
  }
  return std::nullopt;
}

/// Strong components in a topological order of the condensation: every arc
/// between two components goes from an earlier to a later one.
/// Iterative Tarjan; vertices are visited in ascending id order.
inline std::vector<VertexSet> strong_components(const Digraph& d) {
  std::map<Vertex, std::size_t> index, low;
  std::vector<Vertex> stack;
  VertexSet on_stack;
  std::vector<VertexSet> comps;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    VertexSet::const_iterator next;
  };
  for (Vertex root : d.vertices()) {
    if (index.count(root)) continue;
    std::vector<Frame> call;
    auto open = [&](Vertex v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack.insert(v);
      call.push_back({v, d.out(v).begin()});
    };
    open(root);
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next != d.out(f.v).end()) {
        Vertex w = *f.next++;
        if (!index.count(w)) {
          open(w);
        } else if (on_stack.count(w)) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexSet comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack.erase(w);
          comp.insert(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
    }
  }
  // Tarjan emits sinks of the condensation first.
  std::reverse(comps.begin(), comps.end());
  return comps;
}

inline bool is_strongly_connected(const Digraph& d) {
  return d.order() <= 1 || strong_components(d).size() == 1;
}

/// Breadth-first shortest u-v dipath; ties resolved towards smaller ids.
inline std::optional<Dipath> shortest_dipath(const Digraph& d, Vertex u, Vertex v) {
  d.require(u);
  d.require(v);
  std::map<Vertex, Vertex> parent;
  parent[u] = u;
  std::deque<Vertex> queue{u};
  while (!queue.empty() && !parent.count(v)) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : d.out(x)) {
      if (parent.count(y)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!parent.count(v)) return std::nullopt;
  Dipath p;
  for (Vertex x = v; x != u; x = parent[x]) p.trace.push_back(x);
  p.trace.push_back(u);
  std::reverse(p.trace.begin(), p.trace.end());
  return p;
}

}  // namespace dichro
