#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "patterns.hpp"

// Brute-force ground truth. Nothing here calls into the coloring algorithms,
// and count_induced does not share code with find_induced.
namespace dichro {

/// True iff c colours exactly V(D) and no colour class contains a directed cycle.
/// A coloring missing a vertex of D (or naming a vertex outside D) is rejected
/// with std::invalid_argument.
inline bool is_valid_acyclic_coloring(const Digraph& d, const Coloring& c) {
  for (Vertex v : d.vertices())
    if (!c.covers(v)) throw std::invalid_argument("coloring misses vertex " + std::to_string(v));
  for (const auto& [v, col] : c.assignment)
    if (!d.has_vertex(v)) throw std::invalid_argument("coloring names unknown vertex " + std::to_string(v));
  std::map<int, VertexSet> classes;
  for (const auto& [v, col] : c.assignment) classes[col].insert(v);
  for (const auto& [col, members] : classes)
    if (!is_acyclic(induced(d, members))) return false;
  return true;
}

struct ChiResult {
  int chi = 0;
  Coloring witness;
};

inline constexpr std::size_t default_chi_limit = 14;

namespace detail {

class ExactColorer {
 public:
  explicit ExactColorer(const Digraph& d) {
    // Max-adjacency order: each next vertex has the most arcs back into the prefix.
    std::vector<Vertex> rest(d.vertices().begin(), d.vertices().end());
    while (!rest.empty()) {
      auto score = [&](Vertex v) {
        std::size_t s = 0;
        for (Vertex w : order_)
          s += static_cast<std::size_t>(d.has_arc(v, w)) + static_cast<std::size_t>(d.has_arc(w, v));
        return s * 1024 + d.out(v).size() + d.in(v).size();
      };
      auto best = std::max_element(rest.begin(), rest.end(),
                                   [&](Vertex a, Vertex b) { return score(a) < score(b); });
      order_.push_back(*best);
      rest.erase(best);
    }
    const std::size_t n = order_.size();
    out_.assign(n, 0);
    in_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d.has_arc(order_[i], order_[j])) {
          out_[i] |= bit(j);
          in_[j] |= bit(i);
        }
  }

  std::optional<std::vector<int>> try_colors(int k) {
    k_ = k;
    color_.assign(order_.size(), 0);
    class_mask_.assign(static_cast<std::size_t>(k) + 1, 0);
    if (extend(0, 0)) return color_;
    return std::nullopt;
  }

  const std::vector<Vertex>& order() const { return order_; }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // Would adding vertex i to the class close a directed cycle inside it?
  bool closes_cycle(std::size_t i, std::uint64_t cls) const {
    std::uint64_t reach = out_[i] & cls;
    std::uint64_t frontier = reach;
    while (frontier) {
      if (reach & in_[i]) return true;
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= out_[static_cast<std::size_t>(__builtin_ctzll(f))];
      next &= cls & ~reach;
      reach |= next;
      frontier = next;
    }
    return (reach & in_[i]) != 0;
  }

  bool extend(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      const std::uint64_t cls = class_mask_[static_cast<std::size_t>(c)];
      if (closes_cycle(i, cls)) continue;
      class_mask_[static_cast<std::size_t>(c)] |= bit(i);
      color_[i] = c;
      if (extend(i + 1, std::max(used, c))) return true;
      class_mask_[static_cast<std::size_t>(c)] &= ~bit(i);
    }
    return false;
  }

  std::vector<Vertex> order_;
  std::vector<std::uint64_t> out_, in_;
  std::vector<std::uint64_t> class_mask_;
  std::vector<int> color_;
  int k_ = 0;
};

}  // namespace detail

/// Exact dichromatic number by backtracking over palettes 1, 2, ...
/// The first vertex in the search order always takes colour 1 and new colours
/// are opened in increasing order.
inline ChiResult dichromatic_number(const Digraph& d, std::size_t limit = default_chi_limit) {
  if (limit > 64) throw std::invalid_argument("chi limit above 64 is not supported");
  if (d.order() > limit)
    throw size_limit_exceeded("exact chi limited to " + std::to_string(limit) + " vertices, got " +
                              std::to_string(d.order()));
  ChiResult r;
  if (d.empty()) return r;
  detail::ExactColorer solver(d);
  for (int k = 1;; ++k) {
    if (auto colors = solver.try_colors(k)) {
      r.chi = k;
      r.witness.palette_size = k;
      for (std::size_t i = 0; i < colors->size(); ++i) r.witness.set(solver.order()[i], (*colors)[i]);
      return r;
    }
  }
}

/// Number of injective maps V(p) -> V(d) that are induced embeddings.
/// Plain enumeration of every tuple; no pruning.
inline std::size_t count_induced(const Digraph& d, const Pattern& p) {
  const std::vector<Vertex> pv(p.graph.vertices().begin(), p.graph.vertices().end());
  const std::vector<Vertex> hv(d.vertices().begin(), d.vertices().end());
  const std::size_t k = pv.size();
  if (k == 0 || k > hv.size()) return 0;
  std::vector<Vertex> image(k);
  std::vector<char> used(hv.size(), 0);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == k) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          if (a != b && p.graph.has_arc(pv[a], pv[b]) != d.has_arc(image[a], image[b])) return;
      ++count;
      return;
    }
    for (std::size_t h = 0; h < hv.size(); ++h) {
      if (used[h]) continue;
      used[h] = 1;
      image[i] = hv[h];
      go(i + 1);
      used[h] = 0;
    }
  };
  go(0);
  return count;
}

}  // namespace dichro
