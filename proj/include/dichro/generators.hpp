#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"
#include "digraph.hpp"
#include "patterns.hpp"

namespace dichro::gen {

/// Named constructions: tt, cycle, s+, s-, w+, w-, bioriented-complete (all
/// taking k), p111, k4s, c4-blowup.
inline Digraph named(std::string_view name, std::optional<std::size_t> k = {});

/**
 * The 3-fold blow-up of a directed 4-cycle: triples T0..T3, every arc from
 * T_i to T_{i+1 mod 4}, and a directed triangle inside each triple. Vertex
 * 3i+j is the j-th member of T_i.
 */
inline Digraph c4_blowup() {
  Digraph d = Digraph::with_vertices(12);
  for (Vertex i = 0; i < 4; ++i) {
    const Vertex next = (i + 1) % 4;
    for (Vertex a = 0; a < 3; ++a) {
      d.insert_arc(3 * i + a, 3 * i + (a + 1) % 3);
      for (Vertex b = 0; b < 3; ++b) d.insert_arc(3 * i + a, 3 * next + b);
    }
  }
  return d;
}

inline Digraph named(std::string_view name, std::optional<std::size_t> k) {
  auto need_k = [&](std::size_t min) {
    if (!k) throw std::invalid_argument("generator '" + std::string(name) + "' needs k");
    if (*k < min)
      throw std::invalid_argument("generator '" + std::string(name) + "' needs k >= " + std::to_string(min));
    return *k;
  };
  if (name == "tt") return catalog::transitive_tournament(need_k(1));
  if (name == "cycle") return catalog::directed_cycle(need_k(2));
  if (name == "s+") return catalog::out_star(need_k(0));
  if (name == "s-") return catalog::in_star(need_k(0));
  if (name == "w+") return catalog::out_wheel(need_k(3));
  if (name == "w-") return catalog::in_wheel(need_k(3));
  if (name == "bioriented-complete") return catalog::bioriented_complete(need_k(1));
  if (name == "p111") return catalog::antidirected_p4();
  if (name == "k4s") return catalog::strong_k4();
  if (name == "c4-blowup") return c4_blowup();
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

struct GenConfig {
  std::size_t n = 0;
  double arc_probability = 0.0;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 16;
};

namespace detail {

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool violates_through(const Digraph& d, const ClassSpec& spec, Vertex v) {
  for (const auto& p : spec.forbidden)
    if (find_induced_through(d, p, v)) return true;
  return false;
}

}  // namespace detail

/**
 * Seeded member of Forb_ind(spec) on up to cfg.n vertices 0..n-1. Vertices are
 * added one at a time; each earlier vertex is joined to the new one with
 * probability p, direction by a fair coin. If a forbidden pattern appears
 * through the new vertex its arcs are redrawn, and after max_attempts draws it
 * is added isolated. Returns nullopt when even an isolated vertex breaks the
 * class.
 */
inline std::optional<Digraph> random_in_class(const GenConfig& cfg, const ClassSpec& spec) {
  if (cfg.max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");
  if (!(cfg.arc_probability >= 0.0 && cfg.arc_probability <= 1.0))
    throw std::invalid_argument("arc_probability must lie in [0,1]");
  std::mt19937_64 rng(cfg.seed);
  Digraph d;
  for (Vertex v = 0; v < cfg.n; ++v) {
    Digraph base = d;
    base.insert_vertex(v);
    bool placed = false;
    for (std::size_t attempt = 0; attempt < cfg.max_attempts && !placed; ++attempt) {
      Digraph trial = base;
      for (Vertex u = 0; u < v; ++u) {
        if (detail::unit(rng) >= cfg.arc_probability) continue;
        if (rng() >> 63) trial.insert_arc(u, v);
        else trial.insert_arc(v, u);
      }
      if (!detail::violates_through(trial, spec, v)) {
        d = std::move(trial);
        placed = true;
      }
    }
    if (!placed) {
      if (detail::violates_through(base, spec, v)) return std::nullopt;
      d = std::move(base);
    }
  }
  if (!in_class(d, spec)) throw internal_inconsistency("random_in_class produced a digraph outside its class");
  return d;
}

}  // namespace dichro::gen
