#pragma once

#include <functional>
#include <string>
#include <utility>

#include "../coloring.hpp"
#include "../digraph.hpp"
#include "../errors.hpp"
#include "../oracle.hpp"

namespace dichro {

/**
 * A coloring procedure for a class Forb_ind(digon, s2+, hero) (or, for the
 * locally complete construction, for hero-free tournaments), together with
 * the palette bound it promises. The composite algorithms treat it as a black
 * box and check every answer it gives.
 */
struct HeroOracle {
  Digraph hero;
  int bound = 0;
  std::function<Coloring(const Digraph&)> color_fn;
};

/// Calls the oracle on g and checks the answer against the contract: total
/// on V(g), acyclic, every colour in [1, bound]. The empty digraph is answered
/// without calling the oracle.
inline Coloring consult(const HeroOracle& oracle, const Digraph& g) {
  Coloring c;
  c.palette_size = oracle.bound;
  if (g.empty()) return c;
  Coloring got = oracle.color_fn(g);
  bool ok = got.assignment.size() == g.order();
  if (ok) {
    try {
      ok = is_valid_acyclic_coloring(g, got);
    } catch (const std::invalid_argument&) {
      ok = false;
    }
  }
  for (const auto& [v, col] : got.assignment) ok = ok && col >= 1 && col <= oracle.bound;
  if (!ok) throw oracle_misbehavior("sub-oracle returned a coloring outside its contract");
  c.assignment = std::move(got.assignment);
  return c;
}

/// Oracle answering with an exact minimum coloring; fails with
/// oracle_misbehavior when the instance needs more than bound colours.
inline HeroOracle exact_hero_oracle(Digraph hero, int bound, std::size_t limit = default_chi_limit) {
  HeroOracle o;
  o.hero = std::move(hero);
  o.bound = bound;
  o.color_fn = [limit](const Digraph& g) { return dichromatic_number(g, limit).witness; };
  return o;
}

}  // namespace dichro
