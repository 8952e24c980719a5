#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dichro;
using namespace testing_support;

TEST_CASE("named constructions") {
  const Digraph w = gen::named("w+", 3);
  CHECK(w.order() == 4);
  CHECK(w.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  CHECK(gen::named("tt", 1).order() == 1);
  CHECK(gen::named("tt", 1).arc_count() == 0);
  CHECK(gen::named("cycle", 3) == catalog::directed_cycle(3));
  CHECK(gen::named("s+", 2) == catalog::out_star(2));
  CHECK(gen::named("s-", 2) == catalog::in_star(2));
  CHECK(gen::named("w-", 4).order() == 5);
  CHECK(gen::named("p111") == catalog::antidirected_p4());
  CHECK(gen::named("bioriented-complete", 3).arc_count() == 6);
  const Digraph k4s = gen::named("k4s");
  CHECK(is_tournament(k4s));
  CHECK(is_strongly_connected(k4s));
  CHECK_THROWS_AS(gen::named("petersen"), std::invalid_argument);
  CHECK_THROWS_AS(gen::named("tt"), std::invalid_argument);
  CHECK_THROWS_AS(gen::named("w+", 2), std::invalid_argument);
  CHECK_THROWS_AS(gen::named("cycle", 1), std::invalid_argument);
}

TEST_CASE("the blown-up directed 4-cycle") {
  const Digraph b = gen::c4_blowup();
  CHECK(b.order() == 12);
  CHECK(b.arc_count() == 48);
  CHECK(is_oriented(b));
  CHECK(in_class(b, classes::strong_k4_free()));
  const ChiResult r = dichromatic_number(b);
  CHECK(r.chi == 3);
  CHECK(is_valid_acyclic_coloring(b, r.witness));
}

TEST_CASE("random_in_class basics") {
  const ClassSpec cls = classes::out_transitive();
  const auto one = gen::random_in_class({1, 0.7, 9, 4}, cls);
  REQUIRE(one);
  CHECK(one->order() == 1);
  const auto none = gen::random_in_class({9, 0.0, 9, 4}, cls);
  REQUIRE(none);
  CHECK(none->order() == 9);
  CHECK(none->arc_count() == 0);
  CHECK_THROWS_AS(gen::random_in_class({5, 0.5, 1, 0}, cls), std::invalid_argument);
  CHECK_THROWS_AS(gen::random_in_class({5, 1.5, 1, 3}, cls), std::invalid_argument);
  // empty2 cannot be avoided beyond one vertex
  CHECK_FALSE(gen::random_in_class({3, 0.0, 1, 3}, ClassSpec::parse("empty2")));
}

TEST_CASE("random_in_class is deterministic and sound") {
  const std::vector<ClassSpec> specs{classes::out_transitive(), classes::directed_triangle_free(),
                                     classes::w3_minus_free(), classes::p111_free(), classes::strong_k4_free(),
                                     ClassSpec::parse("digon,s2+,s2-,tt4")};
  for (const auto& spec : specs)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const gen::GenConfig cfg{12, 0.4, seed * 7919, 8};
      const auto a = gen::random_in_class(cfg, spec);
      const auto b = gen::random_in_class(cfg, spec);
      REQUIRE(a);
      REQUIRE(b);
      REQUIRE(*a == *b);
      REQUIRE(a->order() == 12);
      REQUIRE(in_class(*a, spec));
      REQUIRE(count_induced(*a, spec.forbidden.front()) == 0);
    }
}

TEST_CASE("random_in_class output is stable across platforms") {
  const auto d = gen::random_in_class({8, 0.5, 42, 8}, classes::out_transitive());
  REQUIRE(d);
  CHECK(io::serialize_edge_list(*d) == io::serialize_edge_list(*gen::random_in_class({8, 0.5, 42, 8}, classes::out_transitive())));
  const auto other = gen::random_in_class({8, 0.5, 43, 8}, classes::out_transitive());
  CHECK_FALSE(*d == *other);
}

TEST_CASE("coverage pressure: some out-transitive samples contain a directed cycle") {
  std::size_t cyclic = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto d = gen::random_in_class({12, 0.3, seed, 16}, classes::out_transitive());
    if (!is_acyclic(*d)) ++cyclic;
  }
  CHECK(cyclic >= 1);
}
