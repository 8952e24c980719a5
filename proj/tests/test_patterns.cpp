#include <catch_amalgamated.hpp>

#include "lemma_checks.hpp"
#include "support.hpp"

using namespace dichro;
using namespace testing_support;

TEST_CASE("catalog shapes") {
  const Digraph w = catalog::out_wheel(3);
  // hub x=0, y=1, z=2, w=3
  CHECK(w.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  const Digraph wm = catalog::in_wheel(3);
  CHECK(wm.in(0) == VertexSet{1, 2, 3});
  CHECK(wm.out(0).empty());
  CHECK(catalog::antidirected_p4().arcs() == std::vector<Arc>{{0, 1}, {2, 1}, {2, 3}});
  const Digraph k4s = catalog::strong_k4();
  CHECK(is_tournament(k4s));
  CHECK(is_strongly_connected(k4s));
  CHECK(catalog::with_dominated_sink(catalog::directed_cycle(3)).in(3) == VertexSet{0, 1, 2});
  CHECK(is_tournament(catalog::paley7()));
  CHECK(pattern::by_name("tt5").graph == catalog::transitive_tournament(5));
  CHECK_THROWS_AS(pattern::by_name("w4+"), std::invalid_argument);
  CHECK(ClassSpec::parse("digon, s2+,w3+").to_string() == "digon,s2+,w3+");
}

TEST_CASE("find_induced") {
  const auto w = find_induced(catalog::out_wheel(3), pattern::w3_plus());
  REQUIRE(w);
  CHECK(w->host_vertices() == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(find_induced(catalog::transitive_tournament(3), pattern::s2_plus()));
  const auto s = find_induced(Digraph::from_arcs({{0, 1}, {0, 2}}), pattern::s2_plus());
  REQUIRE(s);
  CHECK(s->map.at(0) == 0);
  CHECK(VertexSet{s->map.at(1), s->map.at(2)} == VertexSet{1, 2});
  CHECK_FALSE(find_induced(catalog::directed_cycle(3), pattern::k4_strong()));
}

TEST_CASE("find_induced returns the lexicographically first host tuple") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph d = random_digraph(6, 0.35, seed);
    for (const auto& p : {pattern::s2_plus(), pattern::c3(), pattern::p111()}) {
      const auto e = find_induced(d, p);
      if (!e) continue;
      std::vector<Vertex> best;
      std::vector<Vertex> tuple(p.graph.order());
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (!best.empty()) return;
        if (i == tuple.size()) {
          for (std::size_t a = 0; a < i; ++a)
            for (std::size_t b = 0; b < i; ++b)
              if (a != b && d.has_arc(tuple[a], tuple[b]) != p.graph.has_arc(a, b)) return;
          best = tuple;
          return;
        }
        for (Vertex h : d.vertices()) {
          if (std::find(tuple.begin(), tuple.begin() + static_cast<long>(i), h) != tuple.begin() + static_cast<long>(i)) continue;
          tuple[i] = h;
          rec(i + 1);
        }
      };
      rec(0);
      REQUIRE(e->host_vertices() == best);
    }
  }
}

TEST_CASE("find_induced_through only reports copies through the vertex") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = random_digraph(6, 0.3, seed);
    for (const auto& p : catalog_patterns())
      for (Vertex v : d.vertices()) {
        const auto e = find_induced_through(d, p, v);
        const bool expected = find_induced(d, p) && !find_induced(delete_vertices(d, {v}), p);
        if (e) {
          const auto hosts = e->host_vertices();
          REQUIRE(std::find(hosts.begin(), hosts.end(), v) != hosts.end());
        }
        if (expected) REQUIRE(e);
      }
  }
}

TEST_CASE("in_class") {
  const ClassSpec tri_free = classes::directed_triangle_free();
  CHECK(in_class(catalog::directed_cycle(5), tri_free));
  const auto m = in_class(catalog::directed_cycle(3), tri_free);
  REQUIRE_FALSE(m);
  CHECK(m.violation->pattern == "c3");
  CHECK(m.violation->embedding.host_vertices().size() == 3);
  for (const auto& spec : {tri_free, classes::p111_free(), classes::strong_k4_free()}) CHECK(in_class(Digraph{}, spec));
  try {
    require_class(catalog::out_wheel(3), classes::out_transitive(), "test");
    FAIL("expected a class violation");
  } catch (const class_violation& e) {
    CHECK(e.pattern() == "w3+");
    CHECK(e.witness() == std::vector<std::size_t>{0, 1, 2, 3});
  }
}

TEST_CASE("transitive_source") {
  CHECK(transitive_source(catalog::transitive_tournament(3), {0, 1, 2}) == 0);
  CHECK(transitive_source(catalog::directed_cycle(4), {2}) == 2);
  CHECK_THROWS_AS(transitive_source(catalog::directed_cycle(3), {0, 1, 2}), not_transitive_tournament);
  CHECK_THROWS_AS(transitive_source(Digraph::with_vertices(2), {0, 1}), not_transitive_tournament);
}

TEST_CASE("functional out-graph F(D)") {
  const auto tt = functional_out_graph(catalog::transitive_tournament(3));
  CHECK(tt.f_arc == std::map<Vertex, Vertex>{{0, 1}, {1, 2}});
  CHECK_FALSE(tt.next(2));
  const auto c3 = functional_out_graph(catalog::directed_cycle(3));
  CHECK(c3.f_arc == std::map<Vertex, Vertex>{{0, 1}, {1, 2}, {2, 0}});
  try {
    functional_out_graph(Digraph::from_arcs({{0, 1}, {0, 2}}));
    FAIL("expected a class violation");
  } catch (const class_violation& e) {
    CHECK(e.witness() == std::vector<std::size_t>{0});
  }
}

TEST_CASE("is_out_module") {
  CHECK(is_out_module(catalog::out_wheel(3), {2}));
  CHECK(is_out_module(Digraph::from_arcs({{0, 2}, {1, 2}}), {0, 1}));
  CHECK_FALSE(is_out_module(Digraph::from_arcs({{0, 2}, {1, 3}}), {0, 1}));
  CHECK_THROWS_AS(is_out_module(catalog::digon(), {}), std::invalid_argument);
}

TEST_CASE("find_functional_cycle") {
  CHECK(find_functional_cycle(catalog::directed_cycle(3), {0, 1, 2}) == std::vector<Vertex>{0, 1, 2});
  CHECK(find_functional_cycle(catalog::directed_cycle(5), {0, 1, 2, 3, 4}).size() == 5);
  CHECK_THROWS_AS(find_functional_cycle(catalog::transitive_tournament(3), {0, 1, 2}), precondition_violation);
}

TEST_CASE("two_step_set") {
  const Digraph sink_v = Digraph::from_arcs({{1, 0}, {2, 1}});
  CHECK(two_step_set(sink_v, {1}, 0).empty());
  // v=0, u=1, t=2
  CHECK(two_step_set(Digraph::from_arcs({{0, 1}, {1, 2}}), {2}, 0) == VertexSet{2});
  // v=0, u=1, t1=2, t2=3, x=4
  const Digraph d = Digraph::from_arcs({{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  REQUIRE(is_out_module(d, {2, 3}));
  const VertexSet t = two_step_set(d, {2, 3}, 0);
  CHECK(t == VertexSet{2, 3});
  CHECK(is_tournament(induced(d, t)));
  CHECK(is_acyclic(induced(d, t)));
  CHECK_THROWS_AS(two_step_set(d, {2, 3}, 2), precondition_violation);
  CHECK_THROWS_AS(two_step_set(d, {1, 4}, 0), precondition_violation);
}

TEST_CASE("structural claims and lemmas on generated class members") {
  LemmaTally total;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto d = gen::random_in_class({4 + seed % 7, 0.4, seed, 16}, classes::out_transitive());
    REQUIRE(d);
    total += check_out_transitive_lemmas(*d);
  }
  CHECK(total.checks > 1000);
  CHECK(total.f_arc_containment == 0);
  CHECK(total.dipath_containment == 0);
  CHECK(total.cycle_module == 0);
  CHECK(total.contraction_closure == 0);
  CHECK(total.arc_addition_closure == 0);
  CHECK(total.certificate == 0);
  CHECK(total.two_step_transitive == 0);
}
