#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "support.hpp"

using namespace dichro;
using namespace testing_support;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    io::parse_edge_list(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return 0;
}

struct TempDir {
  std::filesystem::path root;
  TempDir() {
    root = std::filesystem::temp_directory_path() / ("dichro-test-" + std::to_string(std::rand()) + "-" +
                                                     std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(root);
  }
  ~TempDir() { std::filesystem::remove_all(root); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = root / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::map<std::string, cli::Algorithm>& extra = {}) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err, extra);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_edge_list") {
  CHECK(io::parse_edge_list("3 3\n0 1\n1 2\n2 0") == catalog::directed_cycle(3));
  const Digraph one = io::parse_edge_list("1 0");
  CHECK(one.order() == 1);
  CHECK(one.arc_count() == 0);
  CHECK(io::parse_edge_list("# comment\n2 1\n\n0 1\n") == Digraph::from_arcs({{0, 1}}));
  CHECK(parse_error_line("2 1\n0 0") == 2);
  CHECK(parse_error_line("2 2\n0 1\n0 1") == 3);
  CHECK(parse_error_line("2 1\n0 2") == 2);
  CHECK(parse_error_line("two 1\n0 1") == 1);
  CHECK(parse_error_line("3 2\n0 1") == 2);
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("3 1\n0 1 2") == 2);
}

TEST_CASE("serialize densifies ids and records the map") {
  Digraph d;
  d.insert_vertex(4);
  d.insert_vertex(9);
  d.insert_arc(9, 4);
  const std::string text = io::serialize_edge_list(d);
  CHECK(text == "# map 4 0\n# map 9 1\n2 1\n1 0\n");
  CHECK(io::parse_edge_list(text) == Digraph::from_arcs({{1, 0}}));
}

TEST_CASE("edge-list round trip on 1000 random digraphs") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Digraph d = random_digraph(seed % 13, 0.3, seed);
    REQUIRE(io::parse_edge_list(io::serialize_edge_list(d)) == d);
  }
}

TEST_CASE("coloring documents") {
  Coloring c;
  c.set(2, 1);
  c.set(0, 2);
  const std::string text = io::serialize_coloring(c);
  CHECK(text == "0 2\n2 1\n");
  CHECK(io::parse_coloring(text).assignment == c.assignment);
  CHECK_THROWS_AS(io::parse_coloring("0 0\n"), parse_error);
  CHECK_THROWS_AS(io::parse_coloring("0 1\n0 2\n"), parse_error);
}

TEST_CASE("cli chi") {
  TempDir dir;
  const auto c3 = dir.write("c3.txt", "3 3\n0 1\n1 2\n2 0\n");
  const Outcome r = run_cli({"chi", c3});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("chi 2\n", 0) == 0);
  const Coloring w = io::parse_coloring(r.out.substr(6));
  CHECK(is_valid_acyclic_coloring(catalog::directed_cycle(3), w));
  const auto big = dir.write("c20.txt", io::serialize_edge_list(catalog::directed_cycle(20)));
  CHECK(run_cli({"chi", big}).code == 4);
  CHECK(run_cli({"chi", "--limit", "20", big}).code == 0);
  CHECK(run_cli({"chi", dir.write("bad.txt", "2 1\n0 0\n")}).code == 3);
  CHECK(run_cli({"chi", (dir.root / "missing.txt").string()}).code == 3);
}

TEST_CASE("cli color") {
  TempDir dir;
  const auto c5 = dir.write("c5.txt", io::serialize_edge_list(catalog::directed_cycle(5)));
  const Outcome r = run_cli({"color", "--algorithm", "w3plus", "--anchor", "0", c5});
  REQUIRE(r.code == 0);
  const Coloring c = io::parse_coloring(r.out);
  CHECK(c.colors_used() == 2);
  const auto col = dir.write("c5.col", r.out);
  CHECK(run_cli({"verify", c5, col}).out == "VALID\n");

  for (const std::string alg : {"w3minus", "p111", "addsink", "locally-complete"}) {
    const auto file = alg == "locally-complete" ? dir.write("c3.txt", io::serialize_edge_list(catalog::directed_cycle(3))) : c5;
    const Outcome o = run_cli({"color", "--algorithm", alg, file});
    INFO(alg << ": " << o.err);
    CHECK(o.code == 0);
  }
  CHECK(run_cli({"color", "--algorithm", "w3minus", "--arc", "1,2", c5}).code == 0);
  CHECK(run_cli({"color", "--algorithm", "w3minus", "--arc", "1,3", c5}).code == 2);
  const auto w3 = dir.write("w3.txt", io::serialize_edge_list(catalog::out_wheel(3)));
  CHECK(run_cli({"color", "--algorithm", "w3plus", w3}).code == 2);
  CHECK(run_cli({"color", "--algorithm", "nope", c5}).code == 2);
  CHECK(run_cli({"color", "--algorithm", "addsink", "--hero", "tt2", "--hero-bound", "1", c5}).code == 0);
  CHECK(run_cli({"color", "--algorithm", "addsink", "--hero", "tt4", c5}).code == 2);
}

TEST_CASE("cli never prints an invalid coloring") {
  TempDir dir;
  const auto c5 = dir.write("c5.txt", io::serialize_edge_list(catalog::directed_cycle(5)));
  std::map<std::string, cli::Algorithm> broken;
  broken["w3plus"] = [](const Digraph& d, const cli::ColorRequest&) {
    Coloring c;
    for (Vertex v : d.vertices()) c.set(v, 1);
    return c;
  };
  broken["p111"] = [](const Digraph& d, const cli::ColorRequest&) {
    Coloring c;
    c.set(*d.vertices().begin(), 1);
    return c;
  };
  for (const std::string alg : {"w3plus", "p111"}) {
    const Outcome o = run_cli({"color", "--algorithm", alg, c5}, broken);
    CHECK(o.code == 5);
    CHECK(o.out.empty());
  }
}

TEST_CASE("cli check") {
  TempDir dir;
  const auto w3 = dir.write("w3.txt", io::serialize_edge_list(gen::named("w+", 3)));
  const Outcome bad = run_cli({"check", "--class", "digon,s2+,w3+", w3});
  CHECK(bad.code == 1);
  CHECK(bad.out == "VIOLATION w3+ 0 1 2 3\n");
  const auto c5 = dir.write("c5.txt", io::serialize_edge_list(catalog::directed_cycle(5)));
  const Outcome good = run_cli({"check", "--class", "digon,s2+,c3", c5});
  CHECK(good.code == 0);
  CHECK(good.out == "IN_CLASS\n");
  const auto p = dir.write("p.txt", "3 2\n0 1\n1 2\n");
  CHECK(run_cli({"check", "--pattern-file", p, c5}).out.rfind("VIOLATION pattern-file", 0) == 0);
  CHECK(run_cli({"check", "--class", "bogus", c5}).code == 2);
}

TEST_CASE("cli gen and verify") {
  TempDir dir;
  const Outcome named = run_cli({"gen", "--name", "c4-blowup"});
  CHECK(named.code == 0);
  CHECK(io::parse_edge_list(named.out) == gen::c4_blowup());
  const Outcome r1 = run_cli({"gen", "--random", "--n", "10", "--p", "0.4", "--seed", "7", "--class", "digon,s2+,w3+"});
  const Outcome r2 = run_cli({"gen", "--random", "--n", "10", "--p", "0.4", "--seed", "7", "--class", "digon,s2+,w3+"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(in_class(io::parse_edge_list(r1.out), classes::out_transitive()));
  CHECK(run_cli({"gen", "--name", "w+", "--k", "2"}).code == 2);
  CHECK(run_cli({"gen"}).code == 2);

  const auto c3 = dir.write("c3.txt", "3 3\n0 1\n1 2\n2 0\n");
  CHECK(run_cli({"verify", c3, dir.write("mono.col", "0 1\n1 1\n2 1\n")}).code == 1);
  CHECK(run_cli({"verify", c3, dir.write("ok.col", "0 1\n1 1\n2 2\n")}).code == 0);
  CHECK(run_cli({"verify", c3, dir.write("part.col", "0 1\n")}).code == 1);
  CHECK(run_cli({"verify", c3, dir.write("junk.col", "zero one\n")}).code == 3);
}
