#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dichro/dichro.hpp"

namespace dichro::cli {

enum exit_code : int {
  ok = 0,
  negative = 1,
  violation = 2,
  io_failure = 3,
  size_limit = 4,
  invalid_output = 5,
};

struct ColorRequest {
  std::optional<Vertex> anchor;
  std::optional<Arc> arc;
  std::string hero;      // empty: the algorithm's default
  int hero_bound = 0;    // 0: the algorithm's default
};

using Algorithm = std::function<Coloring(const Digraph&, const ColorRequest&)>;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline HeroOracle hero_oracle(const ColorRequest& req, const std::string& fallback, int fallback_bound) {
  const std::string name = req.hero.empty() ? fallback : req.hero;
  Digraph hero = pattern::by_name(name).graph;
  if (req.hero_bound == 0 && fallback_bound == 0) {
    if (find_induced(catalog::out_wheel(3), Pattern{"hero", hero})) return out_transitive_oracle(std::move(hero));
    throw std::invalid_argument("hero '" + name + "' needs --hero-bound");
  }
  return exact_hero_oracle(std::move(hero), req.hero_bound ? req.hero_bound : fallback_bound);
}

inline std::map<std::string, Algorithm> default_algorithms() {
  std::map<std::string, Algorithm> a;
  a["w3plus"] = [](const Digraph& d, const ColorRequest& r) {
    if (d.empty()) return Coloring{{}, 2};
    return color_w3plus(d, r.anchor.value_or(*d.vertices().begin()));
  };
  a["w3minus"] = [](const Digraph& d, const ColorRequest& r) {
    return r.arc ? color_w3minus(d, *r.arc) : color_w3minus_any(d);
  };
  a["p111"] = [](const Digraph& d, const ColorRequest&) { return color_p111(d); };
  a["addsink"] = [](const Digraph& d, const ColorRequest& r) {
    return color_addsink(d, hero_oracle(r, "c3", 0));
  };
  a["locally-complete"] = [](const Digraph& d, const ColorRequest& r) {
    return color_locally_complete(d, hero_oracle(r, "tt4", 3));
  };
  return a;
}

/// Prints c only if it is a total acyclic coloring of d.
inline int emit_verified_coloring(const Digraph& d, const Coloring& c, std::ostream& out, std::ostream& err) {
  bool valid = false;
  try {
    valid = c.assignment.size() == d.order() && is_valid_acyclic_coloring(d, c);
  } catch (const std::invalid_argument&) {
    valid = false;
  }
  if (!valid) {
    err << "error: algorithm returned an invalid coloring; nothing printed\n";
    return invalid_output;
  }
  out << io::serialize_coloring(c);
  return ok;
}

inline std::size_t chi_limit(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DICHRO_CHI_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("DICHRO_CHI_LIMIT is not a number");
    }
  }
  return default_chi_limit;
}

inline Arc parse_arc(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--arc expects u,v");
  return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
}

/// Runs one command line. Extra algorithms override the built-in ones by name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
               const std::map<std::string, Algorithm>& extra = {}) {
  auto algorithms = default_algorithms();
  for (const auto& [name, fn] : extra) algorithms[name] = fn;
  std::vector<std::string> names;
  for (const auto& [name, fn] : algorithms) names.push_back(name);

  CLI::App app{"Acyclic colorings of digraphs with forbidden induced subdigraphs"};
  app.require_subcommand(1);

  std::string class_text, pattern_file, graph_file;
  auto* check = app.add_subcommand("check", "Test membership in Forb_ind(patterns)");
  check->add_option("--class", class_text, "comma-separated pattern names");
  check->add_option("--pattern-file", pattern_file, "extra forbidden pattern as an edge list");
  check->add_option("file", graph_file)->required();

  std::string algorithm, anchor_arc;
  ColorRequest req;
  std::optional<Vertex> anchor;
  auto* color = app.add_subcommand("color", "Compute and verify an acyclic coloring");
  color->add_option("--algorithm", algorithm)->required()->check(CLI::IsMember(names));
  auto* anchor_opt = color->add_option("--anchor", anchor, "anchor vertex (w3plus)");
  color->add_option("--arc", anchor_arc, "anchor arc u,v (w3minus)")->excludes(anchor_opt);
  color->add_option("--hero", req.hero, "hero pattern name (addsink, locally-complete)");
  color->add_option("--hero-bound", req.hero_bound, "colours the hero's class needs")->check(CLI::PositiveNumber);
  color->add_option("file", graph_file)->required();

  std::optional<std::size_t> limit;
  auto* chi = app.add_subcommand("chi", "Exact dichromatic number with a witness");
  chi->add_option("--limit", limit, "largest order searched (env DICHRO_CHI_LIMIT)");
  chi->add_option("file", graph_file)->required();

  std::string gen_name;
  std::optional<std::size_t> gen_k;
  bool random = false;
  gen::GenConfig cfg;
  std::string gen_class = "digon";
  auto* gen_cmd = app.add_subcommand("gen", "Emit a named or random digraph");
  auto* name_opt = gen_cmd->add_option("--name", gen_name, "tt, cycle, s+, s-, w+, w-, p111, k4s, bioriented-complete, c4-blowup");
  gen_cmd->add_option("--k", gen_k);
  auto* random_flag = gen_cmd->add_flag("--random", random)->excludes(name_opt);
  gen_cmd->add_option("--n", cfg.n);
  gen_cmd->add_option("--p", cfg.arc_probability)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", cfg.seed);
  gen_cmd->add_option("--class", gen_class);
  gen_cmd->add_option("--max-attempts", cfg.max_attempts)->check(CLI::PositiveNumber);
  name_opt->excludes(random_flag);

  std::string coloring_file;
  auto* verify = app.add_subcommand("verify", "Check a coloring document against a digraph");
  verify->add_option("file", graph_file)->required();
  verify->add_option("coloring", coloring_file)->required();

  std::vector<const char*> argv{"dichro"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return violation;
  }

  try {
    if (*check) {
      if (class_text.empty() && pattern_file.empty()) throw std::invalid_argument("check needs --class or --pattern-file");
      ClassSpec spec = class_text.empty() ? ClassSpec{} : ClassSpec::parse(class_text);
      if (!pattern_file.empty())
        spec.forbidden.push_back(Pattern{"pattern-file", io::parse_edge_list(read_file(pattern_file))});
      const Digraph d = io::parse_edge_list(read_file(graph_file));
      const auto m = in_class(d, spec);
      if (m) {
        out << "IN_CLASS\n";
        return ok;
      }
      out << "VIOLATION " << m.violation->pattern;
      for (Vertex h : m.violation->embedding.host_vertices()) out << ' ' << h;
      out << '\n';
      return negative;
    }
    if (*color) {
      const Digraph d = io::parse_edge_list(read_file(graph_file));
      req.anchor = anchor;
      if (!anchor_arc.empty()) req.arc = parse_arc(anchor_arc);
      return emit_verified_coloring(d, algorithms.at(algorithm)(d, req), out, err);
    }
    if (*chi) {
      const Digraph d = io::parse_edge_list(read_file(graph_file));
      const ChiResult r = dichromatic_number(d, chi_limit(limit));
      out << "chi " << r.chi << '\n' << io::serialize_coloring(r.witness);
      return ok;
    }
    if (*gen_cmd) {
      if (!gen_name.empty()) {
        out << io::serialize_edge_list(gen::named(gen_name, gen_k));
        return ok;
      }
      if (!random) throw std::invalid_argument("gen needs --name or --random");
      auto d = gen::random_in_class(cfg, ClassSpec::parse(gen_class));
      if (!d) {
        err << "error: class '" << gen_class << "' rejects even an isolated vertex\n";
        return negative;
      }
      out << io::serialize_edge_list(*d);
      return ok;
    }
    if (*verify) {
      const Digraph d = io::parse_edge_list(read_file(graph_file));
      const Coloring c = io::parse_coloring(read_file(coloring_file));
      std::string reason;
      bool valid = false;
      try {
        valid = is_valid_acyclic_coloring(d, c);
        if (!valid) reason = "monochromatic directed cycle";
      } catch (const std::invalid_argument& e) {
        reason = e.what();
      }
      if (valid) {
        out << "VALID\n";
        return ok;
      }
      out << "INVALID " << reason << '\n';
      return negative;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return io_failure;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return io_failure;
  } catch (const size_limit_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return size_limit;
  } catch (const class_violation& e) {
    err << "error: " << e.what() << '\n';
    return violation;
  } catch (const precondition_violation& e) {
    err << "error: " << e.what() << '\n';
    return violation;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return invalid_output;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return violation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return violation;
  }
  return violation;
}

}  // namespace dichro::cli
