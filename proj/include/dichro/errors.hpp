#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dichro {

/// Root of every error the library raises on purpose. Plain argument errors
/// (unknown vertex ids, empty sets where one is required) use
/// std::invalid_argument instead.
class error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A vertex set that should induce a transitive tournament does not.
class not_transitive_tournament : public error {
  using error::error;
};

/// An algorithm precondition that is not a class-membership question failed.
class precondition_violation : public error {
  using error::error;
};

/// The input digraph is not in the class an algorithm requires.
/// Carries the name of the violated pattern and the host vertices of one
/// induced copy (in pattern-vertex order), or a single offending vertex.
class class_violation : public error {
 public:
  class_violation(std::string what, std::string pattern, std::vector<std::size_t> witness)
      : error(std::move(what)), pattern_(std::move(pattern)), witness_(std::move(witness)) {}

  const std::string& pattern() const noexcept { return pattern_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string pattern_;
  std::vector<std::size_t> witness_;
};

/// A construction reached a state its correctness argument rules out.
/// Seen in practice only when a precondition was skipped.
class internal_inconsistency : public error {
  using error::error;
};

/// A caller-supplied sub-coloring oracle returned something outside its contract.
class oracle_misbehavior : public error {
  using error::error;
};

class size_limit_exceeded : public error {
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& msg)
      : error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dichro
