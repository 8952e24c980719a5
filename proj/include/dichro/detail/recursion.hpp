#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../errors.hpp"

namespace dichro::detail {

/// One expansion of a problem: either solved outright, or split into
/// independent subproblems whose results are combined afterwards.
template <class Problem, class Result>
struct Step {
  std::optional<Result> solved;
  std::vector<Problem> subproblems;
  std::function<Result(std::vector<Result>&&)> combine;

  static Step done(Result r) {
    Step s;
    s.solved = std::move(r);
    return s;
  }
  static Step split(std::vector<Problem> subs, std::function<Result(std::vector<Result>&&)> combine) {
    Step s;
    s.subproblems = std::move(subs);
    s.combine = std::move(combine);
    return s;
  }
};

struct RecursionStats {
  std::size_t expansions = 0;
  std::size_t max_depth = 0;
};

/**
 * Runs a divide-and-combine recursion on an explicit heap stack, so depth is
 * bounded by memory rather than by the thread's call stack.
 *
 * Every subproblem must be strictly smaller than its parent under size_of;
 * otherwise internal_inconsistency is thrown. This is the vertex-count
 * measure the correctness arguments induct on.
 */
template <class Problem, class Result, class Expand, class SizeOf>
Result run_recursion(Problem root, Expand&& expand, SizeOf&& size_of, RecursionStats* stats = nullptr) {
  struct Frame {
    Step<Problem, Result> step;
    std::size_t size;
    std::size_t next = 0;
    std::vector<Result> results;
  };
  std::vector<Frame> stack;
  auto push = [&](Problem p) {
    const std::size_t size = size_of(p);
    Step<Problem, Result> step = expand(std::move(p));
    stack.push_back(Frame{std::move(step), size, 0, {}});
    if (stats) {
      ++stats->expansions;
      stats->max_depth = std::max(stats->max_depth, stack.size());
    }
  };
  push(std::move(root));
  std::optional<Result> finished;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (!top.step.solved && top.next < top.step.subproblems.size()) {
      Problem child = std::move(top.step.subproblems[top.next++]);
      if (size_of(child) >= top.size)
        throw internal_inconsistency("recursive call did not shrink: " + std::to_string(size_of(child)) +
                                     " >= " + std::to_string(top.size));
      push(std::move(child));
      continue;
    }
    Result r = top.step.solved ? std::move(*top.step.solved) : top.step.combine(std::move(top.results));
    stack.pop_back();
    if (stack.empty()) finished = std::move(r);
    else stack.back().results.push_back(std::move(r));
  }
  return std::move(*finished);
}

}  // namespace dichro::detail
