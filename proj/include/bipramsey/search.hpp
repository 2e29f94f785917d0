#pragma once

// Exhaustive decision procedure for avoiding colorings.
//
// An m-local shuffle-preserved coloring of K_{n,n} (multigraph) without a
// monochromatic K_{p,p} exists iff the n x n grid can be covered by
// rectangles such that every row and column lies in at most m rectangles and
// every rectangle has min side <= p - 1. The search decides the cover problem
// by depth-first branching on the first uncovered cell (row-major).
//
// Pruning used, all of which keep the search complete:
//   * only irredundant placements: every row and column of a new rectangle
//     owns an uncovered cell of it, so new rectangles only use rows at or
//     below the branching cell;
//   * untouched rows (and columns) are interchangeable, so only the
//     lowest-indexed untouched ones are ever added;
//   * a line with uncovered cells and no budget left is dead;
//   * failed states are remembered in a transposition table keyed on the
//     covered mask plus budgets clamped to each line's uncovered count.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bipramsey/core.hpp"

namespace bipramsey {

inline constexpr Index kMaxSearchSide = 8;

struct SearchLimits {
  // Zero disables the wall-clock limit.
  double timeout_seconds = 0.0;
  std::uint64_t node_limit = 4'000'000'000ULL;
  // Upper bound on remembered failed states per worker.
  std::size_t memo_capacity = 1u << 22;
};

struct SearchParams {
  Index n = 1;
  Index m = 1;
  Index p = 1;
  SearchLimits limits;
};

enum class Verdict { sat, unsat, inconclusive };

std::string to_string(Verdict verdict);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t budget_prunes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t millis = 0;
};

struct SearchOutcome {
  Verdict verdict = Verdict::inconclusive;
  std::optional<RectangleCover> witness;  // present iff SAT
  SearchStats stats;
};

// Throws MalformedInput on zero parameters and InstanceTooLarge for
// n > kMaxSearchSide. With workers > 1 the top-level branches are shared
// among threads; the verdict does not depend on the worker count, the
// witness only does.
SearchOutcome search_avoiding(const SearchParams& params, unsigned workers = 1);

struct TableRow {
  Index n = 0;
  Index m = 0;
  Index p = 0;
  Regime regime = Regime::open;
  Verdict verdict = Verdict::inconclusive;
  std::uint64_t nodes = 0;
  std::uint64_t millis = 0;
};

inline constexpr const char* kTableHeader = "n,m,p,regime,verdict,nodes,millis";

std::string to_csv(const TableRow& row);

// Runs the search for every 1 <= n <= n_max, 1 <= m <= m_max,
// 1 <= p <= p_max; `on_row` is called as each cell finishes.
std::vector<TableRow> threshold_table(Index n_max, Index m_max, Index p_max,
                                      const SearchLimits& limits, unsigned workers = 1,
                                      const std::function<void(const TableRow&)>& on_row = {});

}  // namespace bipramsey
