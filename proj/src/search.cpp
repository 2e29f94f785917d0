#include "bipramsey/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace bipramsey {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::sat: return "SAT";
    case Verdict::unsat: return "UNSAT";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct Placement {
  Mask rows = 0;  // bit per row index
  Mask cols = 0;  // bit per column index
  Index min_side = 0;
  Index area = 0;
};

struct MemoKey {
  Mask covered = 0;
  Mask budgets = 0;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::uint64_t h = k.covered * 0x9E3779B97F4A7C15ULL;
    h ^= k.budgets + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// State shared by all workers of one search.
struct Shared {
  std::atomic<bool> stop{false};
  std::atomic<bool> limit_hit{false};
  std::atomic<std::uint64_t> nodes{0};
  Clock::time_point deadline;
  bool has_deadline = false;
  std::uint64_t node_limit = 0;

  std::mutex result_mutex;
  std::optional<std::vector<Placement>> solution;
};

class Searcher {
 public:
  Searcher(const SearchParams& params, Shared& shared)
      : n_(params.n),
        budget_cap_(std::min(params.m, params.n)),
        thin_limit_(params.p - 1),
        memo_capacity_(params.limits.memo_capacity),
        shared_(shared) {
    row_full_ = (Mask{1} << n_) - 1;
    all_cells_ = n_ * n_ == 64 ? ~Mask{0} : (Mask{1} << (n_ * n_)) - 1;
    row_budget_.fill(0);
    col_budget_.fill(0);
    for (Index i = 0; i < n_; ++i) {
      row_budget_[i] = static_cast<std::uint8_t>(budget_cap_);
      col_budget_[i] = static_cast<std::uint8_t>(budget_cap_);
    }
  }

  // Candidates for the first uncovered cell of the current state, in
  // branching order. Empty when the grid is already covered.
  std::vector<Placement> candidates() const;

  void apply(const Placement& pl) {
    for (Mask rs = pl.rows; rs != 0; rs &= rs - 1) --row_budget_[std::countr_zero(rs)];
    for (Mask cs = pl.cols; cs != 0; cs &= cs - 1) --col_budget_[std::countr_zero(cs)];
    covered_stack_.push_back(covered_);
    covered_ |= cells_of(pl);
    placed_.push_back(pl);
  }

  void undo() {
    const Placement pl = placed_.back();
    placed_.pop_back();
    covered_ = covered_stack_.back();
    covered_stack_.pop_back();
    for (Mask rs = pl.rows; rs != 0; rs &= rs - 1) ++row_budget_[std::countr_zero(rs)];
    for (Mask cs = pl.cols; cs != 0; cs &= cs - 1) ++col_budget_[std::countr_zero(cs)];
  }

  // True when a cover was found; `placed()` then holds it.
  bool dfs();

  // Counts one node; true once the search must stop.
  bool out_of_budget();

  const std::vector<Placement>& placed() const { return placed_; }
  const SearchStats& stats() const { return stats_; }
  void flush_nodes() {
    shared_.nodes.fetch_add(unflushed_, std::memory_order_relaxed);
    unflushed_ = 0;
  }

 private:
  Mask row_uncovered(Index r) const { return (~covered_ >> (r * n_)) & row_full_; }
  Mask col_uncovered(Index c) const {
    Mask out = 0;
    for (Index r = 0; r < n_; ++r) {
      if (!((covered_ >> (r * n_ + c)) & 1)) out |= Mask{1} << r;
    }
    return out;
  }
  Mask cells_of(const Placement& pl) const {
    Mask cells = 0;
    for (Mask rs = pl.rows; rs != 0; rs &= rs - 1) {
      cells |= pl.cols << (static_cast<Index>(std::countr_zero(rs)) * n_);
    }
    return cells;
  }

  bool dead_line() const;
  MemoKey memo_key() const;

  Index n_;
  Index budget_cap_;
  Index thin_limit_;
  std::size_t memo_capacity_;
  Shared& shared_;

  Mask row_full_ = 0;
  Mask all_cells_ = 0;
  Mask covered_ = 0;
  std::array<std::uint8_t, kMaxSearchSide> row_budget_{};
  std::array<std::uint8_t, kMaxSearchSide> col_budget_{};
  std::vector<Placement> placed_;
  std::vector<Mask> covered_stack_;

  std::unordered_set<MemoKey, MemoKeyHash> failed_;
  SearchStats stats_;
  std::uint64_t unflushed_ = 0;
};

std::vector<Placement> Searcher::candidates() const {
  const Mask uncovered = ~covered_ & all_cells_;
  if (uncovered == 0) return {};
  const Index cell = static_cast<Index>(std::countr_zero(uncovered));
  const Index r = cell / n_;
  const Index c = cell % n_;
  if (row_budget_[r] == 0 || col_budget_[c] == 0) return {};

  // Rows above r are fully covered, so irredundant rectangles only add rows
  // below it. Untouched lines form interchangeable pools.
  std::vector<Index> touched_rows, fresh_rows, touched_cols, fresh_cols;
  for (Index x = r + 1; x < n_; ++x) {
    const Mask unc = row_uncovered(x);
    if (row_budget_[x] == 0 || unc == 0) continue;
    const bool fresh = row_budget_[x] == budget_cap_ && unc == row_full_;
    (fresh ? fresh_rows : touched_rows).push_back(x);
  }
  std::array<Mask, kMaxSearchSide> col_unc{};
  for (Index y = 0; y < n_; ++y) col_unc[y] = col_uncovered(y);
  for (Index y = 0; y < n_; ++y) {
    if (y == c || col_budget_[y] == 0 || col_unc[y] == 0) continue;
    const bool fresh = col_budget_[y] == budget_cap_ && col_unc[y] == row_full_;
    (fresh ? fresh_cols : touched_cols).push_back(y);
  }

  auto expand = [](Index seed, const std::vector<Index>& touched,
                   const std::vector<Index>& fresh) {
    std::vector<Mask> out;
    for (Mask subset = 0; subset < (Mask{1} << touched.size()); ++subset) {
      Mask base = Mask{1} << seed;
      for (Index i = 0; i < touched.size(); ++i) {
        if ((subset >> i) & 1) base |= Mask{1} << touched[i];
      }
      out.push_back(base);
      for (Index j = 0; j < fresh.size(); ++j) {
        base |= Mask{1} << fresh[j];
        out.push_back(base);
      }
    }
    return out;
  };
  const std::vector<Mask> row_sets = expand(r, touched_rows, fresh_rows);
  const std::vector<Mask> col_sets = expand(c, touched_cols, fresh_cols);

  std::vector<Placement> out;
  for (Mask rows : row_sets) {
    const Index nr = static_cast<Index>(std::popcount(rows));
    for (Mask cols : col_sets) {
      const Index nc = static_cast<Index>(std::popcount(cols));
      const Index min_side = std::min(nr, nc);
      if (min_side > thin_limit_) continue;
      bool irredundant = true;
      for (Mask rs = rows; rs != 0 && irredundant; rs &= rs - 1) {
        irredundant = (row_uncovered(static_cast<Index>(std::countr_zero(rs))) & cols) != 0;
      }
      for (Mask cs = cols; cs != 0 && irredundant; cs &= cs - 1) {
        irredundant = (col_unc[static_cast<Index>(std::countr_zero(cs))] & rows) != 0;
      }
      if (!irredundant) continue;
      out.push_back(Placement{rows, cols, min_side, nr * nc});
    }
  }
  // Thin side first, then larger area, then masks for a total order.
  std::sort(out.begin(), out.end(), [](const Placement& a, const Placement& b) {
    if (a.min_side != b.min_side) return a.min_side < b.min_side;
    if (a.area != b.area) return a.area > b.area;
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cols < b.cols;
  });
  return out;
}

bool Searcher::out_of_budget() {
  ++stats_.nodes;
  if (++unflushed_ >= 256) {
    flush_nodes();
    if (shared_.nodes.load(std::memory_order_relaxed) > shared_.node_limit) {
      shared_.limit_hit = true;
      shared_.stop = true;
    }
    if (shared_.has_deadline && Clock::now() > shared_.deadline) {
      shared_.limit_hit = true;
      shared_.stop = true;
    }
  }
  if (stats_.nodes > shared_.node_limit) {
    shared_.limit_hit = true;
    shared_.stop = true;
  }
  return shared_.stop.load(std::memory_order_relaxed);
}

bool Searcher::dead_line() const {
  for (Index i = 0; i < n_; ++i) {
    if (row_budget_[i] == 0 && row_uncovered(i) != 0) return true;
    if (col_budget_[i] == 0 && col_uncovered(i) != 0) return true;
  }
  return false;
}

MemoKey Searcher::memo_key() const {
  // A line can still join at most as many rectangles as it has uncovered
  // cells, so budgets beyond that are equivalent.
  Mask budgets = 0;
  for (Index i = 0; i < n_; ++i) {
    const auto rb = std::min<Index>(row_budget_[i], std::popcount(row_uncovered(i)));
    const auto cb = std::min<Index>(col_budget_[i], std::popcount(col_uncovered(i)));
    budgets |= static_cast<Mask>(rb) << (8 * i);
    budgets |= static_cast<Mask>(cb) << (8 * i + 4);
  }
  return MemoKey{covered_, budgets};
}

bool Searcher::dfs() {
  if (out_of_budget()) return false;
  if ((covered_ & all_cells_) == all_cells_) return true;
  if (dead_line()) {
    ++stats_.budget_prunes;
    return false;
  }
  const MemoKey key = memo_key();
  if (failed_.contains(key)) {
    ++stats_.memo_hits;
    return false;
  }
  for (const Placement& pl : candidates()) {
    apply(pl);
    if (dfs()) return true;
    undo();
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
  }
  if (failed_.size() < memo_capacity_) failed_.insert(key);
  return false;
}

RectangleCover to_cover(Index n, const std::vector<Placement>& placed) {
  std::vector<Rectangle> rects;
  for (const auto& pl : placed) {
    Rectangle rect;
    rect.color = ColorId(static_cast<std::uint32_t>(rects.size()));
    for (Index i = 0; i < n; ++i) {
      if ((pl.rows >> i) & 1) rect.rows.push_back(i);
      if ((pl.cols >> i) & 1) rect.cols.push_back(i);
    }
    rects.push_back(std::move(rect));
  }
  return RectangleCover(n, n, std::move(rects));
}

void add_stats(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.budget_prunes += from.budget_prunes;
  into.memo_hits += from.memo_hits;
}

}  // namespace

SearchOutcome search_avoiding(const SearchParams& params, unsigned workers) {
  if (params.n == 0 || params.m == 0 || params.p == 0) {
    throw MalformedInput("search parameters n, m, p must be positive");
  }
  if (params.n > kMaxSearchSide) {
    throw InstanceTooLarge("search limited to n <= " + std::to_string(kMaxSearchSide));
  }
  const auto start = Clock::now();
  Shared shared;
  shared.node_limit = params.limits.node_limit;
  if (params.limits.timeout_seconds > 0) {
    shared.has_deadline = true;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(params.limits.timeout_seconds));
  }

  SearchOutcome outcome;
  if (workers <= 1) {
    Searcher searcher(params, shared);
    if (searcher.dfs()) shared.solution = searcher.placed();
    outcome.stats = searcher.stats();
  } else {
    // Root expansion is done once; its branches are handed out in order.
    Searcher root(params, shared);
    root.out_of_budget();
    const std::vector<Placement> branches = root.candidates();
    outcome.stats = root.stats();

    std::atomic<std::size_t> next{0};
    std::mutex stats_mutex;
    auto work = [&] {
      Searcher searcher(params, shared);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size() || shared.stop.load()) break;
        searcher.apply(branches[i]);
        if (searcher.dfs()) {
          std::lock_guard lock(shared.result_mutex);
          if (!shared.solution) shared.solution = searcher.placed();
          shared.stop = true;
          break;
        }
        searcher.undo();
      }
      searcher.flush_nodes();
      std::lock_guard lock(stats_mutex);
      add_stats(outcome.stats, searcher.stats());
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  if (shared.solution) {
    outcome.verdict = Verdict::sat;
    outcome.witness = to_cover(params.n, *shared.solution);
  } else if (shared.limit_hit) {
    outcome.verdict = Verdict::inconclusive;
  } else {
    outcome.verdict = Verdict::unsat;
  }
  outcome.stats.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
  return outcome;
}

std::string to_csv(const TableRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.m << ',' << row.p << ',' << to_string(row.regime) << ','
      << to_string(row.verdict) << ',' << row.nodes << ',' << row.millis;
  return out.str();
}

std::vector<TableRow> threshold_table(Index n_max, Index m_max, Index p_max,
                                      const SearchLimits& limits, unsigned workers,
                                      const std::function<void(const TableRow&)>& on_row) {
  std::vector<TableRow> rows;
  for (Index n = 1; n <= n_max; ++n) {
    for (Index m = 1; m <= m_max; ++m) {
      for (Index p = 1; p <= p_max; ++p) {
        const SearchOutcome outcome = search_avoiding(SearchParams{n, m, p, limits}, workers);
        TableRow row{n, m, p, classify_regime(n, m, p), outcome.verdict, outcome.stats.nodes,
                     outcome.stats.millis};
        if (on_row) on_row(row);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace bipramsey
