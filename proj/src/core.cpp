#include "bipramsey/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bipramsey {

namespace {

void require_sorted_in_range(const IndexSet& set, Index bound, const char* what) {
  if (set.empty()) {
    throw MalformedInput(std::string("empty ") + what + " set in rectangle");
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= bound) {
      std::ostringstream msg;
      msg << what << " index " << set[i] << " out of range (size " << bound << ")";
      throw MalformedInput(msg.str());
    }
    if (i > 0 && set[i - 1] >= set[i]) {
      throw MalformedInput(std::string(what) + " indices must be strictly increasing");
    }
  }
}

bool contains(const IndexSet& set, Index x) {
  return std::binary_search(set.begin(), set.end(), x);
}

}  // namespace

// ---------------------------------------------------------------------------
// ColorMatrix

ColorMatrix::ColorMatrix(Index n_rows, Index n_cols, ColorId fill)
    : n_rows_(n_rows), n_cols_(n_cols), cells_(n_rows * n_cols, fill) {
  if (n_rows == 0 || n_cols == 0) throw MalformedInput("matrix sides must be positive");
}

ColorMatrix::ColorMatrix(Index n_rows, Index n_cols, std::vector<ColorId> cells)
    : n_rows_(n_rows), n_cols_(n_cols), cells_(std::move(cells)) {
  if (n_rows == 0 || n_cols == 0) throw MalformedInput("matrix sides must be positive");
  if (cells_.size() != n_rows * n_cols) throw MalformedInput("matrix cell count mismatch");
}

ColorMatrix ColorMatrix::from_rows(
    std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  const Index n_rows = rows.size();
  const Index n_cols = n_rows == 0 ? 0 : rows.begin()->size();
  std::vector<ColorId> cells;
  cells.reserve(n_rows * n_cols);
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw MalformedInput("ragged matrix rows");
    for (auto v : row) cells.emplace_back(v);
  }
  return ColorMatrix(n_rows, n_cols, std::move(cells));
}

ColorId ColorMatrix::max_color() const {
  return *std::max_element(cells_.begin(), cells_.end());
}

// ---------------------------------------------------------------------------
// RectangleCover

RectangleCover::RectangleCover(Index n_rows, Index n_cols, std::vector<Rectangle> rectangles)
    : n_rows_(n_rows), n_cols_(n_cols), rectangles_(std::move(rectangles)) {
  if (n_rows == 0 || n_cols == 0) throw MalformedInput("cover sides must be positive");
  std::set<ColorId> seen;
  for (const auto& rect : rectangles_) {
    require_sorted_in_range(rect.rows, n_rows, "row");
    require_sorted_in_range(rect.cols, n_cols, "col");
    if (!seen.insert(rect.color).second) {
      throw MalformedInput("color " + std::to_string(rect.color.value) + " used by two rectangles");
    }
  }
}

const Rectangle* RectangleCover::find(ColorId color) const {
  for (const auto& rect : rectangles_) {
    if (rect.color == color) return &rect;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// BipartiteMultigraph

BipartiteMultigraph::BipartiteMultigraph(Index n_rows, Index n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), cells_(n_rows * n_cols) {}

void BipartiteMultigraph::add_edge(Index r, Index c, ColorId color) {
  auto& cell = cells_.at(r * n_cols_ + c);
  auto it = std::lower_bound(cell.begin(), cell.end(), color);
  if (it == cell.end() || *it != color) cell.insert(it, color);
}

bool BipartiteMultigraph::has_edge(Index r, Index c, ColorId color) const {
  const auto& cell = colors_at(r, c);
  return std::binary_search(cell.begin(), cell.end(), color);
}

std::vector<ColorId> BipartiteMultigraph::palette() const {
  std::set<ColorId> colors;
  for (const auto& cell : cells_) colors.insert(cell.begin(), cell.end());
  return {colors.begin(), colors.end()};
}

BipartiteMultigraph to_multigraph(const ColorMatrix& matrix) {
  BipartiteMultigraph g(matrix.n_rows(), matrix.n_cols());
  for (Index r = 0; r < matrix.n_rows(); ++r) {
    for (Index c = 0; c < matrix.n_cols(); ++c) g.add_edge(r, c, matrix(r, c));
  }
  return g;
}

BipartiteMultigraph to_multigraph(const RectangleCover& cover) {
  BipartiteMultigraph g(cover.n_rows(), cover.n_cols());
  for (const auto& rect : cover.rectangles()) {
    for (Index r : rect.rows) {
      for (Index c : rect.cols) g.add_edge(r, c, rect.color);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Violations

ViolationKind kind_of(const Violation& v) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ShuffleViolation> ||
                      std::is_same_v<T, PartShuffleViolation>) {
          return ViolationKind::shuffle;
        } else if constexpr (std::is_same_v<T, CoverageViolation>) {
          return ViolationKind::coverage;
        } else {
          return ViolationKind::locality;
        }
      },
      v);
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::shuffle: return "shuffle";
    case ViolationKind::coverage: return "coverage";
    case ViolationKind::locality: return "locality";
  }
  return "unknown";
}

NotShufflePreserved::NotShufflePreserved(Violation v)
    : Error("coloring is not shuffle-preserved"), violation(std::move(v)) {}

// ---------------------------------------------------------------------------
// KPartiteCover

KPartiteCover::KPartiteCover(Index k, Index n) : k_(k), n_(n) {
  if (k < 2) throw MalformedInput("k-partite cover needs k >= 2");
  if (n == 0) throw MalformedInput("part size must be positive");
  pairs_.assign(k * (k - 1) / 2, RectangleCover(n, n, {}));
}

Index KPartiteCover::slot(Index a, Index b) const {
  if (a >= b || b >= k_) throw std::out_of_range("part pair must satisfy a < b < k");
  // Pairs are laid out row by row: (0,1) (0,2) ... (0,k-1) (1,2) ...
  return a * k_ - a * (a + 1) / 2 + (b - a - 1);
}

const RectangleCover& KPartiteCover::pair(Index a, Index b) const { return pairs_[slot(a, b)]; }

void KPartiteCover::set_pair(Index a, Index b, RectangleCover cover) {
  if (cover.n_rows() != n_ || cover.n_cols() != n_) {
    throw MalformedInput("pair cover size does not match part size");
  }
  pairs_[slot(a, b)] = std::move(cover);
}

std::vector<ColorId> KPartiteCover::palette() const {
  std::set<ColorId> colors;
  for (const auto& pc : pairs_) {
    for (const auto& rect : pc.rectangles()) colors.insert(rect.color);
  }
  return {colors.begin(), colors.end()};
}

IndexSet KPartiteCover::touched(ColorId color, Index part) const {
  std::set<Index> out;
  for (Index other = 0; other < k_; ++other) {
    if (other == part) continue;
    const Index a = std::min(part, other);
    const Index b = std::max(part, other);
    const Rectangle* rect = pair(a, b).find(color);
    if (rect == nullptr) continue;
    const IndexSet& mine = part == a ? rect->rows : rect->cols;
    out.insert(mine.begin(), mine.end());
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Validators and conversions

std::optional<Violation> validate_shuffle_preserved(const ColorMatrix& matrix) {
  std::map<ColorId, std::pair<std::set<Index>, std::set<Index>>> classes;
  for (Index r = 0; r < matrix.n_rows(); ++r) {
    for (Index c = 0; c < matrix.n_cols(); ++c) {
      auto& [rows, cols] = classes[matrix(r, c)];
      rows.insert(r);
      cols.insert(c);
    }
  }
  for (const auto& [color, sides] : classes) {
    const auto& [rows, cols] = sides;
    for (Index r : rows) {
      for (Index c : cols) {
        if (matrix(r, c) == color) continue;
        // r has some edge (r, v) of this color, column c has some (u', c).
        Index v = 0;
        while (matrix(r, v) != color) ++v;
        Index u_prime = 0;
        while (matrix(u_prime, c) != color) ++u_prime;
        return ShuffleViolation{color, r, u_prime, v, c};
      }
    }
  }
  return std::nullopt;
}

RectangleCover matrix_to_rectangles(const ColorMatrix& matrix) {
  if (auto violation = validate_shuffle_preserved(matrix)) {
    throw NotShufflePreserved(*violation);
  }
  std::map<ColorId, std::pair<std::set<Index>, std::set<Index>>> classes;
  for (Index r = 0; r < matrix.n_rows(); ++r) {
    for (Index c = 0; c < matrix.n_cols(); ++c) {
      auto& [rows, cols] = classes[matrix(r, c)];
      rows.insert(r);
      cols.insert(c);
    }
  }
  std::vector<Rectangle> rects;
  rects.reserve(classes.size());
  for (const auto& [color, sides] : classes) {
    rects.push_back(Rectangle{color, IndexSet(sides.first.begin(), sides.first.end()),
                              IndexSet(sides.second.begin(), sides.second.end())});
  }
  return RectangleCover(matrix.n_rows(), matrix.n_cols(), std::move(rects));
}

ColorMatrix rectangles_to_matrix(const RectangleCover& cover) {
  std::vector<std::optional<ColorId>> cells(cover.n_rows() * cover.n_cols());
  for (const auto& rect : cover.rectangles()) {
    for (Index r : rect.rows) {
      for (Index c : rect.cols) {
        auto& cell = cells[r * cover.n_cols() + c];
        if (cell) {
          std::ostringstream msg;
          msg << "colors " << cell->value << " and " << rect.color.value << " overlap at (" << r
              << "," << c << ")";
          throw OverlapError(msg.str());
        }
        cell = rect.color;
      }
    }
  }
  std::vector<ColorId> out;
  out.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i]) {
      std::ostringstream msg;
      msg << "cell (" << i / cover.n_cols() << "," << i % cover.n_cols() << ") is uncovered";
      throw MalformedInput(msg.str());
    }
    out.push_back(*cells[i]);
  }
  return ColorMatrix(cover.n_rows(), cover.n_cols(), std::move(out));
}

LocalProfile local_profile(const RectangleCover& cover) {
  LocalProfile profile;
  profile.row_counts.assign(cover.n_rows(), 0);
  profile.col_counts.assign(cover.n_cols(), 0);
  for (const auto& rect : cover.rectangles()) {
    for (Index r : rect.rows) ++profile.row_counts[r];
    for (Index c : rect.cols) ++profile.col_counts[c];
  }
  for (Index x : profile.row_counts) profile.local_width = std::max(profile.local_width, x);
  for (Index x : profile.col_counts) profile.local_width = std::max(profile.local_width, x);
  profile.global_colors = cover.rectangles().size();
  return profile;
}

std::optional<Violation> check_coverage(const RectangleCover& cover) {
  std::vector<bool> covered(cover.n_rows() * cover.n_cols(), false);
  for (const auto& rect : cover.rectangles()) {
    for (Index r : rect.rows) {
      for (Index c : rect.cols) covered[r * cover.n_cols() + c] = true;
    }
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) return CoverageViolation{i / cover.n_cols(), i % cover.n_cols(), {}};
  }
  return std::nullopt;
}

std::optional<Violation> check_locality(const RectangleCover& cover, Index max_local) {
  const LocalProfile profile = local_profile(cover);
  for (Index r = 0; r < profile.row_counts.size(); ++r) {
    if (profile.row_counts[r] > max_local) {
      return LocalityViolation{Side::row, r, profile.row_counts[r], max_local};
    }
  }
  for (Index c = 0; c < profile.col_counts.size(); ++c) {
    if (profile.col_counts[c] > max_local) {
      return LocalityViolation{Side::col, c, profile.col_counts[c], max_local};
    }
  }
  return std::nullopt;
}

std::uint64_t triple_count(const RectangleCover& cover) {
  std::uint64_t total = 0;
  for (const auto& rect : cover.rectangles()) total += rect.area();
  return total;
}

std::optional<Violation> validate_kpartite(const KPartiteCover& cover) {
  for (Index a = 0; a < cover.k(); ++a) {
    for (Index b = a + 1; b < cover.k(); ++b) {
      if (auto v = check_coverage(cover.pair(a, b))) {
        auto cv = std::get<CoverageViolation>(*v);
        cv.parts = std::make_pair(a, b);
        return cv;
      }
    }
  }
  for (ColorId color : cover.palette()) {
    std::vector<IndexSet> touched(cover.k());
    for (Index part = 0; part < cover.k(); ++part) touched[part] = cover.touched(color, part);
    for (Index a = 0; a < cover.k(); ++a) {
      for (Index b = a + 1; b < cover.k(); ++b) {
        if (touched[a].empty() || touched[b].empty()) continue;
        const Rectangle* rect = cover.pair(a, b).find(color);
        if (rect == nullptr) {
          return PartShuffleViolation{color, a, touched[a].front(), b, touched[b].front()};
        }
        for (Index u : touched[a]) {
          if (!contains(rect->rows, u)) {
            return PartShuffleViolation{color, a, u, b, touched[b].front()};
          }
        }
        for (Index v : touched[b]) {
          if (!contains(rect->cols, v)) {
            return PartShuffleViolation{color, a, touched[a].front(), b, v};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bounds

Index guaranteed_p(Index n, Index m) {
  if (n == 0 || m == 0) throw MalformedInput("n and m must be positive");
  // With one color the whole K_{n,n} is monochromatic.
  if (m == 1) return n;
  // Largest p with 2(p-1)(m-1) < n, i.e. p - 1 <= (n-1) / (2(m-1)).
  return std::min(n, (n - 1) / (2 * (m - 1)) + 1);
}

Index avoidance_threshold(Index n, Index m) {
  if (n == 0 || m == 0) throw MalformedInput("n and m must be positive");
  return (n + m - 1) / m;
}

Regime classify_regime(Index n, Index m, Index p) {
  if (p <= guaranteed_p(n, m)) return Regime::guaranteed;
  if (p > avoidance_threshold(n, m)) return Regime::avoidable;
  return Regime::open;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::guaranteed: return "guaranteed";
    case Regime::avoidable: return "avoidable";
    case Regime::open: return "open";
  }
  return "unknown";
}

}  // namespace bipramsey
