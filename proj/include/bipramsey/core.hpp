#pragma once

// Shuffle-preserved colorings of complete bipartite (and k-partite)
// multigraphs.
//
// A coloring is shuffle-preserved when every color class is itself a complete
// bipartite subgraph: (u,v) and (u',v') colored c force (u,v') and (u',v)
// colored c. Assuming parallel edges between one pair carry distinct colors,
// each color class is then exactly one combinatorial rectangle
// rows(c) x cols(c), and a coloring is a family of rectangles with distinct
// colors that covers the grid. RectangleCover is the canonical form; it is
// shuffle-preserved by construction.
//
// All indices are 0-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bipramsey/errors.hpp"

namespace bipramsey {

struct ColorId {
  std::uint32_t value = 0;

  constexpr ColorId() = default;
  constexpr explicit ColorId(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const ColorId&) const = default;
};

using Index = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using IndexSet = std::vector<Index>;

// Simple coloring: exactly one colored edge per (row, col) pair.
class ColorMatrix {
 public:
  ColorMatrix(Index n_rows, Index n_cols, ColorId fill = ColorId{});
  // `cells` is row-major with n_rows * n_cols entries.
  ColorMatrix(Index n_rows, Index n_cols, std::vector<ColorId> cells);

  static ColorMatrix from_rows(
      std::initializer_list<std::initializer_list<std::uint32_t>> rows);

  Index n_rows() const { return n_rows_; }
  Index n_cols() const { return n_cols_; }

  ColorId operator()(Index r, Index c) const { return cells_[r * n_cols_ + c]; }
  void set(Index r, Index c, ColorId color) { cells_[r * n_cols_ + c] = color; }

  ColorId max_color() const;

  bool operator==(const ColorMatrix&) const = default;

 private:
  Index n_rows_;
  Index n_cols_;
  std::vector<ColorId> cells_;
};

struct Rectangle {
  ColorId color;
  IndexSet rows;
  IndexSet cols;

  Index min_side() const { return rows.size() < cols.size() ? rows.size() : cols.size(); }
  Index area() const { return rows.size() * cols.size(); }

  bool operator==(const Rectangle&) const = default;
};

// One rectangle per color; the multigraph has an edge of color c between u
// and v iff u is in rows(c) and v is in cols(c). Coverage is NOT enforced here
// (see check_coverage); structural invariants are.
class RectangleCover {
 public:
  // Throws MalformedInput on zero sizes, empty/unsorted/out-of-range index
  // sets, or repeated colors.
  RectangleCover(Index n_rows, Index n_cols, std::vector<Rectangle> rectangles);

  Index n_rows() const { return n_rows_; }
  Index n_cols() const { return n_cols_; }
  const std::vector<Rectangle>& rectangles() const { return rectangles_; }
  const Rectangle* find(ColorId color) const;

  bool operator==(const RectangleCover&) const = default;

 private:
  Index n_rows_;
  Index n_cols_;
  std::vector<Rectangle> rectangles_;
};

// Multigraph between two sides with an explicit color list per cell. The
// brute-force detector works on this form and makes no shuffle assumption.
class BipartiteMultigraph {
 public:
  BipartiteMultigraph(Index n_rows, Index n_cols);

  Index n_rows() const { return n_rows_; }
  Index n_cols() const { return n_cols_; }

  void add_edge(Index r, Index c, ColorId color);
  const std::vector<ColorId>& colors_at(Index r, Index c) const {
    return cells_[r * n_cols_ + c];
  }
  bool has_edge(Index r, Index c, ColorId color) const;
  // Distinct colors in ascending order.
  std::vector<ColorId> palette() const;

 private:
  Index n_rows_;
  Index n_cols_;
  std::vector<std::vector<ColorId>> cells_;
};

BipartiteMultigraph to_multigraph(const ColorMatrix& matrix);
BipartiteMultigraph to_multigraph(const RectangleCover& cover);

struct LocalProfile {
  std::vector<Index> row_counts;  // |C(u)| per row
  std::vector<Index> col_counts;  // |C(v)| per column
  Index local_width = 0;
  Index global_colors = 0;
};

enum class Side { row, col };

struct ShuffleViolation {
  ColorId color;
  // Edges (u, v) and (u_prime, v_prime) carry `color`, (u, v_prime) does not.
  Index u = 0;
  Index u_prime = 0;
  Index v = 0;
  Index v_prime = 0;

  bool operator==(const ShuffleViolation&) const = default;
};

// k-partite form: `color` touches vertex u of part_a and vertex v of part_b
// but the edge (u, v) is not colored `color`.
struct PartShuffleViolation {
  ColorId color;
  Index part_a = 0;
  Index u = 0;
  Index part_b = 0;
  Index v = 0;

  bool operator==(const PartShuffleViolation&) const = default;
};

struct CoverageViolation {
  Index row = 0;
  Index col = 0;
  // Set for k-partite covers.
  std::optional<std::pair<Index, Index>> parts;

  bool operator==(const CoverageViolation&) const = default;
};

struct LocalityViolation {
  Side side = Side::row;
  Index vertex = 0;
  Index count = 0;
  Index limit = 0;

  bool operator==(const LocalityViolation&) const = default;
};

enum class ViolationKind { shuffle, coverage, locality };

using Violation =
    std::variant<ShuffleViolation, PartShuffleViolation, CoverageViolation, LocalityViolation>;

ViolationKind kind_of(const Violation& v);
std::string to_string(ViolationKind kind);

struct NotShufflePreserved : Error {
  explicit NotShufflePreserved(Violation v);
  Violation violation;
};

// A monochromatic complete multipartite subgraph. Bipartite witnesses have two
// parts (rows, cols).
struct Witness {
  ColorId color;
  std::vector<IndexSet> parts;

  const IndexSet& rows() const { return parts.at(0); }
  const IndexSet& cols() const { return parts.at(1); }

  bool operator==(const Witness&) const = default;
};

// Complete k-partite multigraph with parts of equal size n. Each pair of parts
// (a, b), a < b, carries its own rectangle family; rows index part a and
// columns index part b. Colors are global across pairs.
class KPartiteCover {
 public:
  KPartiteCover(Index k, Index n);

  Index k() const { return k_; }
  Index n() const { return n_; }

  const RectangleCover& pair(Index a, Index b) const;
  void set_pair(Index a, Index b, RectangleCover cover);

  std::vector<ColorId> palette() const;
  // Vertices of part `part` incident to at least one edge of `color`.
  IndexSet touched(ColorId color, Index part) const;

 private:
  Index slot(Index a, Index b) const;

  Index k_;
  Index n_;
  std::vector<RectangleCover> pairs_;
};

// ok (nullopt) iff every color class equals rows(c) x cols(c).
std::optional<Violation> validate_shuffle_preserved(const ColorMatrix& matrix);

// Throws NotShufflePreserved carrying the violation.
RectangleCover matrix_to_rectangles(const ColorMatrix& matrix);

// Throws OverlapError when two rectangles share a cell and MalformedInput when
// a cell is uncovered.
ColorMatrix rectangles_to_matrix(const RectangleCover& cover);

LocalProfile local_profile(const RectangleCover& cover);

std::optional<Violation> check_coverage(const RectangleCover& cover);

// First vertex (rows before columns) that sees more than `max_local` colors.
std::optional<Violation> check_locality(const RectangleCover& cover, Index max_local);

// |T| = sum over colors of |U(c)| * |V(c)|.
std::uint64_t triple_count(const RectangleCover& cover);

// Per-pair coverage plus the multipartite reading of shuffle preservation:
// whenever a color touches parts a and b, its edges between them are exactly
// touched(c, a) x touched(c, b).
std::optional<Violation> validate_kpartite(const KPartiteCover& cover);

// Largest p <= n such that every shuffle-preserved m-local coloring of the
// n x n complete bipartite multigraph has a monochromatic K_{p,p}.
Index guaranteed_p(Index n, Index m);

// ceil(n / m); every p above it is avoided by the mod-m coloring.
Index avoidance_threshold(Index n, Index m);

enum class Regime { guaranteed, avoidable, open };

Regime classify_regime(Index n, Index m, Index p);
std::string to_string(Regime regime);

}  // namespace bipramsey

template <>
struct std::hash<bipramsey::ColorId> {
  std::size_t operator()(const bipramsey::ColorId& c) const noexcept {
    return std::hash<std::uint32_t>{}(c.value);
  }
};
