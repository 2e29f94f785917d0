#pragma once

// Test-only oracles. These read colorings cell by cell and never go through
// the library's rectangle or bitmask paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "bipramsey/core.hpp"

namespace bipramsey::testing {

inline bool cover_has_edge(const RectangleCover& cover, Index r, Index c, ColorId color) {
  for (const auto& rect : cover.rectangles()) {
    if (rect.color != color) continue;
    return std::find(rect.rows.begin(), rect.rows.end(), r) != rect.rows.end() &&
           std::find(rect.cols.begin(), rect.cols.end(), c) != rect.cols.end();
  }
  return false;
}

template <typename HasEdge>
bool biclique_holds(const Witness& w, Index p, HasEdge&& has_edge) {
  if (w.parts.size() != 2 || w.rows().size() < p || w.cols().size() < p) return false;
  for (Index r : w.rows()) {
    for (Index c : w.cols()) {
      if (!has_edge(r, c, w.color)) return false;
    }
  }
  return true;
}

inline bool witness_holds(const ColorMatrix& m, const Witness& w, Index p) {
  return biclique_holds(w, p, [&](Index r, Index c, ColorId color) { return m(r, c) == color; });
}

inline bool witness_holds(const RectangleCover& cover, const Witness& w, Index p) {
  return biclique_holds(
      w, p, [&](Index r, Index c, ColorId color) { return cover_has_edge(cover, r, c, color); });
}

inline bool kpartite_witness_holds(const KPartiteCover& cover, const Witness& w, Index p) {
  if (w.parts.size() != cover.k()) return false;
  for (const auto& part : w.parts) {
    if (part.size() < p) return false;
  }
  for (Index a = 0; a < cover.k(); ++a) {
    for (Index b = a + 1; b < cover.k(); ++b) {
      for (Index u : w.parts[a]) {
        for (Index v : w.parts[b]) {
          if (!cover_has_edge(cover.pair(a, b), u, v, w.color)) return false;
        }
      }
    }
  }
  return true;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(Index n, Index k, const std::function<void(const IndexSet&)>& f) {
  IndexSet cur;
  std::function<void(Index)> rec = [&](Index from) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (Index i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Naive existence check: every color, every p-subset of rows and of columns.
template <typename HasEdge>
bool naive_biclique_exists(Index n_rows, Index n_cols, const std::vector<ColorId>& colors,
                           Index p, HasEdge&& has_edge) {
  if (p > n_rows || p > n_cols) return false;
  bool found = false;
  for (ColorId color : colors) {
    for_each_subset(n_rows, p, [&](const IndexSet& rows) {
      if (found) return;
      for_each_subset(n_cols, p, [&](const IndexSet& cols) {
        if (found) return;
        bool all = true;
        for (Index r : rows) {
          for (Index c : cols) all = all && has_edge(r, c, color);
        }
        found = all;
      });
    });
    if (found) return true;
  }
  return false;
}

inline std::vector<ColorId> colors_of(const ColorMatrix& m) {
  std::vector<ColorId> out;
  for (Index r = 0; r < m.n_rows(); ++r) {
    for (Index c = 0; c < m.n_cols(); ++c) out.push_back(m(r, c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ColorId> colors_of(const RectangleCover& cover) {
  std::vector<ColorId> out;
  for (const auto& rect : cover.rectangles()) out.push_back(rect.color);
  return out;
}

// A returned violation must describe a real defect of the matrix.
inline bool violation_holds(const ColorMatrix& m, const Violation& v) {
  if (const auto* s = std::get_if<ShuffleViolation>(&v)) {
    const bool premise = m(s->u, s->v) == s->color && m(s->u_prime, s->v_prime) == s->color;
    const bool broken = m(s->u, s->v_prime) != s->color || m(s->u_prime, s->v) != s->color;
    return premise && broken;
  }
  return false;
}

inline bool violation_holds(const RectangleCover& cover, const Violation& v) {
  if (const auto* c = std::get_if<CoverageViolation>(&v)) {
    for (const auto& rect : cover.rectangles()) {
      if (cover_has_edge(cover, c->row, c->col, rect.color)) return false;
    }
    return true;
  }
  if (const auto* l = std::get_if<LocalityViolation>(&v)) {
    Index count = 0;
    for (const auto& rect : cover.rectangles()) {
      const IndexSet& side = l->side == Side::row ? rect.rows : rect.cols;
      if (std::find(side.begin(), side.end(), l->vertex) != side.end()) ++count;
    }
    return count == l->count && count > l->limit;
  }
  return false;
}

}  // namespace bipramsey::testing
