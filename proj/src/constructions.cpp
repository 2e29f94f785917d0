#include "bipramsey/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace bipramsey {

namespace {

IndexSet all_indices(Index n) {
  IndexSet out(n);
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

IndexSet random_subset(Index n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  IndexSet out;
  for (Index i = 0; i < n; ++i) {
    if (keep(rng)) out.push_back(i);
  }
  return out;
}

}  // namespace

ColorMatrix construct_mod_m(Index n, Index m) {
  if (n == 0 || m == 0) throw MalformedInput("n and m must be positive");
  ColorMatrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out.set(i, j, ColorId(static_cast<std::uint32_t>(i % m)));
  }
  return out;
}

ColorMatrix recursive_base_matrix() {
  return ColorMatrix::from_rows({
      {1, 5, 2, 2},
      {1, 4, 3, 4},
      {8, 5, 8, 7},
      {6, 6, 3, 7},
  });
}

ColorMatrix construct_recursive_matrix(Index k) {
  if (k < 2) throw MalformedInput("recursive construction needs k >= 2");
  if (k > 12) throw InstanceTooLarge("recursive construction limited to k <= 12");
  ColorMatrix current = recursive_base_matrix();
  for (Index level = 2; level < k; ++level) {
    const Index side = current.n_rows();
    const std::uint32_t mu = current.max_color().value;
    ColorMatrix next(2 * side, 2 * side);
    for (Index bi = 0; bi < 2; ++bi) {
      for (Index bj = 0; bj < 2; ++bj) {
        // Block offsets 0, mu, 2mu, 3mu in row-major block order.
        const std::uint32_t offset = static_cast<std::uint32_t>(2 * bi + bj) * mu;
        for (Index i = 0; i < side; ++i) {
          for (Index j = 0; j < side; ++j) {
            next.set(bi * side + i, bj * side + j, ColorId(current(i, j).value + offset));
          }
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

KPartiteCover construct_kpartite_avoiding(Index n, Index m, Index k) {
  if (n == 0 || m == 0) throw MalformedInput("n and m must be positive");
  KPartiteCover out(k, n);
  const IndexSet all = all_indices(n);

  std::vector<Rectangle> stripes;
  for (Index r = 0; r < std::min(n, m); ++r) {
    IndexSet rows;
    for (Index i = r; i < n; i += m) rows.push_back(i);
    stripes.push_back(Rectangle{ColorId(static_cast<std::uint32_t>(r)), rows, all});
  }
  std::vector<Rectangle> superimposed;
  for (Index c = 0; c < m; ++c) {
    superimposed.push_back(Rectangle{ColorId(static_cast<std::uint32_t>(c)), all, all});
  }

  for (Index b = 1; b < k; ++b) out.set_pair(0, b, RectangleCover(n, n, stripes));
  for (Index a = 1; a < k; ++a) {
    for (Index b = a + 1; b < k; ++b) out.set_pair(a, b, RectangleCover(n, n, superimposed));
  }
  return out;
}

RectangleCover random_cover(Index n, Index m, Index max_min_side, std::uint64_t seed) {
  if (n == 0 || m == 0 || max_min_side == 0) {
    throw MalformedInput("n, m and max_min_side must be positive");
  }
  constexpr int kAttempts = 200;
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Index> row_budget(n, m), col_budget(n, m);
    std::vector<bool> covered(n * n, false);
    std::vector<Rectangle> rects;
    bool failed = false;

    for (;;) {
      const auto first = std::find(covered.begin(), covered.end(), false);
      if (first == covered.end()) break;
      const Index cell = static_cast<Index>(first - covered.begin());
      const Index r = cell / n;
      const Index c = cell % n;
      if (row_budget[r] == 0 || col_budget[c] == 0) {
        failed = true;
        break;
      }

      // Thin side along rows (a horizontal strip) or along columns. A strip
      // spends one unit of its seed line's budget, so it usually runs along
      // the seed line with more uncovered cells per remaining unit.
      Index row_open = 0, col_open = 0;
      for (Index x = 0; x < n; ++x) {
        row_open += covered[r * n + x] ? 0 : 1;
        col_open += covered[x * n + c] ? 0 : 1;
      }
      const double row_pressure = double(row_open) / double(row_budget[r]);
      const double col_pressure = double(col_open) / double(col_budget[c]);
      const bool horizontal = row_pressure == col_pressure || std::bernoulli_distribution(0.2)(rng)
                                  ? std::bernoulli_distribution(0.5)(rng)
                                  : row_pressure > col_pressure;
      std::uniform_int_distribution<Index> side(1, n);
      const Index thin =
          std::uniform_int_distribution<Index>(1, std::min(max_min_side, n))(rng);
      const Index thick = std::max(side(rng), side(rng));
      const bool pad = std::bernoulli_distribution(0.1)(rng);
      const Index want_rows = horizontal ? thin : thick;
      const Index want_cols = horizontal ? thick : thin;

      // Extend from the seed cell, preferring indices whose crossing cell with
      // the seed line is still uncovered.
      auto grow = [&](Index seed_index, Index want, const std::vector<Index>& budget,
                      auto uncovered_with_seed) {
        IndexSet fresh, stale;
        for (Index x = 0; x < n; ++x) {
          if (x == seed_index || budget[x] == 0) continue;
          (uncovered_with_seed(x) ? fresh : stale).push_back(x);
        }
        std::shuffle(fresh.begin(), fresh.end(), rng);
        std::shuffle(stale.begin(), stale.end(), rng);
        const auto nearer = [&](Index a, Index b) {
          return (a > seed_index ? a - seed_index : seed_index - a) <
                 (b > seed_index ? b - seed_index : seed_index - b);
        };
        std::stable_sort(fresh.begin(), fresh.end(), nearer);
        IndexSet chosen{seed_index};
        // Padding with already covered crossings spends budget for nothing,
        // so it is rare; it keeps some overlapping covers in the mix.
        if (!pad) stale.clear();
        for (const IndexSet* pool : {&fresh, &stale}) {
          for (Index x : *pool) {
            if (chosen.size() >= want) break;
            chosen.push_back(x);
          }
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
      };
      IndexSet rows = grow(r, want_rows, row_budget, [&](Index x) { return !covered[x * n + c]; });
      IndexSet cols = grow(c, want_cols, col_budget, [&](Index x) { return !covered[r * n + x]; });

      for (Index x : rows) --row_budget[x];
      for (Index x : cols) --col_budget[x];
      for (Index x : rows) {
        for (Index y : cols) covered[x * n + y] = true;
      }
      rects.push_back(Rectangle{ColorId(static_cast<std::uint32_t>(rects.size())),
                                std::move(rows), std::move(cols)});
    }
    if (!failed) return RectangleCover(n, n, std::move(rects));
  }
  throw GenerationFailed("random_cover: budgets exhausted before full coverage");
}

CliqueFamily random_clique_family(Index n_vertices, Index m, std::uint64_t seed) {
  if (n_vertices == 0 || m == 0) throw MalformedInput("n_vertices and m must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.15, 0.95);
  std::uniform_int_distribution<Index> any_vertex(0, n_vertices - 1);
  std::vector<Clique> cliques;
  for (Index c = 0; c < m; ++c) {
    IndexSet vertices = random_subset(n_vertices, density(rng), rng);
    if (vertices.empty()) vertices.push_back(any_vertex(rng));
    cliques.push_back(Clique{ColorId(static_cast<std::uint32_t>(c)), std::move(vertices)});
  }
  return CliqueFamily(n_vertices, std::move(cliques));
}

KPartiteCover random_kpartite_two_coloring(Index n, Index k, std::uint64_t seed) {
  if (n == 0) throw MalformedInput("part size must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const IndexSet all = all_indices(n);

  // Complete coverage of a pair (a, b) needs S0[a] = all or S1[b] = all, and
  // S0[b] = all or S1[a] = all. So either one color is full on every part, or
  // a single part splits freely while all other parts carry both colors fully.
  std::vector<IndexSet> sets[2];
  sets[0].assign(k, all);
  sets[1].assign(k, all);
  const int shape = std::uniform_int_distribution<int>(0, 2)(rng);
  if (shape < 2) {
    const int sparse = shape;
    for (Index part = 0; part < k; ++part) sets[sparse][part] = random_subset(n, density(rng), rng);
  } else {
    const Index special = std::uniform_int_distribution<Index>(0, k - 1)(rng);
    IndexSet first, second;
    std::uniform_int_distribution<int> which(0, 2);
    for (Index v = 0; v < n; ++v) {
      const int w = which(rng);
      if (w != 1) first.push_back(v);
      if (w != 0) second.push_back(v);
    }
    sets[0][special] = std::move(first);
    sets[1][special] = std::move(second);
  }

  KPartiteCover out(k, n);
  for (Index a = 0; a < k; ++a) {
    for (Index b = a + 1; b < k; ++b) {
      std::vector<Rectangle> rects;
      for (std::uint32_t color = 0; color < 2; ++color) {
        if (sets[color][a].empty() || sets[color][b].empty()) continue;
        rects.push_back(Rectangle{ColorId(color), sets[color][a], sets[color][b]});
      }
      out.set_pair(a, b, RectangleCover(n, n, std::move(rects)));
    }
  }
  return out;
}

}  // namespace bipramsey
