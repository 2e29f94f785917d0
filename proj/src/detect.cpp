#include "bipramsey/detect.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace bipramsey {

namespace {

using Mask = std::uint64_t;

IndexSet lowest_bits(Mask mask, Index count) {
  IndexSet out;
  while (mask != 0 && out.size() < count) {
    out.push_back(static_cast<Index>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

IndexSet first_n(const IndexSet& set, Index count) {
  return IndexSet(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(std::min(count, set.size())));
}

void check_brute_limits(Index side, Index p, const BruteLimits& limits) {
  if (p == 0) throw MalformedInput("p must be positive");
  if (side > limits.max_side || side > 64) {
    throw InstanceTooLarge("brute force limited to sides <= " + std::to_string(limits.max_side));
  }
  if (p > limits.max_p) {
    throw InstanceTooLarge("brute force limited to p <= " + std::to_string(limits.max_p));
  }
}

// Calls visit(mask_of_chosen, intersection) for every p-subset of `candidates`
// (ascending lexicographic order) whose running intersection keeps >= p bits.
// Stops as soon as visit returns true.
bool for_each_dense_subset(const std::vector<Index>& candidates, const std::vector<Mask>& masks,
                           Index p, Mask start,
                           const std::function<bool(const IndexSet&, Mask)>& visit) {
  IndexSet chosen;
  std::function<bool(Index, Mask)> rec = [&](Index from, Mask acc) -> bool {
    if (chosen.size() == p) return visit(chosen, acc);
    const Index need = p - chosen.size();
    for (Index i = from; i + need <= candidates.size(); ++i) {
      const Mask next = acc & masks[candidates[i]];
      if (static_cast<Index>(std::popcount(next)) < p) continue;
      chosen.push_back(candidates[i]);
      if (rec(i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0, start);
}

}  // namespace

std::optional<Witness> find_mono_biclique_fast(const RectangleCover& cover, Index p) {
  if (p == 0) throw MalformedInput("p must be positive");
  const Rectangle* best = nullptr;
  for (const auto& rect : cover.rectangles()) {
    if (rect.rows.size() < p || rect.cols.size() < p) continue;
    if (best == nullptr || rect.color < best->color) best = &rect;
  }
  if (best == nullptr) return std::nullopt;
  return Witness{best->color, {first_n(best->rows, p), first_n(best->cols, p)}};
}

std::optional<Witness> find_mono_biclique_brute(const BipartiteMultigraph& graph, Index p,
                                                const BruteLimits& limits) {
  check_brute_limits(std::max(graph.n_rows(), graph.n_cols()), p, limits);
  if (p > graph.n_rows() || p > graph.n_cols()) return std::nullopt;

  const Mask all_cols = graph.n_cols() == 64 ? ~Mask{0} : (Mask{1} << graph.n_cols()) - 1;
  for (ColorId color : graph.palette()) {
    std::vector<Mask> row_masks(graph.n_rows(), 0);
    std::vector<Index> candidates;
    for (Index r = 0; r < graph.n_rows(); ++r) {
      for (Index c = 0; c < graph.n_cols(); ++c) {
        if (graph.has_edge(r, c, color)) row_masks[r] |= Mask{1} << c;
      }
      if (static_cast<Index>(std::popcount(row_masks[r])) >= p) candidates.push_back(r);
    }
    std::optional<Witness> found;
    for_each_dense_subset(candidates, row_masks, p, all_cols,
                          [&](const IndexSet& rows, Mask cols) {
                            found = Witness{color, {rows, lowest_bits(cols, p)}};
                            return true;
                          });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Witness> find_mono_biclique_brute(const ColorMatrix& matrix, Index p,
                                                const BruteLimits& limits) {
  return find_mono_biclique_brute(to_multigraph(matrix), p, limits);
}

// ---------------------------------------------------------------------------
// k-partite

namespace {

// Color of a monochromatic p x ... x p subgraph on `parts`, or nullopt.
std::optional<ColorId> kpartite_color(const KPartiteCover& cover, const IndexSet& parts, Index p) {
  if (parts.size() == 2) {
    auto w = find_mono_biclique_fast(cover.pair(parts[0], parts[1]), p);
    if (!w) return std::nullopt;
    return w->color;
  }
  // Drop one part at a time. Two sub-answers sharing a color together touch
  // every part in >= p vertices, and the multipartite completeness of that
  // color merges them. With two colors the third answer at the latest repeats.
  std::vector<ColorId> seen;
  for (Index drop = 0; drop < parts.size(); ++drop) {
    IndexSet rest;
    for (Index i = 0; i < parts.size(); ++i) {
      if (i != drop) rest.push_back(parts[i]);
    }
    const auto color = kpartite_color(cover, rest, p);
    if (!color) continue;
    if (std::find(seen.begin(), seen.end(), *color) != seen.end()) return color;
    seen.push_back(*color);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> find_mono_kpartite(const KPartiteCover& cover, Index p) {
  if (p == 0) throw MalformedInput("p must be positive");
  if (cover.palette().size() > 2) throw NotTwoColored("k-partite detection needs <= 2 colors");
  if (auto v = validate_kpartite(cover)) throw NotShufflePreserved(*v);

  IndexSet parts(cover.k());
  for (Index i = 0; i < cover.k(); ++i) parts[i] = i;
  const auto color = kpartite_color(cover, parts, p);
  if (!color) return std::nullopt;

  Witness out{*color, {}};
  for (Index part = 0; part < cover.k(); ++part) {
    IndexSet touched = cover.touched(*color, part);
    if (touched.size() < p) return std::nullopt;
    out.parts.push_back(first_n(touched, p));
  }
  return out;
}

std::optional<Witness> find_mono_kpartite_brute(const KPartiteCover& cover, Index p,
                                                const BruteLimits& limits) {
  check_brute_limits(cover.n(), p, limits);
  const Index k = cover.k();
  const Index n = cover.n();
  if (p > n) return std::nullopt;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  for (ColorId color : cover.palette()) {
    // adj[a * k + b][u]: vertices of part b joined to vertex u of part a.
    std::vector<std::vector<Mask>> adj(k * k, std::vector<Mask>(n, 0));
    for (Index a = 0; a < k; ++a) {
      for (Index b = a + 1; b < k; ++b) {
        const BipartiteMultigraph g = to_multigraph(cover.pair(a, b));
        for (Index u = 0; u < n; ++u) {
          for (Index v = 0; v < n; ++v) {
            if (!g.has_edge(u, v, color)) continue;
            adj[a * k + b][u] |= Mask{1} << v;
            adj[b * k + a][v] |= Mask{1} << u;
          }
        }
      }
    }

    // allowed[i]: vertices of part i compatible with everything chosen so far.
    std::vector<IndexSet> chosen(k);
    std::function<bool(Index, std::vector<Mask>)> choose_part =
        [&](Index part, std::vector<Mask> allowed) -> bool {
      if (part == k) return true;
      IndexSet candidates = lowest_bits(allowed[part], n);
      IndexSet pick;
      std::function<bool(Index, std::vector<Mask>)> rec = [&](Index from,
                                                              std::vector<Mask> acc) -> bool {
        if (pick.size() == p) {
          chosen[part] = pick;
          return choose_part(part + 1, acc);
        }
        for (Index i = from; i + (p - pick.size()) <= candidates.size(); ++i) {
          const Index u = candidates[i];
          std::vector<Mask> next = acc;
          bool viable = true;
          for (Index later = part + 1; later < k; ++later) {
            next[later] &= adj[part * k + later][u];
            if (static_cast<Index>(std::popcount(next[later])) < p) viable = false;
          }
          if (!viable) continue;
          pick.push_back(u);
          if (rec(i + 1, next)) return true;
          pick.pop_back();
        }
        return false;
      };
      return rec(0, allowed);
    };
    if (choose_part(0, std::vector<Mask>(k, all))) return Witness{color, chosen};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Clique families

CliqueFamily::CliqueFamily(Index n_vertices, std::vector<Clique> cliques)
    : n_vertices_(n_vertices), cliques_(std::move(cliques)) {
  if (n_vertices == 0) throw MalformedInput("clique family needs at least one vertex");
  std::sort(cliques_.begin(), cliques_.end(),
            [](const Clique& a, const Clique& b) { return a.color < b.color; });
  for (std::size_t i = 0; i < cliques_.size(); ++i) {
    if (i > 0 && cliques_[i - 1].color == cliques_[i].color) {
      throw MalformedInput("color " + std::to_string(cliques_[i].color.value) + " repeated");
    }
    auto& vs = cliques_[i].vertices;
    if (vs.empty()) throw MalformedInput("clique with no vertices");
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
      throw MalformedInput("clique lists a vertex twice");
    }
    if (vs.back() >= n_vertices) throw MalformedInput("clique vertex out of range");
  }
}

std::vector<Index> CliqueFamily::degree_histogram() const {
  std::vector<Index> membership(n_vertices_, 0);
  for (const auto& clique : cliques_) {
    for (Index v : clique.vertices) ++membership[v];
  }
  std::vector<Index> hist(cliques_.size() + 1, 0);
  for (Index count : membership) ++hist[count];
  return hist;
}

std::uint64_t binomial(Index n, Index k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (Index i = 1; i <= n; ++i) {
    for (Index j = std::min(i, k); j >= 1; --j) {
      if (__builtin_add_overflow(row[j], row[j - 1], &row[j])) {
        throw std::overflow_error("binomial coefficient overflows 64 bits");
      }
    }
  }
  return row[k];
}

namespace {

void check_t(const CliqueFamily& family, Index t) {
  if (t == 0 || t > family.color_count()) {
    throw MalformedInput("t must satisfy 1 <= t <= number of colors");
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("product overflows 64 bits");
  return out;
}

// Dynamic bitset over vertices.
using VertexBits = std::vector<Mask>;

VertexBits to_bits(const IndexSet& set, Index n) {
  VertexBits bits((n + 63) / 64, 0);
  for (Index v : set) bits[v / 64] |= Mask{1} << (v % 64);
  return bits;
}

Index count_bits(const VertexBits& bits) {
  Index total = 0;
  for (Mask w : bits) total += static_cast<Index>(std::popcount(w));
  return total;
}

// Visits every t-subset of cliques in lexicographic order with the running
// intersection of their vertex sets.
template <typename Visit>
void for_each_color_subset(const CliqueFamily& family, Index t, std::uint64_t max_subsets,
                           Visit&& visit) {
  const std::uint64_t total = binomial(family.color_count(), t);
  if (total > max_subsets) {
    throw TooManySubsets("C(" + std::to_string(family.color_count()) + "," + std::to_string(t) +
                         ") exceeds the enumeration limit");
  }
  const Index n = family.n_vertices();
  std::vector<VertexBits> bits;
  for (const auto& clique : family.cliques()) bits.push_back(to_bits(clique.vertices, n));

  std::vector<Index> chosen;
  std::function<void(Index, const VertexBits&)> rec = [&](Index from, const VertexBits& acc) {
    if (chosen.size() == t) {
      visit(chosen, acc);
      return;
    }
    for (Index i = from; i + (t - chosen.size()) <= bits.size(); ++i) {
      VertexBits next = acc;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= bits[i][w];
      chosen.push_back(i);
      rec(i + 1, next);
      chosen.pop_back();
    }
  };
  VertexBits everyone((n + 63) / 64, ~Mask{0});
  rec(0, everyone);
}

}  // namespace

std::uint64_t superimposed_bound(const CliqueFamily& family, Index t) {
  check_t(family, t);
  const auto hist = family.degree_histogram();
  const Index m = family.color_count();
  std::uint64_t numerator = 0;
  for (Index i = t; i <= m; ++i) {
    const std::uint64_t term = checked_mul(hist[i], binomial(i, t));
    if (__builtin_add_overflow(numerator, term, &numerator)) {
      throw std::overflow_error("superimposed bound numerator overflows 64 bits");
    }
  }
  const std::uint64_t denominator = binomial(m, t);
  return numerator / denominator + (numerator % denominator != 0 ? 1 : 0);
}

std::uint64_t intersection_sum(const CliqueFamily& family, Index t) {
  check_t(family, t);
  std::uint64_t total = 0;
  for_each_color_subset(family, t, SuperimposedLimits{}.max_subsets,
                        [&](const std::vector<Index>&, const VertexBits& acc) {
                          total += count_bits(acc);
                        });
  return total;
}

SuperimposedWitness max_superimposed(const CliqueFamily& family, Index t,
                                     const SuperimposedLimits& limits) {
  check_t(family, t);
  std::optional<std::vector<Index>> best;
  VertexBits best_bits;
  Index best_size = 0;
  for_each_color_subset(family, t, limits.max_subsets,
                        [&](const std::vector<Index>& chosen, const VertexBits& acc) {
                          const Index size = count_bits(acc);
                          if (!best || size > best_size) {
                            best = chosen;
                            best_bits = acc;
                            best_size = size;
                          }
                        });
  SuperimposedWitness out;
  for (Index i : *best) out.colors.push_back(family.cliques()[i].color);
  for (Index v = 0; v < family.n_vertices(); ++v) {
    if ((best_bits[v / 64] >> (v % 64)) & 1) out.vertices.push_back(v);
  }
  return out;
}

}  // namespace bipramsey
