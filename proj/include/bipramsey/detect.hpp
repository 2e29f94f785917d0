#pragma once

// Monochromatic complete-subgraph detection.
//
// The fast path reads rectangles directly: in a shuffle-preserved coloring a
// monochromatic K_{p,p} exists iff some color has |rows(c)| >= p and
// |cols(c)| >= p. The brute-force path makes no such assumption and serves as
// an independent oracle.

#include <cstdint>
#include <optional>
#include <vector>

#include "bipramsey/core.hpp"

namespace bipramsey {

// Smallest-color rectangle with both sides >= p, truncated to its lowest p
// rows and p columns.
std::optional<Witness> find_mono_biclique_fast(const RectangleCover& cover, Index p);

struct BruteLimits {
  Index max_side = 24;
  Index max_p = 6;
};

// Exhaustive search for a single-color K_{p,p}: per color, enumerate
// p-subsets of candidate rows and intersect their column masks. Returns the
// first hit in (color, row subset) lexicographic order with the lowest p
// common columns. p larger than a side yields nullopt. Throws
// InstanceTooLarge beyond `limits`.
std::optional<Witness> find_mono_biclique_brute(const BipartiteMultigraph& graph, Index p,
                                                const BruteLimits& limits = {});
std::optional<Witness> find_mono_biclique_brute(const ColorMatrix& matrix, Index p,
                                                const BruteLimits& limits = {});

// Monochromatic complete p x ... x p k-partite subgraph of a shuffle-preserved
// coloring with at most two colors, following the inductive pigeonhole
// argument: solve every pair, or every (k-1)-part subproblem, until two
// answers share a color, then read the merged witness off the touched sets.
// Throws NotTwoColored and NotShufflePreserved on bad input.
std::optional<Witness> find_mono_kpartite(const KPartiteCover& cover, Index p);

// Exhaustive k-partite search on explicit edges; no shuffle assumption.
std::optional<Witness> find_mono_kpartite_brute(const KPartiteCover& cover, Index p,
                                                const BruteLimits& limits = {});

struct Clique {
  ColorId color;
  IndexSet vertices;

  bool operator==(const Clique&) const = default;
};

// Shuffle-preserved coloring of a general multigraph: the edges of each color
// form a clique on that color's vertex set.
class CliqueFamily {
 public:
  // Cliques are stored sorted by color. Throws MalformedInput on empty or
  // out-of-range vertex sets and repeated colors.
  CliqueFamily(Index n_vertices, std::vector<Clique> cliques);

  Index n_vertices() const { return n_vertices_; }
  const std::vector<Clique>& cliques() const { return cliques_; }
  Index color_count() const { return cliques_.size(); }

  // d[i] = number of vertices lying in exactly i cliques, i = 0..color_count.
  std::vector<Index> degree_histogram() const;

 private:
  Index n_vertices_;
  std::vector<Clique> cliques_;
};

struct SuperimposedWitness {
  std::vector<ColorId> colors;
  IndexSet vertices;
};

// Binomial coefficient by Pascal's rule; throws std::overflow_error.
std::uint64_t binomial(Index n, Index k);

// ceil( sum_{i=t..m} d_i * C(i,t) / C(m,t) ), exact integer arithmetic.
std::uint64_t superimposed_bound(const CliqueFamily& family, Index t);

// Sum over all t-subsets of colors of the size of the intersection of their
// cliques. Equals sum_{i>=t} d_i * C(i,t) by double counting.
std::uint64_t intersection_sum(const CliqueFamily& family, Index t);

struct SuperimposedLimits {
  std::uint64_t max_subsets = 1'000'000;
};

// Largest intersection over all t-subsets of colors; ties go to the
// lexicographically smallest color set. Throws TooManySubsets.
SuperimposedWitness max_superimposed(const CliqueFamily& family, Index t,
                                     const SuperimposedLimits& limits = {});

}  // namespace bipramsey
