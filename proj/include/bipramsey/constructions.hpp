#pragma once

#include <cstdint>

#include "bipramsey/core.hpp"
#include "bipramsey/detect.hpp"

namespace bipramsey {

// Cell (i, j) gets color i mod m. Shuffle-preserved m-coloring with no
// monochromatic K_{p,p} for p > ceil(n/m).
ColorMatrix construct_mod_m(Index n, Index m);

// The 4x4 base matrix with color ids 1..8, kept verbatim.
ColorMatrix recursive_base_matrix();

// 2^k x 2^k matrix: M_{l+1} = [M_l, M_l + mu; M_l + 2mu, M_l + 3mu] with
// mu = max entry of M_l, starting from the base matrix at l = 2. The result
// is shuffle-preserved, 3*2^(k-2)-local, and free of monochromatic K_{2,2}.
// Throws MalformedInput for k < 2 and InstanceTooLarge when the side would
// exceed 2^12.
ColorMatrix construct_recursive_matrix(Index k);

// Part 0 against every other part: vertex i of part 0 carries color i mod m on
// all of its edges. Every other pair of parts: m superimposed full rectangles
// with colors 0..m-1, so the whole graph uses m colors.
KPartiteCover construct_kpartite_avoiding(Index n, Index m, Index k);

// Randomized greedy cover of the n x n grid: coverage-complete, local width
// <= m, and every rectangle has min side <= max_min_side. Deterministic per
// seed. Throws GenerationFailed when the bounded retries run out.
RectangleCover random_cover(Index n, Index m, Index max_min_side, std::uint64_t seed);

// m cliques with colors 0..m-1, each a random nonempty subset of n vertices.
CliqueFamily random_clique_family(Index n_vertices, Index m, std::uint64_t seed);

// A random shuffle-preserved coloring of the complete k-partite multigraph
// with parts of size n and at most two colors (0 and 1).
KPartiteCover random_kpartite_two_coloring(Index n, Index k, std::uint64_t seed);

}  // namespace bipramsey
