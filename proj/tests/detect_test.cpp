#include "bipramsey/detect.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bipramsey/constructions.hpp"
#include "support.hpp"

namespace bipramsey {
namespace {

using testing::kpartite_witness_holds;
using testing::witness_holds;

RectangleCover full_rect(Index n) {
  IndexSet all;
  for (Index i = 0; i < n; ++i) all.push_back(i);
  return RectangleCover(n, n, {Rectangle{ColorId(0), all, all}});
}

TEST(FindMonoBicliqueFast, BaseMatrixHasNoKTwoTwo) {
  EXPECT_FALSE(find_mono_biclique_fast(matrix_to_rectangles(recursive_base_matrix()), 2));
}

TEST(FindMonoBicliqueFast, ModMWitness) {
  const ColorMatrix m = construct_mod_m(5, 2);
  const auto w = find_mono_biclique_fast(matrix_to_rectangles(m), 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(witness_holds(m, *w, 3));
  EXPECT_EQ(w->color, ColorId(0));
  EXPECT_EQ(w->rows(), (IndexSet{0, 2, 4}));
  EXPECT_EQ(w->cols(), (IndexSet{0, 1, 2}));
}

TEST(FindMonoBicliqueFast, FullRectangle) {
  const auto w = find_mono_biclique_fast(full_rect(5), 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rows(), (IndexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(w->cols(), (IndexSet{0, 1, 2, 3, 4}));
  EXPECT_FALSE(find_mono_biclique_fast(full_rect(5), 6));
}

TEST(FindMonoBicliqueBrute, Examples) {
  EXPECT_FALSE(find_mono_biclique_brute(recursive_base_matrix(), 2));
  EXPECT_FALSE(find_mono_biclique_brute(construct_recursive_matrix(3), 2));

  const auto crossed = ColorMatrix::from_rows({{1, 2}, {2, 1}});
  const auto w = find_mono_biclique_brute(crossed, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (Witness{ColorId(1), {{0}, {0}}}));
}

TEST(FindMonoBicliqueBrute, Guards) {
  EXPECT_THROW(find_mono_biclique_brute(ColorMatrix(25, 25), 2), InstanceTooLarge);
  EXPECT_THROW(find_mono_biclique_brute(ColorMatrix(10, 10), 7), InstanceTooLarge);
  EXPECT_NO_THROW(find_mono_biclique_brute(ColorMatrix(10, 10), 7, BruteLimits{24, 10}));
  EXPECT_FALSE(find_mono_biclique_brute(ColorMatrix(3, 3), 4));
}

TEST(FindMonoBicliqueBrute, AgreesWithNaiveEnumerationOnArbitraryMatrices) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Index> side(1, 5);
  std::uniform_int_distribution<std::uint32_t> color(0, 2);
  for (int trial = 0; trial < 400; ++trial) {
    ColorMatrix m(side(rng), side(rng));
    for (Index r = 0; r < m.n_rows(); ++r) {
      for (Index c = 0; c < m.n_cols(); ++c) m.set(r, c, ColorId(color(rng)));
    }
    for (Index p = 1; p <= 5; ++p) {
      const bool naive = testing::naive_biclique_exists(
          m.n_rows(), m.n_cols(), testing::colors_of(m), p,
          [&](Index r, Index c, ColorId col) { return m(r, c) == col; });
      const auto w = find_mono_biclique_brute(m, p);
      ASSERT_EQ(w.has_value(), naive) << "trial " << trial << " p " << p;
      if (w) EXPECT_TRUE(witness_holds(m, *w, p));
    }
  }
}

TEST(OracleAgreement, FastMatchesBruteOnRandomCovers) {
  int covers = 0;
  for (std::uint64_t seed = 0; covers < 1000; ++seed) {
    const Index n = 1 + seed % 6;
    const Index m = 1 + (seed / 6) % n;
    const Index thin = 1 + (seed / 36) % n;
    std::optional<RectangleCover> cover;
    try {
      cover = random_cover(n, m, thin, seed);
    } catch (const GenerationFailed&) {
      continue;
    }
    ++covers;
    const BipartiteMultigraph g = to_multigraph(*cover);
    for (Index p = 1; p <= n; ++p) {
      const auto fast = find_mono_biclique_fast(*cover, p);
      const auto brute = find_mono_biclique_brute(g, p);
      ASSERT_EQ(fast.has_value(), brute.has_value()) << "seed " << seed << " p " << p;
      if (fast) EXPECT_TRUE(witness_holds(*cover, *fast, p));
      if (brute) EXPECT_TRUE(witness_holds(*cover, *brute, p));
    }
  }
}

TEST(GuaranteedRegime, GuaranteedRegimeAlwaysHasWitness) {
  int exercised = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const Index n = 2 + seed % 7;
    const Index m = 1 + (seed / 7) % 3;
    const Index thin = 1 + (seed / 21) % n;
    std::optional<RectangleCover> cover;
    try {
      cover = random_cover(n, m, thin, seed);
    } catch (const GenerationFailed&) {
      continue;
    }
    const Index width = local_profile(*cover).local_width;
    for (Index p = 1; p <= n; ++p) {
      if (2 * (p - 1) * (width - 1) >= n) continue;
      ++exercised;
      const auto w = find_mono_biclique_fast(*cover, p);
      ASSERT_TRUE(w.has_value()) << "seed " << seed << " p " << p;
      EXPECT_TRUE(witness_holds(*cover, *w, p));
    }
  }
  EXPECT_GT(exercised, 1000);
}

TEST(FindMonoKPartite, SingleColorTripartite) {
  KPartiteCover kp(3, 3);
  const IndexSet all{0, 1, 2};
  for (Index a = 0; a < 3; ++a) {
    for (Index b = a + 1; b < 3; ++b) {
      kp.set_pair(a, b, RectangleCover(3, 3, {Rectangle{ColorId(0), all, all}}));
    }
  }
  const auto w = find_mono_kpartite(kp, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (Witness{ColorId(0), {all, all, all}}));
}

TEST(FindMonoKPartite, GuaranteedOnRandomTripartiteFive) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const KPartiteCover kp = random_kpartite_two_coloring(5, 3, seed);
    const auto w = find_mono_kpartite(kp, 3);
    ASSERT_TRUE(w.has_value()) << "seed " << seed;
    EXPECT_TRUE(kpartite_witness_holds(kp, *w, 3));
  }
}

TEST(FindMonoKPartite, AvoidingConstructionHasNone) {
  const KPartiteCover kp = construct_kpartite_avoiding(4, 2, 3);
  EXPECT_FALSE(find_mono_kpartite(kp, 3).has_value());
  EXPECT_FALSE(find_mono_kpartite_brute(kp, 3).has_value());
}

TEST(FindMonoKPartite, Errors) {
  EXPECT_THROW(find_mono_kpartite(construct_kpartite_avoiding(4, 3, 3), 2), NotTwoColored);
  KPartiteCover broken = construct_kpartite_avoiding(4, 2, 3);
  const IndexSet all{0, 1, 2, 3};
  broken.set_pair(1, 2, RectangleCover(4, 4, {Rectangle{ColorId(0), {0, 1}, all},
                                               Rectangle{ColorId(1), all, all}}));
  EXPECT_THROW(find_mono_kpartite(broken, 2), NotShufflePreserved);
}

TEST(FindMonoKPartite, InductionMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const Index k = 2 + seed % 3;
    const Index n = 1 + (seed / 3) % 6;
    const KPartiteCover kp = random_kpartite_two_coloring(n, k, seed);
    for (Index p = 1; p <= n; ++p) {
      const auto induced = find_mono_kpartite(kp, p);
      const auto brute = find_mono_kpartite_brute(kp, p);
      if (2 * (p - 1) < n) {
        ASSERT_TRUE(induced.has_value()) << "seed " << seed << " p " << p;
      }
      if (induced) {
        EXPECT_TRUE(kpartite_witness_holds(kp, *induced, p));
        EXPECT_TRUE(brute.has_value());
      }
      if (brute) EXPECT_TRUE(kpartite_witness_holds(kp, *brute, p));
    }
  }
}

// ---------------------------------------------------------------------------
// Clique families

std::uint64_t naive_intersection_sum(const CliqueFamily& f, Index t) {
  std::uint64_t total = 0;
  testing::for_each_subset(f.color_count(), t, [&](const IndexSet& chosen) {
    for (Index v = 0; v < f.n_vertices(); ++v) {
      bool in_all = true;
      for (Index i : chosen) {
        const auto& vs = f.cliques()[i].vertices;
        in_all = in_all && std::find(vs.begin(), vs.end(), v) != vs.end();
      }
      total += in_all ? 1 : 0;
    }
  });
  return total;
}

std::uint64_t pascal(Index n, Index k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Binomial, ValuesAndOverflow) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(66, 33), 7219428434016265740ULL);
  EXPECT_THROW(binomial(68, 34), std::overflow_error);
}

TEST(CliqueFamily, HistogramInvariants) {
  const CliqueFamily f = random_clique_family(14, 6, 17);
  const auto d = f.degree_histogram();
  ASSERT_EQ(d.size(), 7u);
  Index vertices = 0, incidences = 0, sizes = 0;
  for (Index i = 0; i < d.size(); ++i) {
    vertices += d[i];
    incidences += i * d[i];
  }
  for (const auto& c : f.cliques()) sizes += c.vertices.size();
  EXPECT_EQ(vertices, 14u);
  EXPECT_EQ(incidences, sizes);
}

TEST(CliqueFamily, RejectsMalformed) {
  EXPECT_THROW(CliqueFamily(3, {Clique{ColorId(0), {}}}), MalformedInput);
  EXPECT_THROW(CliqueFamily(3, {Clique{ColorId(0), {3}}}), MalformedInput);
  EXPECT_THROW(CliqueFamily(3, {Clique{ColorId(0), {0}}, Clique{ColorId(0), {1}}}),
               MalformedInput);
}

TEST(SuperimposedBound, Examples) {
  const CliqueFamily single(5, {Clique{ColorId(0), {0, 1, 2, 3, 4}}});
  EXPECT_EQ(superimposed_bound(single, 1), 5u);

  const CliqueFamily disjoint(6, {Clique{ColorId(0), {0, 1, 2}}, Clique{ColorId(1), {3, 4, 5}}});
  EXPECT_EQ(superimposed_bound(disjoint, 1), 3u);
  EXPECT_EQ(max_superimposed(disjoint, 1).vertices.size(), 3u);

  const CliqueFamily nested(4, {Clique{ColorId(0), {0, 1, 2, 3}}, Clique{ColorId(1), {0, 1, 2, 3}},
                                Clique{ColorId(2), {0, 1, 2, 3}}});
  EXPECT_EQ(nested.degree_histogram()[3], 4u);
  EXPECT_EQ(superimposed_bound(nested, 2), 4u);
  EXPECT_THROW(superimposed_bound(nested, 4), MalformedInput);
  EXPECT_THROW(superimposed_bound(nested, 0), MalformedInput);
}

TEST(MaxSuperimposed, Examples) {
  const CliqueFamily single(5, {Clique{ColorId(2), {1, 3}}});
  const auto w = max_superimposed(single, 1);
  EXPECT_EQ(w.colors, (std::vector<ColorId>{ColorId(2)}));
  EXPECT_EQ(w.vertices, (IndexSet{1, 3}));

  const CliqueFamily nested(4, {Clique{ColorId(0), {0, 1, 2, 3}}, Clique{ColorId(1), {0, 1, 2, 3}},
                                Clique{ColorId(2), {0, 1, 2, 3}}});
  const auto w2 = max_superimposed(nested, 2);
  // All intersections tie; the lexicographically smallest color set wins.
  EXPECT_EQ(w2.colors, (std::vector<ColorId>{ColorId(0), ColorId(1)}));
  EXPECT_EQ(w2.vertices, (IndexSet{0, 1, 2, 3}));
}

TEST(MaxSuperimposed, Guard) {
  std::vector<Clique> cliques;
  for (std::uint32_t c = 0; c < 30; ++c) cliques.push_back(Clique{ColorId(c), {0}});
  const CliqueFamily f(2, cliques);
  EXPECT_THROW(max_superimposed(f, 15), TooManySubsets);
}

TEST(SuperimposedProperty, BoundAndDoubleCountingOnRandomFamilies) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Index n = 1 + seed % 14;
    const Index m = 1 + (seed / 14) % 6;
    const CliqueFamily f = random_clique_family(n, m, seed);
    const auto d = f.degree_histogram();
    for (Index t = 1; t <= m; ++t) {
      std::uint64_t weighted = 0;
      for (Index i = t; i <= m; ++i) weighted += d[i] * pascal(i, t);
      EXPECT_EQ(naive_intersection_sum(f, t), weighted);
      EXPECT_EQ(intersection_sum(f, t), weighted);
      const auto best = max_superimposed(f, t);
      EXPECT_GE(best.vertices.size(), superimposed_bound(f, t));
      EXPECT_EQ(best.colors.size(), t);
      for (Index v : best.vertices) {
        for (ColorId c : best.colors) {
          const auto& vs = f.cliques()[c.value].vertices;
          EXPECT_NE(std::find(vs.begin(), vs.end(), v), vs.end());
        }
      }
    }
  }
}

}  // namespace
}  // namespace bipramsey
