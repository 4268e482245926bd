#include <gtest/gtest.h>

#include <random>

#include "aecc/coloring.hpp"
#include "aecc/corpus.hpp"
#include "test_util.hpp"

using namespace aecc;
using aecc::testing::colored;
using aecc::testing::forest_check;

TEST(Coloring, PaletteBounds) {
  EdgeColoring c(3, 2);
  EXPECT_FALSE(c.is_total());
  c.set(0, 3);
  EXPECT_THROW(c.set(1, 4), ColoringError);
  EXPECT_THROW(c.set(1, -1), ColoringError);
  EXPECT_THROW(EdgeColoring(0, 1), ColoringError);
  c.set(1, 1);
  EXPECT_TRUE(c.is_total());
  EXPECT_EQ(c.colors_used(), 2);
}

TEST(Coloring, CheckProper) {
  Graph c3 = named("K3");
  EXPECT_FALSE(check_proper(c3, colored(c3, 3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}})));
  auto v = check_proper(c3, colored(c3, 3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::Proper);
  EXPECT_EQ(v->cycle, (std::vector<Vertex>{1}));
  EXPECT_EQ(v->color_a, 1);
  Graph c4 = named("C4");
  EXPECT_FALSE(check_proper(c4, colored(c4, 2, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}})));
  EXPECT_THROW(check_proper(c4, EdgeColoring(2, 4)), ColoringError);
}

TEST(Coloring, BichromaticFourCycle) {
  Graph c4 = named("C4");
  auto bad = colored(c4, 3, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}});
  auto cyc = find_bichromatic_cycle(c4, bad);
  ASSERT_TRUE(cyc);
  EXPECT_EQ(cyc->color_a, 1);
  EXPECT_EQ(cyc->color_b, 2);
  EXPECT_EQ(cyc->cycle.size(), 4u);
  auto v = check_acyclic(c4, bad);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::Bichromatic);
  EXPECT_EQ(v->edges.size(), 4u);

  auto good = colored(c4, 3, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 3}});
  EXPECT_FALSE(find_bichromatic_cycle(c4, good));
  EXPECT_FALSE(check_acyclic(c4, good));
}

TEST(Coloring, ImproperInputToCycleFinderThrows) {
  Graph c3 = named("K3");
  EXPECT_THROW(find_bichromatic_cycle(c3, colored(c3, 2, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}})), ColoringError);
}

TEST(Coloring, EveryProperThreeColoringOfK4HasABichromaticCycle) {
  Graph k4 = named("K4");
  int proper = 0;
  std::vector<Color> col(6, 1);
  for (int code = 0; code < 729; ++code) {
    int x = code;
    for (int e = 0; e < 6; ++e, x /= 3) col[e] = 1 + x % 3;
    EdgeColoring c(3, col);
    if (check_proper(k4, c)) continue;
    ++proper;
    auto cyc = find_bichromatic_cycle(k4, c);
    ASSERT_TRUE(cyc);
    EXPECT_EQ(cyc->cycle.size(), 4u);
  }
  EXPECT_EQ(proper, 6);  // three perfect matchings, 3! assignments
}

TEST(Coloring, TreesAreAlwaysAcyclic) {
  Graph star = named("star5");
  std::vector<Color> col{1, 2, 3, 4, 5};
  EXPECT_FALSE(check_acyclic(star, EdgeColoring(5, col)));
  Graph p5 = named("P5");
  EXPECT_FALSE(check_acyclic(p5, EdgeColoring(2, std::vector<Color>{1, 2, 1, 2})));
}

TEST(Coloring, CycleWitnessReChecks) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    auto [g, c] = aecc::testing::random_colored_graph(rng, 7, 0.5, 4);
    auto cyc = find_bichromatic_cycle(g, c);
    EXPECT_EQ(cyc.has_value(), !forest_check(g, c));
    if (!cyc) continue;
    const auto& vs = cyc->cycle;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      int e = g.edge_index(vs[i], vs[(i + 1) % vs.size()]);
      ASSERT_GE(e, 0);
      EXPECT_TRUE(c[e] == cyc->color_a || c[e] == cyc->color_b);
    }
  }
}

TEST(Coloring, ColorSet) {
  Graph g(3, std::vector<EdgeId>{make_edge(0, 1)});
  EXPECT_TRUE(color_set(g, EdgeColoring(7, 1), 2).empty());
  Graph star = named("star3");
  auto c = EdgeColoring(7, 3);
  c.set(1, 7);
  EXPECT_EQ(color_set(star, c, 0), (std::set<Color>{7}));
  Graph k4 = named("K4");
  auto k4c = colored(k4, 3, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
  EXPECT_EQ(color_set(k4, k4c, 0), (std::set<Color>{1, 2, 3}));
}

TEST(Coloring, MaximalPath) {
  Graph p3 = named("P3");
  auto c = colored(p3, 2, {{0, 1, 1}, {1, 2, 2}});
  auto p = maximal_ab_path(p3, c, 0, 1, 2);
  EXPECT_EQ(p.vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(p.colors, (std::vector<Color>{1, 2}));
  EXPECT_THROW(maximal_ab_path(p3, c, 1, 1, 2), ColoringError);

  Graph g(4, std::vector<EdgeId>{make_edge(0, 1)});
  auto lone = maximal_ab_path(g, EdgeColoring(3, std::vector<Color>{1}), 3, 1, 2);
  EXPECT_TRUE(lone.empty());
  EXPECT_EQ(lone.vertices, (std::vector<Vertex>{3}));

  // C4 0-1-2-3 colored (1,2,1,3); 3 is on the color-3 edge 3-0 and the color-1 edge 2-3
  Graph c4 = named("C4");
  auto cc = colored(c4, 3, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 3}});
  auto q = maximal_ab_path(c4, cc, 3, 1, 2);
  EXPECT_EQ(q.vertices, (std::vector<Vertex>{3, 2, 1, 0}));
  EXPECT_LE(q.length(), 3);
}

TEST(Coloring, MaximalPathMatchesComponent) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    auto [g, c] = aecc::testing::random_colored_graph(rng, 7, 0.5, 4);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Color a = 1; a <= 4; ++a) {
        for (Color b = a + 1; b <= 4; ++b) {
          auto cu = color_set(g, c, u);
          if (cu.count(a) && cu.count(b)) continue;
          auto p = maximal_ab_path(g, c, u, a, b);
          std::set<Vertex> got(p.vertices.begin(), p.vertices.end());
          EXPECT_EQ(got, aecc::testing::ab_component(g, c, u, a, b));
          for (std::size_t i = 1; i < p.colors.size(); ++i) EXPECT_NE(p.colors[i], p.colors[i - 1]);
        }
      }
    }
  }
}

TEST(Coloring, ExistsPathMatchesComponent) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    auto [g, c] = aecc::testing::random_colored_graph(rng, 7, 0.5, 4);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (u == w) continue;
        for (Color a = 1; a <= 4; ++a) {
          for (Color b = a + 1; b <= 4; ++b) {
            bool expected = aecc::testing::ab_component(g, c, u, a, b).count(w) > 0;
            EXPECT_EQ(exists_ab_path(g, c, u, w, a, b), expected);
          }
        }
      }
    }
  }
}

TEST(Coloring, BSet) {
  Graph g(4, std::vector<EdgeId>{make_edge(0, 1), make_edge(2, 3)});
  EXPECT_TRUE(b_set(g, EdgeColoring(3, std::vector<Color>{1, 1}), 0, 3, 1).empty());
  Graph p3 = named("P3");
  EXPECT_EQ(b_set(p3, colored(p3, 4, {{0, 1, 1}, {1, 2, 2}}), 0, 2, 1), (std::set<Color>{2}));
  // K4 with matchings {01,23}=1, {02,13}=2, {03,12}=3: 0 and 1 are joined by
  // a (1,2)- and a (1,3)-path
  Graph k4 = named("K4");
  auto c = colored(k4, 3, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
  EXPECT_EQ(b_set(k4, c, 0, 1, 1), (std::set<Color>{2, 3}));
}

TEST(Coloring, KempeSwap) {
  Graph k2(2, std::vector<EdgeId>{make_edge(0, 1)});
  auto one = kempe_swap(k2, EdgeColoring(2, std::vector<Color>{1}), 0, 1, 2);
  EXPECT_EQ(one[0], 2);
  Graph p3 = named("P3");
  auto c = colored(p3, 4, {{0, 1, 1}, {1, 2, 2}});
  EXPECT_EQ(kempe_swap(p3, c, 0, 3, 4), c);

  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    auto [g, col] = aecc::testing::random_colored_graph(rng, 7, 0.5, 4);
    Vertex u = static_cast<Vertex>(rng() % static_cast<unsigned>(g.vertex_count()));
    auto once = kempe_swap(g, col, u, 1, 2);
    EXPECT_FALSE(check_proper(g, once));
    EXPECT_EQ(kempe_swap(g, once, u, 1, 2), col);
  }
}

TEST(Coloring, OnBichromaticCycleIsLocal) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 300; ++round) {
    auto [g, c] = aecc::testing::random_colored_graph(rng, 7, 0.6, 5);
    int e = static_cast<int>(rng() % static_cast<unsigned>(g.edge_count()));
    EdgeColoring without = c;
    without.set(e, kUncolored);
    if (find_bichromatic_cycle(g, without)) continue;
    EXPECT_EQ(on_bichromatic_cycle(g, c, e), find_bichromatic_cycle(g, c).has_value());
  }
}
