#include <random>

#include <gtest/gtest.h>

#include "mcnum/errors.hpp"
#include "mcnum/graph6.hpp"
#include "mcnum/minor.hpp"
#include "mcnum/structure.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"

namespace mcnum {
namespace {

using namespace mcnum::testing;

TEST(VertexConnectivity, SpecExamples) {
  EXPECT_EQ(vertex_connectivity(cycle_graph(4)), 2);
  EXPECT_EQ(vertex_connectivity(complete_graph(4)), 3);
  EXPECT_EQ(vertex_connectivity(star_graph(3)), 1);
  EXPECT_EQ(vertex_connectivity(octahedron()), 4);
  EXPECT_EQ(vertex_connectivity(disjoint_union(path_graph(2), Graph(1))), 0);
  EXPECT_EQ(vertex_connectivity(Graph(1)), 0);
  EXPECT_THROW(vertex_connectivity(Graph(0)), PreconditionError);
}

TEST(MinimumVertexCut, DisconnectsAndIsAbsentForComplete) {
  EXPECT_FALSE(minimum_vertex_cut(complete_graph(5)).has_value());
  const auto cut = minimum_vertex_cut(octahedron());
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->order, 4);
  EXPECT_FALSE(octahedron().is_connected(octahedron().vertices() - cut->vertices));
}

TEST(CutVertices, SpecExamples) {
  EXPECT_EQ(cut_vertices(path_graph(3)), VertexSet{1});
  EXPECT_TRUE(cut_vertices(cycle_graph(4)).empty());
  EXPECT_TRUE(cut_vertices(fan4()).empty());
  EXPECT_THROW(cut_vertices(Graph(2)), PreconditionError);
}

TEST(Planarity, SpecExamples) {
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_FALSE(is_planar(parse_graph6("D~{")));
  EXPECT_FALSE(is_planar(k33()));
  EXPECT_TRUE(is_planar(octahedron()));
  EXPECT_TRUE(is_planar(icosahedron()));
  EXPECT_FALSE(is_planar(petersen()));
  EXPECT_TRUE(is_planar(cube_q3()));
}

TEST(Outerplanarity, SpecExamples) {
  EXPECT_TRUE(is_outerplanar(cycle_graph(4)));
  EXPECT_FALSE(is_outerplanar(complete_graph(4)));
  EXPECT_FALSE(is_outerplanar(complete_multipartite({2, 3})));
  EXPECT_TRUE(is_outerplanar(fan4()));
}

TEST(ChromaticNumber, SpecExamples) {
  EXPECT_EQ(chromatic_number(complete_graph(4)), 4);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(cube_q3()), 2);
  EXPECT_EQ(chromatic_number(petersen()), 3);
  EXPECT_EQ(chromatic_number(icosahedron()), 4);
  EXPECT_EQ(chromatic_number(complete_multipartite({3, 3, 3})), 3);
}

TEST(Diameter, SpecExamples) {
  EXPECT_EQ(diameter(complete_graph(4)), 1);
  EXPECT_EQ(diameter(cycle_graph(5)), 2);
  EXPECT_EQ(diameter(path_graph(4)), 3);
  EXPECT_THROW(diameter(Graph(2)), PreconditionError);
}

TEST(Minor, SpecExamples) {
  EXPECT_TRUE(has_minor(wheel5(), MinorTarget::K4));
  EXPECT_FALSE(has_minor(cycle_graph(4), MinorTarget::K4));
  EXPECT_TRUE(has_minor(complete_graph(5), MinorTarget::K4));
  EXPECT_FALSE(has_minor(complete_multipartite({2, 3}), MinorTarget::K4));
  EXPECT_TRUE(has_minor(complete_multipartite({2, 3}), MinorTarget::K2_3));
  EXPECT_TRUE(has_minor(petersen(), MinorTarget::K5));
  EXPECT_TRUE(has_minor(petersen(), MinorTarget::K3_3));
  EXPECT_FALSE(has_minor(icosahedron(), MinorTarget::K5));
}

TEST(Minor, ModelsValidate) {
  for (MinorTarget t : {MinorTarget::K4, MinorTarget::K5, MinorTarget::K2_3, MinorTarget::K3_3}) {
    const auto model = find_minor(petersen(), t);
    ASSERT_TRUE(model.has_value()) << to_string(t);
    EXPECT_TRUE(is_minor_model(petersen(), *model)) << to_string(t);
  }
}

// Fixture graphs n <= 7 against exhaustive and Boost references.
class StructureOnFixtures : public ::testing::TestWithParam<int> {};

TEST_P(StructureOnFixtures, AgreesWithReferences) {
  for (const auto& line : fixture_lines(GetParam())) {
    const Graph g = parse_graph6(line);
    SCOPED_TRACE(line);
    const int kappa = vertex_connectivity(g);
    EXPECT_EQ(kappa, brute_connectivity(g));
    if (g.order() >= 2) {
      EXPECT_LE(kappa, g.min_degree());
    }
    if (!g.is_complete()) {
      const auto cut = minimum_vertex_cut(g);
      ASSERT_TRUE(cut.has_value());
      EXPECT_EQ(cut->order, kappa);
      EXPECT_EQ(cut->vertices.size(), kappa);
      EXPECT_FALSE(g.is_connected(g.vertices() - cut->vertices));
    }
    VertexSet expected_cuts;
    for (int v = 0; v < g.order(); ++v) {
      if (!brute_connected(g, all_vertices(g) & ~(Mask{1} << v))) expected_cuts.insert(v);
    }
    EXPECT_EQ(cut_vertices(g), expected_cuts);
    EXPECT_EQ(has_cut_vertex(g, g.vertices()), brute_has_cut_vertex(g, all_vertices(g)));

    const bool planar = is_planar(g);
    EXPECT_EQ(planar, boost_planar(g));
    EXPECT_EQ(planar, !has_minor(g, MinorTarget::K5) && !has_minor(g, MinorTarget::K3_3));
    if (planar && g.order() >= 3) EXPECT_LE(g.edge_count(), 3 * g.order() - 6);
    const bool outer = is_outerplanar(g);
    EXPECT_EQ(outer, boost_outerplanar(g));
    EXPECT_EQ(outer, !has_minor(g, MinorTarget::K4) && !has_minor(g, MinorTarget::K2_3));
    if (outer) EXPECT_TRUE(planar);

    const int chi = chromatic_number(g);
    EXPECT_EQ(chi, brute_chromatic(g));
    EXPECT_LE(chi, g.max_degree() + 1);
    EXPECT_EQ(diameter(g), brute_diameter(g));
    EXPECT_EQ(is_triangle_free(g), brute_triangle_free(g));
  }
}

INSTANTIATE_TEST_SUITE_P(ByOrder, StructureOnFixtures, ::testing::Range(1, 8));

TEST(StructureProperties, RandomLargerGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 5);
    std::bernoulli_distribution coin(0.25 + 0.5 * (trial % 3) / 2.0);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) b.add_edge(u, v);
      }
    }
    const Graph g = b.build();
    SCOPED_TRACE(emit_graph6(g));
    EXPECT_EQ(is_planar(g), boost_planar(g));
    EXPECT_EQ(is_outerplanar(g), boost_outerplanar(g));
    if (n <= 9) EXPECT_EQ(vertex_connectivity(g), brute_connectivity(g));
    for (MinorTarget t : {MinorTarget::K4, MinorTarget::K2_3}) {
      if (auto model = find_minor(g, t)) EXPECT_TRUE(is_minor_model(g, *model));
    }
  }
}

TEST(StructureProperties, MinorMonotoneUnderEdgeAddition) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    GraphBuilder b(n);
    std::bernoulli_distribution coin(0.35);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) b.add_edge(u, v);
      }
    }
    const Graph g = b.build();
    GraphBuilder bigger = b;
    bigger.add_edge(static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % (n - 2)));
    const Graph h = bigger.build();
    for (MinorTarget t : {MinorTarget::K4, MinorTarget::K5, MinorTarget::K2_3, MinorTarget::K3_3}) {
      if (has_minor(g, t)) EXPECT_TRUE(has_minor(h, t));
    }
  }
}

}  // namespace
}  // namespace mcnum
