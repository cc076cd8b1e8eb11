#include <gtest/gtest.h>

#include "mcnum/coloring.hpp"
#include "mcnum/errors.hpp"
#include "mcnum/graph6.hpp"
#include "mcnum/solver.hpp"
#include "mcnum/structure.hpp"
#include "named_graphs.hpp"

namespace mcnum {
namespace {

using namespace mcnum::testing;

TEST(VerifyColoring, SpecExamples) {
  const Graph p = path_graph(3);
  const auto one = verify_coloring(p, MCColoring{3, {{{0, 1}, {1, 2}}}});
  EXPECT_TRUE(one.valid);
  EXPECT_EQ(one.colors_used, 1);
  EXPECT_EQ(one.waste, 1);
  EXPECT_FALSE(one.failing_pair.has_value());
  EXPECT_FALSE(one.failing_reason.has_value());

  const auto two = verify_coloring(p, MCColoring{3, {{{0, 1}}, {{1, 2}}}});
  EXPECT_FALSE(two.valid);
  EXPECT_EQ(two.failing_pair, std::make_pair(0, 2));
  EXPECT_EQ(two.failing_reason, FailureReason::UncoveredPair);

  const auto c4 = verify_coloring(cycle_graph(4), MCColoring{4, {{{0, 1}, {1, 2}, {2, 3}}, {{0, 3}}}});
  EXPECT_TRUE(c4.valid);
  EXPECT_EQ(c4.colors_used, 2);
  EXPECT_EQ(c4.waste, 2);
}

TEST(VerifyColoring, PartitionAndConnectivityFailures) {
  const Graph p = path_graph(3);
  const auto missing = verify_coloring(p, MCColoring{3, {{{0, 1}}}});
  EXPECT_EQ(missing.failing_reason, FailureReason::NotAPartition);
  const auto twice = verify_coloring(p, MCColoring{3, {{{0, 1}, {1, 2}}, {{0, 1}}}});
  EXPECT_EQ(twice.failing_reason, FailureReason::NotAPartition);
  EXPECT_EQ(twice.failing_class, 1);
  const auto non_edge = verify_coloring(p, MCColoring{3, {{{0, 1}, {1, 2}}, {{0, 2}}}});
  EXPECT_EQ(non_edge.failing_reason, FailureReason::NotAPartition);
  const Graph g = path_graph(4);
  const auto split = verify_coloring(g, MCColoring{4, {{{0, 1}, {2, 3}}, {{1, 2}}}});
  EXPECT_EQ(split.failing_reason, FailureReason::ClassNotConnected);
  EXPECT_EQ(split.failing_class, 0);
  EXPECT_THROW(verify_coloring(p, MCColoring{4, {}}), PreconditionError);
  EXPECT_EQ(to_string(FailureReason::UncoveredPair), "uncovered-pair");
}

TEST(SpanningTreeColoring, SpecExamples) {
  EXPECT_EQ(spanning_tree_coloring(cycle_graph(4)).colors_used(), 2);
  EXPECT_EQ(spanning_tree_coloring(complete_graph(4)).colors_used(), 4);
  EXPECT_EQ(spanning_tree_coloring(path_graph(3)).colors_used(), 1);
  EXPECT_THROW(spanning_tree_coloring(disjoint_union(path_graph(2), Graph(1))), PreconditionError);
  EXPECT_THROW(spanning_tree_coloring(Graph(1)), PreconditionError);
  for (const Graph& g : {cycle_graph(4), complete_graph(4), path_graph(3), petersen()}) {
    const auto c = spanning_tree_coloring(g);
    const auto r = verify_coloring(g, c);
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.colors_used, g.edge_count() - g.order() + 2);
  }
}

TEST(SpanningTreeColoring, TreeIsBfsFromZero) {
  const auto c = spanning_tree_coloring(cycle_graph(5));
  EXPECT_EQ(c.classes.front(), (std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {3, 4}}));
}

TEST(MCExact, SpecExamples) {
  EXPECT_EQ(mc_exact(path_graph(3)).mc, 1);
  EXPECT_EQ(mc_exact(complete_graph(4)).mc, 6);
  EXPECT_EQ(mc_exact(cycle_graph(4)).mc, 2);
  EXPECT_EQ(mc_exact(octahedron()).mc, 9);
}

TEST(MCExact, SmallConventions) {
  EXPECT_EQ(mc_exact(Graph(1)).mc, 0);
  EXPECT_EQ(mc_exact(complete_graph(2)).mc, 1);
  EXPECT_THROW(mc_exact(disjoint_union(path_graph(2), Graph(1))), PreconditionError);
  EXPECT_THROW(mc_exact(Graph(0)), PreconditionError);
}

TEST(MCExact, NamedValues) {
  EXPECT_EQ(mc_exact(cycle_graph(5)).mc, 2);
  EXPECT_EQ(mc_exact(fan4()).mc, 4);
  EXPECT_EQ(mc_exact(wheel5()).mc, 6);
  EXPECT_EQ(mc_exact(k2_join_p3()).mc, 8);
  EXPECT_EQ(mc_exact(cube_q3()).mc, 6);
  EXPECT_EQ(mc_exact(k33()).mc, 5);
  EXPECT_EQ(mc_exact(petersen()).mc, 7);
}

TEST(MCExact, WitnessRealizesValue) {
  for (const Graph& g : {path_graph(3), cycle_graph(5), octahedron(), cube_q3(), petersen(), wheel5()}) {
    const auto r = mc_exact(g);
    const auto v = verify_coloring(g, r.witness);
    EXPECT_TRUE(v.valid);
    EXPECT_EQ(v.colors_used, r.mc);
  }
}

TEST(MCExact, BudgetExhaustionIsAnError) {
  EXPECT_THROW(mc_exact(petersen(), SearchOptions{3}), ResourceError);
  EXPECT_NO_THROW(mc_exact(complete_graph(5), SearchOptions{1}));
}

TEST(MCExactUnrestricted, SpecExamples) {
  EXPECT_EQ(mc_exact_unrestricted(cycle_graph(4)).mc, 2);
  EXPECT_EQ(mc_exact_unrestricted(cycle_graph(5)).mc, 2);
  EXPECT_EQ(mc_exact_unrestricted(complete_graph(4)).mc, 6);
  EXPECT_THROW(mc_exact_unrestricted(complete_graph(6)), ResourceError);
}

// Exhaustive count over all 15 partitions of C4's edges: only those with a
// class containing a 3-edge path or all four edges are valid, and none has
// more than two classes.
TEST(MCExactUnrestricted, C4PartitionCount) {
  const Graph g = cycle_graph(4);
  const auto edges = g.edges();
  int valid = 0;
  int best = 0;
  int partitions = 0;
  std::vector<int> label(4, 0);
  for (label[1] = 0; label[1] <= 1; ++label[1]) {
    for (label[2] = 0; label[2] <= std::max(label[0], label[1]) + 1; ++label[2]) {
      const int m2 = std::max({label[0], label[1], label[2]});
      for (label[3] = 0; label[3] <= m2 + 1; ++label[3]) {
        ++partitions;
        const int k = std::max(m2, label[3]) + 1;
        MCColoring c{4, std::vector<std::vector<Edge>>(static_cast<std::size_t>(k))};
        for (int i = 0; i < 4; ++i) c.classes[static_cast<std::size_t>(label[i])].push_back(edges[static_cast<std::size_t>(i)]);
        if (verify_coloring(g, c).valid) {
          ++valid;
          best = std::max(best, k);
        }
      }
    }
  }
  EXPECT_EQ(partitions, 15);
  EXPECT_EQ(valid, 5);
  EXPECT_EQ(best, 2);
}

}  // namespace
}  // namespace mcnum
