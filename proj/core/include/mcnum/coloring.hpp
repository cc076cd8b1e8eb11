#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mcnum/graph.hpp"

namespace mcnum {

/// An edge coloring stored as its color classes; class i is color i.
struct MCColoring {
  int n = 0;
  std::vector<std::vector<Edge>> classes;

  int colors_used() const { return static_cast<int>(classes.size()); }
  /// Sum over classes of (edge count - 1).
  int waste() const;
  bool is_trivial(std::size_t color) const { return classes[color].size() == 1; }

  friend bool operator==(const MCColoring&, const MCColoring&) = default;
};

enum class FailureReason { UncoveredPair, ClassNotConnected, NotAPartition };

std::string_view to_string(FailureReason reason);

struct VerificationReport {
  bool valid = false;
  int colors_used = 0;
  int waste = 0;
  std::optional<std::pair<int, int>> failing_pair;
  std::optional<FailureReason> failing_reason;
  /// Color index of the offending class, when one is to blame.
  std::optional<int> failing_class;
};

/// Checks, in order: classes partition E(g) (first offending class reported),
/// each class is connected, every vertex pair shares a class (first pair in
/// lexicographic order reported). Throws PreconditionError when c.n differs
/// from g.order().
VerificationReport verify_coloring(const Graph& g, const MCColoring& c);

/// One nontrivial class per vertex set of size >= 3 (a BFS spanning tree of
/// the induced subgraph from its least vertex, in the order given), every
/// remaining edge in its own class in lexicographic order. Sets must induce
/// connected subgraphs and pairwise share at most one vertex.
MCColoring coloring_from_trees(const Graph& g, const std::vector<VertexSet>& trees);

/// BFS spanning tree of g[within] rooted at its least vertex.
std::vector<Edge> spanning_tree(const Graph& g, VertexSet within);

}  // namespace mcnum
