#pragma once

#include <cstdint>

#include "mcnum/coloring.hpp"
#include "mcnum/graph.hpp"

namespace mcnum {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct ExactResult {
  int mc = 0;
  MCColoring witness;
  std::uint64_t nodes_explored = 0;
};

/// Colors a BFS spanning tree from vertex 0 with one color and every other
/// edge with its own color: m - n + 2 colors. Throws PreconditionError unless
/// g is connected with n >= 2.
MCColoring spanning_tree_coloring(const Graph& g);

/// mc(G) by branch and bound over simple tree systems.
///
/// A tree system is a family of vertex sets, each of size >= 3 and inducing a
/// connected subgraph, pairwise sharing at most one vertex, such that every
/// nonadjacent pair lies inside one set. A spanning tree of each set gives a
/// nontrivial color class and every other edge stays trivial, so a system of
/// total waste w = sum(|S| - 2) realises m - w colors; mc(G) is m minus the
/// least waste.
///
/// The search always branches on the lexicographically least uncovered
/// nonadjacent pair. Sets are final once chosen, so the set covering that pair
/// is the only decision at each node: candidates are tried by increasing size,
/// then increasing bitmask. A node is pruned when its waste plus the lower
/// bound max_x |uncovered partners of x| reaches the incumbent, which starts
/// at the spanning tree's n - 2.
///
/// K1 gives 0 and K2 gives 1. Throws PreconditionError for disconnected input
/// and ResourceError when the node budget runs out.
ExactResult mc_exact(const Graph& g, const SearchOptions& opts = {});

/// Independent oracle: the largest c such that some partition of E(G) into c
/// classes passes verify_coloring, trying c = m, m-1, ... in turn. No tree or
/// simplicity assumption. Throws ResourceError when m > 12 and
/// PreconditionError for disconnected input.
ExactResult mc_exact_unrestricted(const Graph& g);

}  // namespace mcnum
