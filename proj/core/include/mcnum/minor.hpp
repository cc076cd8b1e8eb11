#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mcnum/graph.hpp"

namespace mcnum {

enum class MinorTarget { K4, K5, K2_3, K3_3 };

std::string_view to_string(MinorTarget target);

/// Branch sets of a minor model, in target order: K4/K5 list the clique
/// vertices; K2_3/K3_3 list the small side first, then the other side.
struct MinorModel {
  MinorTarget target = MinorTarget::K4;
  std::vector<VertexSet> branch_sets;
};

/// Exhaustive branch-set search. Inside a connected component any minor model
/// can be grown until its branch sets partition the component, so the search
/// enumerates partitions of each component into connected blocks and tests
/// the quotient against the target. Leaves are stripped first (every target
/// has minimum degree >= 2).
std::optional<MinorModel> find_minor(const Graph& g, MinorTarget target);

inline bool has_minor(const Graph& g, MinorTarget target) {
  return find_minor(g, target).has_value();
}

/// Re-checks a model: disjoint nonempty connected branch sets whose required
/// pairs are joined by at least one edge.
bool is_minor_model(const Graph& g, const MinorModel& model);

}  // namespace mcnum
