#include "mcnum/coloring.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mcnum/errors.hpp"

namespace mcnum {

int MCColoring::waste() const {
  int w = 0;
  for (const auto& cls : classes) w += std::max<int>(0, static_cast<int>(cls.size()) - 1);
  return w;
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::UncoveredPair:
      return "uncovered-pair";
    case FailureReason::ClassNotConnected:
      return "class-not-connected";
    case FailureReason::NotAPartition:
      return "not-a-partition";
  }
  return "?";
}

VerificationReport verify_coloring(const Graph& g, const MCColoring& c) {
  if (c.n != g.order()) {
    throw PreconditionError("coloring is for n=" + std::to_string(c.n) + " but the graph has n=" +
                            std::to_string(g.order()));
  }
  const int n = g.order();
  VerificationReport r;
  r.colors_used = c.colors_used();
  r.waste = c.waste();
  auto fail = [&](FailureReason why, std::optional<int> cls) {
    r.valid = false;
    r.failing_reason = why;
    r.failing_class = cls;
    return r;
  };

  std::array<VertexSet, kMaxOrder> claimed{};
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const int color = static_cast<int>(i);
    if (c.classes[i].empty()) return fail(FailureReason::NotAPartition, color);
    for (const Edge& e : c.classes[i]) {
      if (e.u < 0 || e.v >= n || e.u >= e.v || !g.adjacent(e.u, e.v)) {
        return fail(FailureReason::NotAPartition, color);
      }
      VertexSet& row = claimed[static_cast<std::size_t>(e.u)];
      if (row.contains(e.v)) return fail(FailureReason::NotAPartition, color);
      row.insert(e.v);
    }
  }
  for (int u = 0; u < n; ++u) {
    const VertexSet missing = (g.neighbors(u) - VertexSet::range(u + 1)) - claimed[static_cast<std::size_t>(u)];
    if (!missing.empty()) {
      r.failing_pair = std::pair{u, missing.front()};
      return fail(FailureReason::NotAPartition, std::nullopt);
    }
  }

  // Each class is connected, so a pair is joined by a monochromatic path iff
  // both endpoints are touched by one class.
  std::vector<VertexSet> touched(c.classes.size());
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& cls = c.classes[i];
    for (const Edge& e : cls) {
      touched[i].insert(e.u);
      touched[i].insert(e.v);
    }
    VertexSet grown = VertexSet{cls.front().u, cls.front().v};
    for (bool changed = true; changed;) {
      changed = false;
      for (const Edge& e : cls) {
        if (grown.contains(e.u) != grown.contains(e.v)) {
          grown.insert(e.u);
          grown.insert(e.v);
          changed = true;
        }
      }
    }
    if (grown != touched[i]) return fail(FailureReason::ClassNotConnected, static_cast<int>(i));
  }
  for (int u = 0; u < n; ++u) {
    VertexSet reached = VertexSet::single(u);
    for (VertexSet t : touched) {
      if (t.contains(u)) reached |= t;
    }
    const VertexSet missing = g.vertices() - reached - VertexSet::range(u + 1);
    if (!missing.empty()) {
      r.failing_pair = std::pair{u, missing.front()};
      return fail(FailureReason::UncoveredPair, std::nullopt);
    }
  }
  r.valid = true;
  return r;
}

std::vector<Edge> spanning_tree(const Graph& g, VertexSet within) {
  std::vector<Edge> tree;
  if (within.empty()) return tree;
  std::vector<int> queue{within.front()};
  VertexSet seen = VertexSet::single(within.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int w : (g.neighbors(v) & within) - seen) {
      seen.insert(w);
      queue.push_back(w);
      tree.push_back(Edge::of(v, w));
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

MCColoring coloring_from_trees(const Graph& g, const std::vector<VertexSet>& trees) {
  MCColoring c{g.order(), {}};
  std::vector<Edge> used;
  for (VertexSet t : trees) {
    if (t.size() < 3) continue;
    auto tree = spanning_tree(g, t);
    used.insert(used.end(), tree.begin(), tree.end());
    c.classes.push_back(std::move(tree));
  }
  std::sort(used.begin(), used.end());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(used.begin(), used.end(), e)) c.classes.push_back({e});
  }
  return c;
}

}  // namespace mcnum
