#include "mcnum/solver.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mcnum/errors.hpp"

namespace mcnum {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.order() == 0 || !g.is_connected()) {
    throw PreconditionError(std::string(what) + " requires a connected nonempty graph");
  }
}

class TreeSystemSearch {
 public:
  TreeSystemSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.order()), budget_(budget) {
    for (int v = 0; v < n_; ++v) {
      uncovered_[static_cast<std::size_t>(v)] =
          g.vertices() - g.neighbors(v) - VertexSet::single(v);
    }
    best_waste_ = n_ - 2;
  }

  void run() { expand(0); }

  int best_waste() const { return best_waste_; }
  bool improved() const { return improved_; }
  const std::vector<VertexSet>& best_system() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int lower_bound() const {
    int lb = 0;
    for (int v = 0; v < n_; ++v) lb = std::max(lb, uncovered_[static_cast<std::size_t>(v)].size());
    return lb;
  }

  void expand(int waste) {
    if (++nodes_ > budget_) {
      throw ResourceError("mc_exact node budget of " + std::to_string(budget_) + " exhausted");
    }
    int x = -1;
    for (int v = 0; v < n_; ++v) {
      if (!uncovered_[static_cast<std::size_t>(v)].empty()) {
        x = v;
        break;
      }
    }
    if (x < 0) {
      if (waste < best_waste_) {
        best_waste_ = waste;
        best_ = system_;
        improved_ = true;
      }
      return;
    }
    if (waste + lower_bound() >= best_waste_) return;

    const int y = uncovered_[static_cast<std::size_t>(x)].front();
    const VertexSet pair{x, y};
    // A committed set that already holds x or y may not share a second vertex
    // with the new set.
    VertexSet free = g_.vertices() - pair;
    for (VertexSet s : system_) {
      const VertexSet hit = s & pair;
      if (hit.size() >= 2) return;
      if (!hit.empty()) free -= s;
    }
    const std::vector<int> pool = free.to_vector();
    const int pool_size = static_cast<int>(pool.size());
    for (int extra = 1; extra <= pool_size && waste + extra < best_waste_; ++extra) {
      combos(pool, pool_size, extra, pair, waste + extra);
    }
  }

  /// All `left`-subsets of pool[0..limit) added to `chosen`, smallest bitmask
  /// first: the top element ranges upward and the rest recurse below it.
  void combos(const std::vector<int>& pool, int limit, int left, VertexSet chosen, int waste) {
    if (left == 0) {
      try_set(chosen, waste);
      return;
    }
    for (int top = left - 1; top < limit; ++top) {
      combos(pool, top, left - 1, chosen | VertexSet::single(pool[static_cast<std::size_t>(top)]), waste);
      if (waste >= best_waste_) return;
    }
  }

  void try_set(VertexSet set, int waste) {
    if (waste >= best_waste_) return;
    if (!g_.is_connected(set)) return;
    for (VertexSet s : system_) {
      if ((s & set).size() >= 2) return;
    }
    std::array<VertexSet, kMaxOrder> saved;
    for (int v : set) {
      saved[static_cast<std::size_t>(v)] = uncovered_[static_cast<std::size_t>(v)];
      uncovered_[static_cast<std::size_t>(v)] -= set;
    }
    system_.push_back(set);
    expand(waste);
    system_.pop_back();
    for (int v : set) uncovered_[static_cast<std::size_t>(v)] = saved[static_cast<std::size_t>(v)];
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::array<VertexSet, kMaxOrder> uncovered_{};
  std::vector<VertexSet> system_;
  std::vector<VertexSet> best_;
  int best_waste_ = 0;
  bool improved_ = false;
};

}  // namespace

MCColoring spanning_tree_coloring(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("spanning_tree_coloring requires n >= 2");
  require_connected(g, "spanning_tree_coloring");
  auto tree = spanning_tree(g, g.vertices());
  MCColoring c{g.order(), {}};
  std::vector<Edge> trivial;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(tree.begin(), tree.end(), e)) trivial.push_back(e);
  }
  if (tree.size() >= 2) {
    c.classes.push_back(std::move(tree));
  } else {
    trivial.insert(trivial.end(), tree.begin(), tree.end());
    std::sort(trivial.begin(), trivial.end());
  }
  for (const Edge& e : trivial) c.classes.push_back({e});
  return c;
}

ExactResult mc_exact(const Graph& g, const SearchOptions& opts) {
  require_connected(g, "mc_exact");
  if (g.order() == 1) return ExactResult{0, MCColoring{1, {}}, 0};

  TreeSystemSearch search(g, opts.node_budget);
  search.run();
  ExactResult r;
  r.nodes_explored = search.nodes();
  r.mc = g.edge_count() - search.best_waste();
  r.witness = search.improved() ? coloring_from_trees(g, search.best_system()) : spanning_tree_coloring(g);
  return r;
}

namespace {

/// Restricted-growth enumeration of partitions of m edges into exactly
/// `classes` blocks; stops at the first one verify_coloring accepts.
class PartitionOracle {
 public:
  PartitionOracle(const Graph& g, int classes)
      : g_(g), edges_(g.edges()), classes_(classes), label_(edges_.size(), 0) {}

  bool run() { return place(0, 0); }
  const MCColoring& found() const { return found_; }

 private:
  bool place(std::size_t i, int used) {
    const int remaining = static_cast<int>(edges_.size() - i);
    if (used + remaining < classes_) return false;
    if (i == edges_.size()) return check();
    const int limit = std::min(used + 1, classes_);
    for (int b = 0; b < limit; ++b) {
      label_[i] = b;
      if (place(i + 1, b == used ? used + 1 : used)) return true;
    }
    return false;
  }

  bool check() {
    MCColoring c{g_.order(), std::vector<std::vector<Edge>>(static_cast<std::size_t>(classes_))};
    for (std::size_t i = 0; i < edges_.size(); ++i) c.classes[static_cast<std::size_t>(label_[i])].push_back(edges_[i]);
    if (!verify_coloring(g_, c).valid) return false;
    found_ = std::move(c);
    return true;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  int classes_;
  std::vector<int> label_;
  MCColoring found_;
};

}  // namespace

ExactResult mc_exact_unrestricted(const Graph& g) {
  require_connected(g, "mc_exact_unrestricted");
  if (g.edge_count() > 12) {
    throw ResourceError("mc_exact_unrestricted supports at most 12 edges (got " +
                        std::to_string(g.edge_count()) + ")");
  }
  if (g.order() == 1) return ExactResult{0, MCColoring{1, {}}, 0};
  ExactResult r;
  for (int c = g.edge_count(); c >= 1; --c) {
    PartitionOracle oracle(g, c);
    ++r.nodes_explored;
    if (oracle.run()) {
      r.mc = c;
      r.witness = oracle.found();
      return r;
    }
  }
  throw PreconditionError("no valid coloring found for a connected graph");
}

}  // namespace mcnum
