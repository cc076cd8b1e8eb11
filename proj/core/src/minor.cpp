#include "mcnum/minor.hpp"

#include <array>

namespace mcnum {

namespace {

struct TargetShape {
  int blocks;
  int edges;
  int small_side;  // 0 for cliques
};

TargetShape shape_of(MinorTarget t) {
  switch (t) {
    case MinorTarget::K4:
      return {4, 6, 0};
    case MinorTarget::K5:
      return {5, 10, 0};
    case MinorTarget::K2_3:
      return {5, 6, 2};
    case MinorTarget::K3_3:
      return {6, 9, 3};
  }
  return {0, 0, 0};
}

using Quotient = std::array<std::uint32_t, 8>;

bool required(const TargetShape& s, int i, int j) {
  if (s.small_side == 0) return true;
  return (i < s.small_side) != (j < s.small_side);
}

/// Finds an ordering of the blocks that realises the target on the quotient.
/// Returns the permutation (block index per target slot) or an empty vector.
std::vector<int> match_quotient(const TargetShape& s, const Quotient& adj) {
  const int h = s.blocks;
  if (s.small_side == 0) {
    for (int i = 0; i < h; ++i) {
      if (std::popcount(adj[static_cast<std::size_t>(i)]) != h - 1) return {};
    }
    std::vector<int> perm(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) perm[static_cast<std::size_t>(i)] = i;
    return perm;
  }
  const std::uint32_t all = (1U << h) - 1;
  for (std::uint32_t side = 0; side <= all; ++side) {
    if (std::popcount(side) != s.small_side) continue;
    const std::uint32_t other = all & ~side;
    bool ok = true;
    for (int i = 0; i < h && ok; ++i) {
      if ((side >> i) & 1U) ok = (adj[static_cast<std::size_t>(i)] & other) == other;
    }
    if (!ok) continue;
    std::vector<int> perm;
    for (int i = 0; i < h; ++i) {
      if ((side >> i) & 1U) perm.push_back(i);
    }
    for (int i = 0; i < h; ++i) {
      if ((other >> i) & 1U) perm.push_back(i);
    }
    return perm;
  }
  return {};
}

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, VertexSet component, TargetShape shape)
      : g_(g), shape_(shape) {
    // BFS order keeps every prefix connected, so blocks close early.
    VertexSet seen = VertexSet::single(component.front());
    order_.push_back(component.front());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (int w : (g.neighbors(order_[i]) & component) - seen) {
        seen.insert(w);
        order_.push_back(w);
      }
    }
    suffix_.assign(order_.size() + 1, VertexSet{});
    for (std::size_t i = order_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | VertexSet::single(order_[i]);
    }
    blocks_.assign(static_cast<std::size_t>(shape.blocks), VertexSet{});
  }

  std::optional<MinorModel> run(MinorTarget target) {
    if (!assign(0, 0)) return std::nullopt;
    MinorModel model{target, {}};
    for (int slot : found_perm_) model.branch_sets.push_back(found_[static_cast<std::size_t>(slot)]);
    return model;
  }

 private:
  bool assign(std::size_t index, int used) {
    const int h = shape_.blocks;
    const int remaining = static_cast<int>(order_.size() - index);
    if (remaining < h - used) return false;
    const VertexSet unassigned = suffix_[index];
    for (int b = 0; b < used; ++b) {
      const VertexSet block = blocks_[static_cast<std::size_t>(b)];
      if (!neighborhood(block).intersects(unassigned) && !g_.is_connected(block)) return false;
    }
    if (index == order_.size()) return check_leaf();

    const int v = order_[index];
    const int limit = used < h ? used + 1 : used;
    for (int b = 0; b < limit; ++b) {
      blocks_[static_cast<std::size_t>(b)].insert(v);
      const bool hit = assign(index + 1, b == used ? used + 1 : used);
      blocks_[static_cast<std::size_t>(b)].erase(v);
      if (hit) return true;
    }
    return false;
  }

  VertexSet neighborhood(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= g_.neighbors(v);
    return out;
  }

  bool check_leaf() {
    const int h = shape_.blocks;
    Quotient adj{};
    for (int i = 0; i < h; ++i) {
      const VertexSet n = neighborhood(blocks_[static_cast<std::size_t>(i)]);
      for (int j = 0; j < h; ++j) {
        if (i != j && n.intersects(blocks_[static_cast<std::size_t>(j)])) {
          adj[static_cast<std::size_t>(i)] |= 1U << j;
        }
      }
    }
    auto perm = match_quotient(shape_, adj);
    if (perm.empty()) return false;
    found_ = blocks_;
    found_perm_ = std::move(perm);
    return true;
  }

  const Graph& g_;
  TargetShape shape_;
  std::vector<int> order_;
  std::vector<VertexSet> suffix_;
  std::vector<VertexSet> blocks_;
  std::vector<VertexSet> found_;
  std::vector<int> found_perm_;
};

}  // namespace

std::string_view to_string(MinorTarget target) {
  switch (target) {
    case MinorTarget::K4:
      return "K4";
    case MinorTarget::K5:
      return "K5";
    case MinorTarget::K2_3:
      return "K2,3";
    case MinorTarget::K3_3:
      return "K3,3";
  }
  return "?";
}

std::optional<MinorModel> find_minor(const Graph& g, MinorTarget target) {
  const TargetShape s = shape_of(target);
  VertexSet live = g.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : live) {
      if ((g.neighbors(v) & live).size() <= 1) {
        live.erase(v);
        changed = true;
      }
    }
  }
  for (VertexSet comp : g.components(live)) {
    if (comp.size() < s.blocks) continue;
    int edges = 0;
    for (int v : comp) edges += (g.neighbors(v) & comp).size();
    if (edges / 2 < s.edges) continue;
    PartitionSearch search(g, comp, s);
    if (auto model = search.run(target)) return model;
  }
  return std::nullopt;
}

bool is_minor_model(const Graph& g, const MinorModel& model) {
  const TargetShape s = shape_of(model.target);
  if (static_cast<int>(model.branch_sets.size()) != s.blocks) return false;
  VertexSet seen;
  for (VertexSet b : model.branch_sets) {
    if (b.empty() || b.intersects(seen) || !b.is_subset_of(g.vertices()) || !g.is_connected(b)) {
      return false;
    }
    seen |= b;
  }
  for (int i = 0; i < s.blocks; ++i) {
    for (int j = i + 1; j < s.blocks; ++j) {
      if (!required(s, i, j)) continue;
      bool joined = false;
      for (int v : model.branch_sets[static_cast<std::size_t>(i)]) {
        joined = joined || g.neighbors(v).intersects(model.branch_sets[static_cast<std::size_t>(j)]);
      }
      if (!joined) return false;
    }
  }
  return true;
}

}  // namespace mcnum
