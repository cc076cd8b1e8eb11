#include "mcnum/structure.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "mcnum/errors.hpp"
#include "mcnum/minor.hpp"

namespace mcnum {

namespace {

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("operation undefined on the empty graph");
}

void require_connected(const Graph& g, const char* what) {
  if (!g.is_connected()) throw PreconditionError(std::string(what) + " requires a connected graph");
}

/// Vertex-split unit-capacity flow between nonadjacent s and t. Node 2v is
/// v_in, 2v+1 is v_out. Returns the max number of internally disjoint paths
/// and the min cut (vertices whose in-node is reachable but out-node is not).
struct SplitFlow {
  explicit SplitFlow(const Graph& g) : n_(g.order()), cap_(static_cast<std::size_t>(4 * n_ * n_), 0) {
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) add(out(v), in(w), n_);
    }
  }

  int in(int v) const { return 2 * v; }
  int out(int v) const { return 2 * v + 1; }
  int& cap(int a, int b) { return cap_[static_cast<std::size_t>(a * 2 * n_ + b)]; }
  void add(int a, int b, int c) { cap(a, b) += c; }

  int run(int s, int t, int limit) {
    for (int v = 0; v < n_; ++v) cap(in(v), out(v)) = (v == s || v == t) ? n_ : 1;
    int flow = 0;
    const int nodes = 2 * n_;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      std::queue<int> q;
      q.push(out(s));
      parent[static_cast<std::size_t>(out(s))] = out(s);
      while (!q.empty() && parent[static_cast<std::size_t>(in(t))] < 0) {
        const int a = q.front();
        q.pop();
        for (int b = 0; b < nodes; ++b) {
          if (parent[static_cast<std::size_t>(b)] < 0 && cap(a, b) > 0) {
            parent[static_cast<std::size_t>(b)] = a;
            q.push(b);
          }
        }
      }
      if (parent[static_cast<std::size_t>(in(t))] < 0) break;
      for (int b = in(t); b != out(s);) {
        const int a = parent[static_cast<std::size_t>(b)];
        --cap(a, b);
        ++cap(b, a);
        b = a;
      }
      ++flow;
    }
    reachable_ = parent;
    return flow;
  }

  VertexSet cut() const {
    VertexSet c;
    for (int v = 0; v < n_; ++v) {
      if (reachable_[static_cast<std::size_t>(2 * v)] >= 0 && reachable_[static_cast<std::size_t>(2 * v + 1)] < 0) {
        c.insert(v);
      }
    }
    return c;
  }

 private:
  int n_;
  std::vector<int> cap_;
  std::vector<int> reachable_;
};

}  // namespace

std::optional<CutSet> minimum_vertex_cut(const Graph& g) {
  require_nonempty(g);
  const int n = g.order();
  if (g.is_complete()) return std::nullopt;
  if (!g.is_connected()) return CutSet{VertexSet{}, 0};
  std::optional<CutSet> best;
  int bound = n - 1;
  // Some vertex of a minimum cut's complement lies among any kappa+1
  // vertices, so sources 0..kappa suffice.
  for (int s = 0; s <= bound && s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      SplitFlow flow(g);
      const int k = flow.run(s, t, bound);
      if (k < bound || !best) {
        bound = k;
        best = CutSet{flow.cut(), k};
      }
    }
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  require_nonempty(g);
  if (g.is_complete()) return g.order() - 1;
  return minimum_vertex_cut(g)->order;
}

bool has_cut_vertex(const Graph& g, VertexSet within) {
  if (within.size() < 3 || !g.is_connected(within)) return false;
  for (int v : within) {
    if (!g.is_connected(within - VertexSet::single(v))) return true;
  }
  return false;
}

VertexSet cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  VertexSet out;
  const VertexSet all = g.vertices();
  for (int v : all) {
    if (!g.is_connected(all - VertexSet::single(v))) out.insert(v);
  }
  return out;
}

bool is_planar(const Graph& g) {
  // Strip degree <= 1 vertices and suppress degree-2 vertices; both keep
  // planarity in either direction. The rest is a forbidden-minor search.
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  Graph work = b.build();
  VertexSet live = work.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (int v : live) {
      const VertexSet nb = work.neighbors(v) & live;
      if (nb.size() <= 1) {
        live.erase(v);
        changed = true;
      } else if (nb.size() == 2) {
        const int a = nb.front();
        const int c = (nb - VertexSet::single(a)).front();
        live.erase(v);
        if (!work.adjacent(a, c)) {
          GraphBuilder nb_builder(work.order());
          for (const Edge& e : work.edges()) nb_builder.add_edge(e.u, e.v);
          nb_builder.add_edge(a, c);
          work = nb_builder.build();
        }
        changed = true;
      }
    }
  }
  const Graph core = work.induced(live);
  const int n = core.order();
  if (n <= 4) return true;
  if (core.edge_count() > 3 * n - 6) return false;
  return !has_minor(core, MinorTarget::K5) && !has_minor(core, MinorTarget::K3_3);
}

bool is_outerplanar(const Graph& g) { return is_planar(join(Graph(1), g)); }

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.neighbors(e.u).intersects(g.neighbors(e.v))) return false;
  }
  return true;
}

namespace {

void grow_clique(const Graph& g, VertexSet candidates, int size, int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!candidates.empty()) {
    if (size + candidates.size() <= best) return;
    const int v = candidates.front();
    candidates.erase(v);
    grow_clique(g, candidates & g.neighbors(v), size + 1, best);
  }
}

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, std::size_t i,
               int k, int used) {
  if (i == order.size()) return true;
  const int v = order[i];
  VertexSet taken;
  for (int w : g.neighbors(v)) {
    if (color[static_cast<std::size_t>(w)] >= 0) taken.insert(color[static_cast<std::size_t>(w)]);
  }
  // New colors are interchangeable, so open at most one.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if (taken.contains(c)) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (colorable(g, order, color, i + 1, k, std::max(used, c + 1))) return true;
  }
  color[static_cast<std::size_t>(v)] = -1;
  return false;
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 0;
  grow_clique(g, g.vertices(), 0, best);
  return best;
}

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = std::max(1, clique_number(g));; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    if (colorable(g, order, color, 0, k, 0)) return k;
  }
}

int diameter(const Graph& g) {
  require_connected(g, "diameter");
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (true) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= seen;
      if (next.empty()) break;
      seen |= next;
      frontier = next;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

}  // namespace mcnum
