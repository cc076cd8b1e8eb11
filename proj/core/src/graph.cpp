#include "mcnum/graph.hpp"

#include <algorithm>
#include <string>

#include "mcnum/errors.hpp"

namespace mcnum {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw UnsupportedSizeError("graph order " + std::to_string(n) + " outside [0, " +
                               std::to_string(kMaxOrder) + "]");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  GraphBuilder builder(n);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  *this = builder.build();
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u) - VertexSet::range(u + 1)) out.push_back({u, v});
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out.push_back(degree(v));
  return out;
}

VertexSet Graph::reach(int source, VertexSet within) const {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reach(rest.front(), within);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool Graph::is_connected(VertexSet within) const {
  if (within.empty()) return true;
  return reach(within.front(), within) == within;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v : keep) label[static_cast<std::size_t>(v)] = next++;
  GraphBuilder b(next);
  for (int u : keep) {
    for (int v : neighbors(u) & keep) {
      if (u < v) b.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    }
  }
  return b.build();
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = graph_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidEdgeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for n=" + std::to_string(n));
  }
  if (u == v) throw InvalidEdgeError("self-loop at vertex " + std::to_string(u));
  if (graph_.adjacent(u, v)) return *this;
  graph_.rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  graph_.rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  ++graph_.m_;
  return *this;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

namespace {

GraphBuilder side_by_side(const Graph& g, const Graph& h) {
  const int shift = g.order();
  GraphBuilder b(shift + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + shift, e.v + shift);
  return b;
}

}  // namespace

Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b = side_by_side(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
  }
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) { return side_by_side(g, h).build(); }

Graph contract_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.order() || e.u >= e.v || !g.adjacent(e.u, e.v)) {
    throw InvalidEdgeError("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") is not an edge of the graph");
  }
  auto relabel = [&](int x) {
    if (x == e.v) return e.u;
    return x > e.v ? x - 1 : x;
  };
  GraphBuilder b(g.order() - 1);
  for (const Edge& f : g.edges()) {
    const int a = relabel(f.u);
    const int c = relabel(f.v);
    if (a != c) b.add_edge(a, c);
  }
  return b.build();
}

std::vector<int> path_order(const Graph& g, VertexSet within) {
  const int k = within.size();
  if (k == 0) return {};
  int edges = 0;
  int end = -1;
  for (int v : within) {
    const int d = (g.neighbors(v) & within).size();
    if (d > 2) return {};
    if (d <= 1 && end < 0) end = v;
    edges += d;
  }
  edges /= 2;
  if (edges != k - 1 || end < 0 || !g.is_connected(within)) return {};
  std::vector<int> order{end};
  VertexSet used = VertexSet::single(end);
  while (static_cast<int>(order.size()) < k) {
    const VertexSet next = (g.neighbors(order.back()) & within) - used;
    order.push_back(next.front());
    used.insert(next.front());
  }
  return order;
}

std::vector<int> cycle_order(const Graph& g, VertexSet within) {
  const int k = within.size();
  if (k < 3) return {};
  for (int v : within) {
    if ((g.neighbors(v) & within).size() != 2) return {};
  }
  if (!g.is_connected(within)) return {};
  const int start = within.front();
  std::vector<int> order{start};
  VertexSet used = VertexSet::single(start);
  while (static_cast<int>(order.size()) < k) {
    const VertexSet next = (g.neighbors(order.back()) & within) - used;
    order.push_back(next.front());
    used.insert(next.front());
  }
  return order;
}

bool is_path(const Graph& g) { return g.order() > 0 && !path_order(g, g.vertices()).empty(); }

bool is_cycle(const Graph& g) { return !cycle_order(g, g.vertices()).empty(); }

ShapeReport shape(const Graph& g) {
  ShapeReport r;
  const auto comps = g.components();
  r.component_count = static_cast<int>(comps.size());
  r.is_connected = r.component_count <= 1;
  r.is_complete = g.is_complete();
  r.is_path = is_path(g);
  r.is_cycle = is_cycle(g);
  r.is_linear_forest = std::all_of(comps.begin(), comps.end(), [&](VertexSet c) {
    return !path_order(g, c).empty();
  });
  r.degree_sequence = g.degree_sequence();
  return r;
}

}  // namespace mcnum
