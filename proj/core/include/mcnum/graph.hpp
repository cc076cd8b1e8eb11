#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace mcnum {

/// Largest vertex count a Graph can hold (graph6 short form limit).
inline constexpr int kMaxOrder = 62;

/// A set of vertex indices packed into one 64-bit word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Lowest member. Undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static constexpr Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr auto operator<=>(const Edge&) const = default;
};

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1 with adjacency bit rows.
/// Immutable once built; build through the constructors or GraphBuilder.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws InvalidEdgeError on loops or out-of-range endpoints. Repeated
  /// pairs collapse to one edge.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  int degree(int v) const { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  int min_degree() const;
  int max_degree() const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;

  /// Vertices reachable from `source` using only vertices of `within`.
  VertexSet reach(int source, VertexSet within) const;
  /// Components of the subgraph induced by `within`, ordered by least vertex.
  std::vector<VertexSet> components(VertexSet within) const;
  std::vector<VertexSet> components() const { return components(vertices()); }
  /// The empty set counts as connected.
  bool is_connected(VertexSet within) const;
  bool is_connected() const { return is_connected(vertices()); }
  bool is_complete() const { return m_ == n_ * (n_ - 1) / 2; }

  /// Induced subgraph on `keep`, relabeled in increasing vertex order.
  Graph induced(VertexSet keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const { return graph_.adjacent(u, v); }
  Graph build() const { return graph_; }

 private:
  Graph graph_;
};

/// Same vertex set; a pair is adjacent iff it is not adjacent in g.
Graph complement(const Graph& g);

/// g's vertices keep their labels, h's are shifted up by g.order(); every
/// cross pair is joined.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union with the same relabeling as join().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Underlying simple graph of g/e. The merged vertex takes label e.u; the
/// labels above e.v shift down by one. Throws InvalidEdgeError when e is not
/// an edge of g.
Graph contract_edge(const Graph& g, Edge e);

struct ShapeReport {
  bool is_path = false;
  bool is_cycle = false;
  bool is_linear_forest = false;
  bool is_complete = false;
  bool is_connected = false;
  int component_count = 0;
  std::vector<int> degree_sequence;
};

/// P_1 (a single vertex) counts as a path. The empty graph is a linear forest
/// and nothing else.
ShapeReport shape(const Graph& g);

bool is_path(const Graph& g);
bool is_cycle(const Graph& g);

/// The induced subgraph on `within` is a path; returns its vertices in order
/// from the lower-labeled end, or an empty vector when it is not a path.
std::vector<int> path_order(const Graph& g, VertexSet within);
/// The induced subgraph on `within` is a cycle (at least 3 vertices); returns
/// the cyclic order starting at the least vertex and continuing to its smaller
/// neighbor, or an empty vector.
std::vector<int> cycle_order(const Graph& g, VertexSet within);

}  // namespace mcnum
