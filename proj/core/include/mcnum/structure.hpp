#pragma once

#include <optional>

#include "mcnum/graph.hpp"

namespace mcnum {

/// A vertex set whose removal disconnects the graph.
struct CutSet {
  VertexSet vertices;
  int order = 0;
};

/// kappa(G). Complete graphs give n-1, disconnected graphs 0. Throws
/// PreconditionError on the empty graph.
int vertex_connectivity(const Graph& g);

/// A minimum vertex cut, absent for complete graphs. Least cut in the order
/// the (s, t) pairs are scanned. Throws PreconditionError on the empty graph.
std::optional<CutSet> minimum_vertex_cut(const Graph& g);

/// Vertices whose removal disconnects g. Throws PreconditionError when g is
/// disconnected.
VertexSet cut_vertices(const Graph& g);

/// The subgraph induced by `within` is connected and some vertex of it
/// disconnects it.
bool has_cut_vertex(const Graph& g, VertexSet within);

bool is_planar(const Graph& g);
bool is_outerplanar(const Graph& g);

bool is_triangle_free(const Graph& g);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

/// Throws PreconditionError when g is disconnected.
int diameter(const Graph& g);

}  // namespace mcnum
