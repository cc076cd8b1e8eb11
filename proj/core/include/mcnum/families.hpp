#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "mcnum/graph.hpp"

namespace mcnum {

/// V = {v} + parts; parts pairwise completely joined, each connected, and v
/// has exactly one neighbor in each.
struct PerfectlyConnectedWitness {
  int v = 0;
  std::vector<VertexSet> parts;
  int s = 0;
  friend bool operator==(const PerfectlyConnectedWitness&, const PerfectlyConnectedWitness&) = default;
};

/// G = K_{k-1} join H with H connected and having a cut vertex.
struct FamilyAWitness {
  VertexSet clique;
  VertexSet h_vertices;
  int h_cut_vertex = 0;
  friend bool operator==(const FamilyAWitness&, const FamilyAWitness&) = default;
};

/// V = {u} + parts (k-1 of them), parts pairwise completely joined, each
/// G[part + u] connected, u has two neighbors in parts[t] and one elsewhere.
struct FamilyB1Witness {
  int u = 0;
  std::vector<VertexSet> parts;
  int t = 0;
  friend bool operator==(const FamilyB1Witness&, const FamilyB1Witness&) = default;
};

/// G = K_{k-2} join G[V] with G[V] 2-connected but not 3-connected.
struct FamilyB2Witness {
  VertexSet u_set;
  VertexSet v_set;
  friend bool operator==(const FamilyB2Witness&, const FamilyB2Witness&) = default;
};

/// G = (K_{k-1} minus one edge) join G[V] with G[V] connected and having a
/// cut vertex.
struct FamilyB3Witness {
  VertexSet u_set;
  Edge missing_pair;
  VertexSet v_set;
  friend bool operator==(const FamilyB3Witness&, const FamilyB3Witness&) = default;
};

/// G = apex join H, H connected outerplanar with a cut vertex.
struct P1Witness {
  int apex = 0;
  VertexSet h_vertices;
  friend bool operator==(const P1Witness&, const P1Witness&) = default;
};

/// G = apex join H, H 2-connected outerplanar and not a fan.
struct P2Witness {
  int apex = 0;
  VertexSet h_vertices;
  friend bool operator==(const P2Witness&, const P2Witness&) = default;
};

enum class JoinKind { K2JoinPath, TwoK1JoinPath, TwoK1JoinCycle };

std::string_view to_string(JoinKind kind);

/// A two-vertex set joined to a path or cycle spine.
struct SpecialJoinWitness {
  JoinKind kind = JoinKind::K2JoinPath;
  VertexSet a_set;
  std::vector<int> spine;
  friend bool operator==(const SpecialJoinWitness&, const SpecialJoinWitness&) = default;
};

using FamilyWitness = std::variant<PerfectlyConnectedWitness, FamilyAWitness, FamilyB1Witness, FamilyB2Witness,
                                   FamilyB3Witness, P1Witness, P2Witness, SpecialJoinWitness>;

/// Short family tag: "perfectly-connected", "A", "B1", "B2", "B3", "P1", "P2",
/// "special-join".
std::string_view family_name(const FamilyWitness& w);

/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

/// Components of the complement of g[within], ordered by least vertex. Two
/// different components are completely joined in g, and every partition of
/// `within` into pairwise completely joined parts coarsens this one.
std::vector<VertexSet> complement_components(const Graph& g, VertexSet within);

/// H (induced on `within`) is u join P for some vertex u and path P.
bool is_fan(const Graph& g, VertexSet within);

/// s-perfectly-connected test for the least qualifying v. The parts are built
/// from complement components of g - v, merging neighborless components into
/// the anchored ones where a part would otherwise be disconnected.
std::optional<PerfectlyConnectedWitness> recognize_perfectly_connected(const Graph& g, int s);

std::optional<FamilyAWitness> recognize_family_A(const Graph& g, int k);

/// Individual B recognizers. Each includes the defining k-connectivity and
/// the exclusion of k-perfectly-connected and A_{n,k} graphs.
std::optional<FamilyB1Witness> recognize_family_B1(const Graph& g, int k);
std::optional<FamilyB2Witness> recognize_family_B2(const Graph& g, int k);
std::optional<FamilyB3Witness> recognize_family_B3(const Graph& g, int k);

/// First of B1, B2, B3 that fires. Requires k >= 3.
std::optional<FamilyWitness> recognize_family_B(const Graph& g, int k);

std::optional<P1Witness> recognize_P1(const Graph& g);
std::optional<P2Witness> recognize_P2(const Graph& g);

/// Scans kinds in the order K2+P, 2K1+P, 2K1+C and vertex pairs
/// lexicographically within each kind. Requires n >= 4.
std::optional<SpecialJoinWitness> recognize_special_join(const Graph& g);
/// Same, restricted to one kind.
std::optional<SpecialJoinWitness> find_special_join(const Graph& g, JoinKind kind);

/// Checks a witness against its family definition directly from the fields.
/// Exclusion clauses are evaluated with the sibling recognizers.
bool validate_witness(const Graph& g, const FamilyWitness& w);

}  // namespace mcnum
