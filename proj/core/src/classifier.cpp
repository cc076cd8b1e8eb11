#include "mcnum/classifier.hpp"

#include <algorithm>

#include "mcnum/errors.hpp"
#include "mcnum/structure.hpp"

namespace mcnum {

std::string_view to_string(Formula f) {
  switch (f) {
    case Formula::M:
      return "m";
    case Formula::Floor:
      return "m-n+2";
    case Formula::PlusThree:
      return "m-n+3";
    case Formula::PlusFour:
      return "m-n+4";
    case Formula::PlusK:
      return "m-n+k";
    case Formula::PlusKPlusOne:
      return "m-n+k+1";
    case Formula::PlusSPlusOne:
      return "m-n+s+1";
  }
  return "?";
}

int MCClassification::lower() const { return is_exact() ? exact().value : bounds().lower; }

int MCClassification::upper() const { return is_exact() ? exact().value : bounds().upper; }

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.order() == 0 || !g.is_connected()) {
    throw PreconditionError(std::string(what) + " requires a connected nonempty graph");
  }
}

ExactVerdict exact(int value, Formula formula, std::string rule, std::optional<FamilyWitness> witness = {}) {
  return ExactVerdict{value, formula, std::move(rule), std::move(witness)};
}

}  // namespace

std::optional<std::string_view> quick_floor(const Graph& g) {
  require_connected(g, "quick_floor");
  const long n = g.order();
  const long m = g.edge_count();
  if (n < 3) throw PreconditionError("quick_floor requires n >= 3");
  if (vertex_connectivity(complement(g)) >= 4) return "complement-4-connected";
  if (is_triangle_free(g)) return "triangle-free";
  if (n >= 4) {
    const long lhs = static_cast<long>(g.max_degree()) * (n - 3);
    const long rhs = n * (n - 3) - (2 * m - 3 * (n - 1));
    if (lhs < rhs) return "degree-bound";
  }
  if (diameter(g) >= 3) return "diameter";
  if (has_cut_vertex(g, g.vertices())) return "cut-vertex";
  return std::nullopt;
}

MCClassification classify(const Graph& g) {
  require_connected(g, "classify");
  const int n = g.order();
  const int m = g.edge_count();
  const int floor = m - n + 2;
  MCClassification out;
  out.kappa = vertex_connectivity(g);
  out.planar = is_planar(g);
  const int k = out.kappa;

  if (n <= 2) {
    out.verdict = exact(m, Formula::M, "small-order");
    return out;
  }
  if (g.is_complete()) {
    out.verdict = exact(m, Formula::M, "complete-graph");
    return out;
  }
  const int s = g.min_degree();
  if (auto w = recognize_perfectly_connected(g, s)) {
    out.verdict = exact(m - n + s + 1, Formula::PlusSPlusOne, "min-degree-perfectly-connected", FamilyWitness{*w});
    return out;
  }
  if (auto rule = quick_floor(g)) {
    out.verdict = exact(floor, Formula::Floor, "floor:" + std::string(*rule));
    return out;
  }
  if (k >= 2) {
    if (auto w = recognize_family_A(g, k)) {
      out.verdict = exact(m - n + k + 1, Formula::PlusKPlusOne, "family-A", FamilyWitness{*w});
      return out;
    }
    if (auto w = recognize_perfectly_connected(g, k)) {
      out.verdict = exact(m - n + k + 1, Formula::PlusKPlusOne, "perfectly-connected", FamilyWitness{*w});
      return out;
    }
  }
  if (k >= 3) {
    if (auto w = recognize_family_B(g, k)) {
      out.verdict = exact(m - n + k, Formula::PlusK, "family-" + std::string(family_name(*w)), *w);
      return out;
    }
  }
  if (k <= 3) {
    out.verdict = exact(floor, Formula::Floor, "elimination:k=" + std::to_string(k));
    return out;
  }
  if (out.planar && k == 4) {
    if (auto w = find_special_join(g, JoinKind::TwoK1JoinCycle)) {
      out.verdict = exact(m - n + 3, Formula::PlusThree, "planar:k=4:2K1+C", FamilyWitness{*w});
    } else {
      out.verdict = exact(floor, Formula::Floor, "planar:k=4");
    }
    return out;
  }
  if (out.planar && k == 5) {
    out.verdict = exact(floor, Formula::Floor, "planar:k=5");
    return out;
  }

  BoundsVerdict b;
  b.lower = floor;
  b.rules.push_back("lower:spanning-tree");
  b.upper = m - n + chromatic_number(g);
  b.rules.push_back("upper:chromatic");
  b.upper = std::min(b.upper, m - n + k - 1);
  b.rules.push_back("upper:connectivity-excluded-top");
  b.upper = std::min(b.upper, m - n + s);
  b.rules.push_back("upper:min-degree");
  out.verdict = std::move(b);
  return out;
}

namespace {

struct TreeSets {
  const Graph& g;

  std::vector<VertexSet> with_apex(const std::vector<VertexSet>& parts, int apex) const {
    std::vector<VertexSet> out;
    out.reserve(parts.size());
    for (VertexSet p : parts) out.push_back(p | VertexSet::single(apex));
    return out;
  }

  std::vector<VertexSet> operator()(const PerfectlyConnectedWitness& w) const { return with_apex(w.parts, w.v); }
  std::vector<VertexSet> operator()(const FamilyAWitness& w) const { return {w.h_vertices}; }
  std::vector<VertexSet> operator()(const FamilyB1Witness& w) const { return with_apex(w.parts, w.u); }
  std::vector<VertexSet> operator()(const FamilyB2Witness& w) const { return {w.v_set}; }
  std::vector<VertexSet> operator()(const FamilyB3Witness& w) const {
    const int hub = w.v_set.front();
    return {w.v_set, VertexSet{w.missing_pair.u, hub, w.missing_pair.v}};
  }
  std::vector<VertexSet> operator()(const P1Witness& w) const { return {w.h_vertices}; }
  std::vector<VertexSet> operator()(const P2Witness& w) const { return {w.h_vertices}; }
  std::vector<VertexSet> operator()(const SpecialJoinWitness& w) const {
    VertexSet spine;
    for (int v : w.spine) spine.insert(v);
    if (w.kind == JoinKind::K2JoinPath) return {spine};
    return {w.a_set | VertexSet::single(w.spine.front()), spine};
  }
};

}  // namespace

MCColoring construct_coloring(const Graph& g, const FamilyWitness& w) {
  if (!validate_witness(g, w)) {
    throw InvalidWitnessError(std::string(family_name(w)) + " witness does not describe the graph");
  }
  return coloring_from_trees(g, std::visit(TreeSets{g}, w));
}

}  // namespace mcnum
