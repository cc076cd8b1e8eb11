#include "mcnum/report.hpp"

#include "mcnum/errors.hpp"

namespace mcnum {

namespace {

Record set_record(VertexSet s) { return Record(s.to_vector()); }

Record parts_record(const std::vector<VertexSet>& parts) {
  Record out = Record::array();
  for (VertexSet p : parts) out.push_back(set_record(p));
  return out;
}

struct WitnessFields {
  Record operator()(const PerfectlyConnectedWitness& w) const {
    return {{"family", "perfectly-connected"}, {"v", w.v}, {"s", w.s}, {"parts", parts_record(w.parts)}};
  }
  Record operator()(const FamilyAWitness& w) const {
    return {{"family", "A"}, {"clique", set_record(w.clique)}, {"h", set_record(w.h_vertices)},
            {"cut_vertex", w.h_cut_vertex}};
  }
  Record operator()(const FamilyB1Witness& w) const {
    return {{"family", "B1"}, {"u", w.u}, {"t", w.t}, {"parts", parts_record(w.parts)}};
  }
  Record operator()(const FamilyB2Witness& w) const {
    return {{"family", "B2"}, {"u_set", set_record(w.u_set)}, {"v_set", set_record(w.v_set)}};
  }
  Record operator()(const FamilyB3Witness& w) const {
    return {{"family", "B3"},
            {"u_set", set_record(w.u_set)},
            {"missing_pair", {w.missing_pair.u, w.missing_pair.v}},
            {"v_set", set_record(w.v_set)}};
  }
  Record operator()(const P1Witness& w) const {
    return {{"family", "P1"}, {"apex", w.apex}, {"h", set_record(w.h_vertices)}};
  }
  Record operator()(const P2Witness& w) const {
    return {{"family", "P2"}, {"apex", w.apex}, {"h", set_record(w.h_vertices)}};
  }
  Record operator()(const SpecialJoinWitness& w) const {
    return {{"family", "special-join"},
            {"kind", std::string(to_string(w.kind))},
            {"a_set", set_record(w.a_set)},
            {"spine", w.spine}};
  }
};

[[noreturn]] void bad_coloring(const std::string& what) { throw FormatError("coloring file: " + what, 0); }

}  // namespace

Record coloring_record(const MCColoring& c) {
  Record classes = Record::array();
  for (const auto& cls : c.classes) {
    Record edges = Record::array();
    for (const Edge& e : cls) edges.push_back({e.u, e.v});
    classes.push_back(std::move(edges));
  }
  return {{"n", c.n}, {"classes", std::move(classes)}};
}

Record witness_record(const FamilyWitness& w) { return std::visit(WitnessFields{}, w); }

Record exact_record(std::string_view graph6, const Graph& g, const ExactResult& r) {
  return {{"graph6", graph6},
          {"n", g.order()},
          {"m", g.edge_count()},
          {"mc", r.mc},
          {"nodes_explored", r.nodes_explored},
          {"witness", coloring_record(r.witness)}};
}

Record classification_record(std::string_view graph6, const Graph& g, const MCClassification& c) {
  Record r{{"graph6", graph6}, {"n", g.order()}, {"m", g.edge_count()}, {"kappa", c.kappa}, {"planar", c.planar}};
  if (c.is_exact()) {
    const ExactVerdict& v = c.exact();
    r["verdict"] = "exact";
    r["value"] = v.value;
    r["formula"] = std::string(to_string(v.formula));
    r["rule"] = v.rule;
    r["witness"] = v.witness ? witness_record(*v.witness) : Record(nullptr);
  } else {
    const BoundsVerdict& b = c.bounds();
    r["verdict"] = "bounds";
    r["lower"] = b.lower;
    r["upper"] = b.upper;
    r["rules"] = b.rules;
  }
  return r;
}

Record verification_record(const VerificationReport& r) {
  Record out{{"valid", r.valid}, {"colors_used", r.colors_used}, {"waste", r.waste}};
  if (r.failing_pair) out["failing_pair"] = {r.failing_pair->first, r.failing_pair->second};
  if (r.failing_reason) out["failing_reason"] = std::string(to_string(*r.failing_reason));
  if (r.failing_class) out["failing_class"] = *r.failing_class;
  return out;
}

MCColoring parse_coloring(std::string_view text) {
  Record doc;
  try {
    doc = Record::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("coloring file: malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) bad_coloring("expected an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) bad_coloring("missing integer field n");
  if (!doc.contains("classes") || !doc["classes"].is_array()) bad_coloring("missing array field classes");
  MCColoring c;
  c.n = doc["n"].get<int>();
  if (c.n < 0 || c.n > kMaxOrder) bad_coloring("n out of range");
  for (const auto& cls : doc["classes"]) {
    if (!cls.is_array()) bad_coloring("each class must be an array of edges");
    std::vector<Edge> edges;
    for (const auto& e : cls) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        bad_coloring("each edge must be a pair of integers");
      }
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u < 0 || u >= v || v >= c.n) bad_coloring("edge [" + std::to_string(u) + "," + std::to_string(v) + "] invalid");
      edges.push_back({u, v});
    }
    c.classes.push_back(std::move(edges));
  }
  return c;
}

std::string to_line(const Record& r) { return r.dump(); }

}  // namespace mcnum
