#include "mcnum/families.hpp"

#include <algorithm>

#include "mcnum/structure.hpp"

namespace mcnum {

namespace {

VertexSet lowest(VertexSet s, int count) {
  VertexSet out;
  for (int v : s) {
    if (out.size() == count) break;
    out.insert(v);
  }
  return out;
}

bool completely_joined(const Graph& g, VertexSet a, VertexSet b) {
  for (int v : a) {
    if (!b.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

int connectivity_of(const Graph& g, VertexSet within) {
  if (within.empty()) return 0;
  return vertex_connectivity(g.induced(within));
}

bool two_connected_not_three(const Graph& g, VertexSet within) {
  return within.size() >= 3 && connectivity_of(g, within) == 2;
}

/// Groups anchored components into final parts, spending neighborless
/// components on anchored parts that are not connected on their own. Returns
/// an empty vector when there are not enough spare components.
std::vector<VertexSet> absorb_free(std::vector<VertexSet> anchored, const std::vector<bool>& bad,
                                   const std::vector<VertexSet>& free) {
  const auto bad_count = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), true));
  if (free.size() < bad_count) return {};
  if (anchored.empty()) return free.empty() ? anchored : std::vector<VertexSet>{};
  std::size_t next = 0;
  for (std::size_t i = 0; i < anchored.size(); ++i) {
    if (bad[i]) anchored[i] |= free[next++];
  }
  for (; next < free.size(); ++next) anchored.front() |= free[next];
  return anchored;
}

std::optional<FamilyB1Witness> b1_core(const Graph& g, int k) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    const VertexSet nu = g.neighbors(u);
    if (nu.size() != k) continue;
    const auto comps = complement_components(g, g.vertices() - VertexSet::single(u));
    std::vector<VertexSet> anchored;
    std::vector<VertexSet> free;
    int doubled = -1;
    bool ok = true;
    for (VertexSet c : comps) {
      const int hits = (c & nu).size();
      if (hits == 0) {
        free.push_back(c);
      } else if (hits == 1) {
        anchored.push_back(c);
      } else if (hits == 2 && doubled < 0) {
        doubled = static_cast<int>(anchored.size());
        anchored.push_back(c);
      } else {
        ok = false;
      }
    }
    if (!ok) continue;
    auto connected_with_u = [&](VertexSet part) { return g.is_connected(part | VertexSet::single(u)); };
    std::vector<bool> bad(anchored.size());
    for (std::size_t i = 0; i < anchored.size(); ++i) bad[i] = !connected_with_u(anchored[i]);

    if (doubled < 0) {
      // k singly-hit components; two of them merge into the doubly-hit part.
      std::vector<std::size_t> bad_idx;
      for (std::size_t i = 0; i < bad.size(); ++i) {
        if (bad[i]) bad_idx.push_back(i);
      }
      std::size_t a = 0;
      std::size_t b = 1;
      if (bad_idx.size() >= 2) {
        a = bad_idx[0];
        b = bad_idx[1];
      } else if (bad_idx.size() == 1) {
        a = bad_idx[0];
        b = a == 0 ? 1 : 0;
      }
      if (a > b) std::swap(a, b);
      anchored[a] |= anchored[b];
      bad[a] = false;
      anchored.erase(anchored.begin() + static_cast<std::ptrdiff_t>(b));
      bad.erase(bad.begin() + static_cast<std::ptrdiff_t>(b));
      doubled = static_cast<int>(a);
    }
    if (static_cast<int>(anchored.size()) != k - 1) continue;
    auto parts = absorb_free(anchored, bad, free);
    if (parts.empty()) continue;
    return FamilyB1Witness{u, parts, doubled};
  }
  return std::nullopt;
}

std::optional<FamilyB2Witness> b2_core(const Graph& g, int k) {
  const VertexSet universal = universal_vertices(g);
  if (universal.size() < k - 2) return std::nullopt;
  // Universal vertices are interchangeable, so the least ones stand for all.
  const VertexSet u_set = lowest(universal, k - 2);
  const VertexSet v_set = g.vertices() - u_set;
  if (!two_connected_not_three(g, v_set)) return std::nullopt;
  return FamilyB2Witness{u_set, v_set};
}

std::optional<FamilyB3Witness> b3_core(const Graph& g, int k) {
  const int n = g.order();
  const VertexSet universal = universal_vertices(g);
  if (universal.size() < k - 3) return std::nullopt;
  const VertexSet core = lowest(universal, k - 3);
  for (int x = 0; x < n; ++x) {
    if (g.degree(x) != n - 2) continue;
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y) || g.degree(y) != n - 2) continue;
      const VertexSet u_set = core | VertexSet{x, y};
      const VertexSet v_set = g.vertices() - u_set;
      if (has_cut_vertex(g, v_set)) return FamilyB3Witness{u_set, Edge{x, y}, v_set};
    }
  }
  return std::nullopt;
}

bool excluded_from_b(const Graph& g, int k) {
  return recognize_perfectly_connected(g, k).has_value() || recognize_family_A(g, k).has_value();
}

bool b_preconditions(const Graph& g, int k) {
  return k >= 3 && g.order() > 0 && g.is_connected() && vertex_connectivity(g) >= k;
}

}  // namespace

std::string_view to_string(JoinKind kind) {
  switch (kind) {
    case JoinKind::K2JoinPath:
      return "K2+P";
    case JoinKind::TwoK1JoinPath:
      return "2K1+P";
    case JoinKind::TwoK1JoinCycle:
      return "2K1+C";
  }
  return "?";
}

std::string_view family_name(const FamilyWitness& w) {
  struct Name {
    std::string_view operator()(const PerfectlyConnectedWitness&) const { return "perfectly-connected"; }
    std::string_view operator()(const FamilyAWitness&) const { return "A"; }
    std::string_view operator()(const FamilyB1Witness&) const { return "B1"; }
    std::string_view operator()(const FamilyB2Witness&) const { return "B2"; }
    std::string_view operator()(const FamilyB3Witness&) const { return "B3"; }
    std::string_view operator()(const P1Witness&) const { return "P1"; }
    std::string_view operator()(const P2Witness&) const { return "P2"; }
    std::string_view operator()(const SpecialJoinWitness&) const { return "special-join"; }
  };
  return std::visit(Name{}, w);
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) out.insert(v);
  }
  return out;
}

std::vector<VertexSet> complement_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet seen = VertexSet::single(rest.front());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= within - g.neighbors(v);
      next -= seen;
      seen |= next;
      frontier = next;
    }
    out.push_back(seen);
    rest -= seen;
  }
  return out;
}

bool is_fan(const Graph& g, VertexSet within) {
  if (within.size() < 2) return false;
  for (int u : within) {
    const VertexSet rest = within - VertexSet::single(u);
    if (rest.is_subset_of(g.neighbors(u)) && !path_order(g, rest).empty()) return true;
  }
  return false;
}

std::optional<PerfectlyConnectedWitness> recognize_perfectly_connected(const Graph& g, int s) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    const VertexSet nv = g.neighbors(v);
    if (nv.size() != s) continue;
    std::vector<VertexSet> anchored;
    std::vector<VertexSet> free;
    bool ok = true;
    for (VertexSet c : complement_components(g, g.vertices() - VertexSet::single(v))) {
      const int hits = (c & nv).size();
      if (hits == 0) {
        free.push_back(c);
      } else if (hits == 1) {
        anchored.push_back(c);
      } else {
        ok = false;
      }
    }
    if (!ok) continue;
    std::vector<bool> bad(anchored.size());
    for (std::size_t i = 0; i < anchored.size(); ++i) bad[i] = !g.is_connected(anchored[i]);
    auto parts = absorb_free(anchored, bad, free);
    if (parts.empty() && !(s == 0 && free.empty())) continue;
    return PerfectlyConnectedWitness{v, parts, s};
  }
  return std::nullopt;
}

std::optional<FamilyAWitness> recognize_family_A(const Graph& g, int k) {
  if (k < 2) return std::nullopt;
  const VertexSet universal = universal_vertices(g);
  if (universal.size() < k - 1) return std::nullopt;
  // Any two universal vertices are swapped by an automorphism, so the least
  // (k-1)-subset is as good as any other.
  const VertexSet clique = lowest(universal, k - 1);
  const VertexSet h = g.vertices() - clique;
  if (!has_cut_vertex(g, h)) return std::nullopt;
  for (int c : h) {
    if (!g.is_connected(h - VertexSet::single(c))) return FamilyAWitness{clique, h, c};
  }
  return std::nullopt;
}

std::optional<FamilyB1Witness> recognize_family_B1(const Graph& g, int k) {
  if (!b_preconditions(g, k)) return std::nullopt;
  auto w = b1_core(g, k);
  if (!w || excluded_from_b(g, k)) return std::nullopt;
  return w;
}

std::optional<FamilyB2Witness> recognize_family_B2(const Graph& g, int k) {
  if (!b_preconditions(g, k)) return std::nullopt;
  auto w = b2_core(g, k);
  if (!w || excluded_from_b(g, k)) return std::nullopt;
  return w;
}

std::optional<FamilyB3Witness> recognize_family_B3(const Graph& g, int k) {
  if (!b_preconditions(g, k)) return std::nullopt;
  auto w = b3_core(g, k);
  if (!w || excluded_from_b(g, k)) return std::nullopt;
  return w;
}

std::optional<FamilyWitness> recognize_family_B(const Graph& g, int k) {
  if (!b_preconditions(g, k) || excluded_from_b(g, k)) return std::nullopt;
  if (auto w = b1_core(g, k)) return FamilyWitness{*w};
  if (auto w = b2_core(g, k)) return FamilyWitness{*w};
  if (auto w = b3_core(g, k)) return FamilyWitness{*w};
  return std::nullopt;
}

std::optional<P1Witness> recognize_P1(const Graph& g) {
  for (int v : universal_vertices(g)) {
    const VertexSet h = g.vertices() - VertexSet::single(v);
    if (has_cut_vertex(g, h) && is_outerplanar(g.induced(h))) return P1Witness{v, h};
  }
  return std::nullopt;
}

std::optional<P2Witness> recognize_P2(const Graph& g) {
  for (int v : universal_vertices(g)) {
    const VertexSet h = g.vertices() - VertexSet::single(v);
    if (h.size() < 3 || connectivity_of(g, h) < 2) continue;
    if (is_fan(g, h) || !is_outerplanar(g.induced(h))) continue;
    return P2Witness{v, h};
  }
  return std::nullopt;
}

std::optional<SpecialJoinWitness> find_special_join(const Graph& g, JoinKind kind) {
  const int n = g.order();
  if (n < 4) return std::nullopt;
  const bool want_adjacent = kind == JoinKind::K2JoinPath;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b) != want_adjacent) continue;
      const VertexSet pair{a, b};
      const VertexSet rest = g.vertices() - pair;
      if (!completely_joined(g, pair, rest)) continue;
      auto spine = kind == JoinKind::TwoK1JoinCycle ? cycle_order(g, rest) : path_order(g, rest);
      if (!spine.empty()) return SpecialJoinWitness{kind, pair, std::move(spine)};
    }
  }
  return std::nullopt;
}

std::optional<SpecialJoinWitness> recognize_special_join(const Graph& g) {
  for (JoinKind kind : {JoinKind::K2JoinPath, JoinKind::TwoK1JoinPath, JoinKind::TwoK1JoinCycle}) {
    if (auto w = find_special_join(g, kind)) return w;
  }
  return std::nullopt;
}

namespace {

bool is_partition_of(const std::vector<VertexSet>& parts, VertexSet universe) {
  VertexSet seen;
  for (VertexSet p : parts) {
    if (p.empty() || p.intersects(seen)) return false;
    seen |= p;
  }
  return seen == universe;
}

bool parts_completely_joined(const Graph& g, const std::vector<VertexSet>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!completely_joined(g, parts[i], parts[j])) return false;
    }
  }
  return true;
}

bool in_range(const Graph& g, int v) { return v >= 0 && v < g.order(); }

struct Validator {
  const Graph& g;

  bool operator()(const PerfectlyConnectedWitness& w) const {
    if (!in_range(g, w.v) || static_cast<int>(w.parts.size()) != w.s) return false;
    if (!is_partition_of(w.parts, g.vertices() - VertexSet::single(w.v))) return false;
    if (!parts_completely_joined(g, w.parts)) return false;
    return std::all_of(w.parts.begin(), w.parts.end(), [&](VertexSet p) {
      return g.is_connected(p) && (g.neighbors(w.v) & p).size() == 1;
    });
  }

  bool operator()(const FamilyAWitness& w) const {
    const int k = w.clique.size() + 1;
    if (k < 2 || w.clique.intersects(w.h_vertices) || (w.clique | w.h_vertices) != g.vertices()) return false;
    if (!is_clique(g, w.clique) || !completely_joined(g, w.clique, w.h_vertices)) return false;
    if (!w.h_vertices.contains(w.h_cut_vertex) || !g.is_connected(w.h_vertices)) return false;
    return w.h_vertices.size() >= 3 && !g.is_connected(w.h_vertices - VertexSet::single(w.h_cut_vertex));
  }

  bool operator()(const FamilyB1Witness& w) const {
    const int k = static_cast<int>(w.parts.size()) + 1;
    if (k < 3 || !in_range(g, w.u) || w.t < 0 || w.t >= k - 1) return false;
    if (!is_partition_of(w.parts, g.vertices() - VertexSet::single(w.u))) return false;
    if (!parts_completely_joined(g, w.parts)) return false;
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
      const int want = static_cast<int>(i) == w.t ? 2 : 1;
      if ((g.neighbors(w.u) & w.parts[i]).size() != want) return false;
      if (!g.is_connected(w.parts[i] | VertexSet::single(w.u))) return false;
    }
    return vertex_connectivity(g) >= k && !excluded_from_b(g, k);
  }

  bool operator()(const FamilyB2Witness& w) const {
    const int k = w.u_set.size() + 2;
    if (k < 3 || w.u_set.intersects(w.v_set) || (w.u_set | w.v_set) != g.vertices()) return false;
    if (!is_clique(g, w.u_set) || !completely_joined(g, w.u_set, w.v_set)) return false;
    if (!two_connected_not_three(g, w.v_set)) return false;
    return vertex_connectivity(g) >= k && !excluded_from_b(g, k);
  }

  bool operator()(const FamilyB3Witness& w) const {
    const int k = w.u_set.size() + 1;
    const VertexSet pair{w.missing_pair.u, w.missing_pair.v};
    if (k < 3 || w.u_set.intersects(w.v_set) || (w.u_set | w.v_set) != g.vertices()) return false;
    if (pair.size() != 2 || !pair.is_subset_of(w.u_set) || g.adjacent(w.missing_pair.u, w.missing_pair.v)) {
      return false;
    }
    for (int a : w.u_set) {
      for (int b : w.u_set) {
        if (a < b && VertexSet{a, b} != pair && !g.adjacent(a, b)) return false;
      }
    }
    if (!completely_joined(g, w.u_set, w.v_set) || !has_cut_vertex(g, w.v_set)) return false;
    return vertex_connectivity(g) >= k && !excluded_from_b(g, k);
  }

  bool apex_split(int apex, VertexSet h) const {
    return in_range(g, apex) && h == g.vertices() - VertexSet::single(apex) &&
           h.is_subset_of(g.neighbors(apex));
  }

  bool operator()(const P1Witness& w) const {
    return apex_split(w.apex, w.h_vertices) && has_cut_vertex(g, w.h_vertices) &&
           is_outerplanar(g.induced(w.h_vertices));
  }

  bool operator()(const P2Witness& w) const {
    return apex_split(w.apex, w.h_vertices) && two_connected_not_three(g, w.h_vertices) &&
           is_outerplanar(g.induced(w.h_vertices)) && !is_fan(g, w.h_vertices);
  }

  bool operator()(const SpecialJoinWitness& w) const {
    if (w.a_set.size() != 2 || !w.a_set.is_subset_of(g.vertices())) return false;
    const int a = w.a_set.front();
    const int b = (w.a_set - VertexSet::single(a)).front();
    if (g.adjacent(a, b) != (w.kind == JoinKind::K2JoinPath)) return false;
    VertexSet spine;
    for (int v : w.spine) {
      if (!in_range(g, v) || spine.contains(v)) return false;
      spine.insert(v);
    }
    if (spine.intersects(w.a_set) || (spine | w.a_set) != g.vertices() || spine.empty()) return false;
    if (!completely_joined(g, w.a_set, spine)) return false;
    int inner = 0;
    for (int v : spine) inner += (g.neighbors(v) & spine).size();
    inner /= 2;
    const std::size_t len = w.spine.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
      if (!g.adjacent(w.spine[i], w.spine[i + 1])) return false;
    }
    if (w.kind == JoinKind::TwoK1JoinCycle) {
      return len >= 3 && g.adjacent(w.spine.back(), w.spine.front()) && inner == static_cast<int>(len);
    }
    return inner == static_cast<int>(len) - 1;
  }
};

}  // namespace

bool validate_witness(const Graph& g, const FamilyWitness& w) { return std::visit(Validator{g}, w); }

}  // namespace mcnum
