#include "named_graphs.hpp"

#include <fstream>
#include <stdexcept>

namespace mcnum::testing {

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

}  // namespace

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_multipartite(const std::vector<int>& sizes) {
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  const int n = static_cast<int>(part.size());
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

Graph fan4() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }

Graph wheel5() { return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

Graph k2_join_p3() {
  return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
}

Graph octahedron() {
  return from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
}

Graph cube_q3() {
  GraphBuilder b(8);
  for (int u = 0; u < 8; ++u) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((u & bit) == 0) b.add_edge(u, u | bit);
    }
  }
  return b.build();
}

Graph k33() { return complete_multipartite({3, 3}); }

Graph petersen() {
  return from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph icosahedron() {
  GraphBuilder b(12);
  for (int i = 1; i <= 5; ++i) {
    b.add_edge(0, i);
    b.add_edge(11, 5 + i);
    b.add_edge(i, i % 5 + 1);
    b.add_edge(5 + i, i % 5 + 6);
    b.add_edge(i, 5 + i);
    b.add_edge(i, i % 5 + 6);
  }
  return b.build();
}

std::string fixture_path(const std::string& name) { return std::string(MCNUM_FIXTURE_DIR) + "/" + name; }

std::vector<std::string> fixture_lines(int n) {
  std::ifstream in(fixture_path("connected_n" + std::to_string(n) + ".g6"));
  if (!in) throw std::runtime_error("missing fixture for n=" + std::to_string(n));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace mcnum::testing
