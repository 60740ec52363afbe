#include "sperner/graph.hpp"

#include <algorithm>
#include <string>

#include "sperner/error.hpp"

namespace sperner {

Graph::Graph(int n, const std::vector<Edge>& edges) : adj_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(Errc::GraphNotSimple, "edge endpoint out of range");
  }
  if (u == v) throw Error(Errc::GraphNotSimple, "loop at " + std::to_string(u));
  auto& a = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) {
    throw Error(Errc::GraphNotSimple, "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  a.insert(it, v);
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = neighbours(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  auto drop = [](std::vector<int>& a, int x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it != a.end() && *it == x) a.erase(it);
  };
  if (has_edge(u, v)) {
    drop(g.adj_[static_cast<std::size_t>(u)], v);
    drop(g.adj_[static_cast<std::size_t>(v)], u);
    --g.edge_count_;
  }
  return g;
}

Graph Graph::without_vertex(int x) const {
  Graph g(vertex_count() - 1);
  auto shift = [x](int v) { return v > x ? v - 1 : v; };
  for (auto [u, v] : edges()) {
    if (u != x && v != x) g.add_edge(shift(u), shift(v));
  }
  return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  Graph g(vertex_count());
  for (auto [u, v] : edges()) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

bool is_proper(const Graph& g, const Colouring& c) {
  if (c.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (auto [u, v] : g.edges()) {
    if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

}  // namespace sperner
