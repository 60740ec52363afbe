#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sperner {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with sorted neighbour lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Throws GraphNotSimple on loops, duplicates or out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  void add_edge(int u, int v);  // GraphNotSimple
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

  /// Edge list with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph without_edge(int u, int v) const;
  /// Drops `v`; higher-numbered vertices shift down by one.
  Graph without_vertex(int v) const;
  /// Relabels vertex i as perm[i].
  Graph permuted(const std::vector<int>& perm) const;
  Graph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Vertex colours 1..k, indexed by vertex.
using Colouring = std::vector<int>;

bool is_proper(const Graph& g, const Colouring& c);

}  // namespace sperner
