#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sperner/graph.hpp"

namespace sperner {

/// Exact k-colouring by backtracking: a greedy clique is pre-coloured
/// 1..q, then vertices are taken in saturation-degree order and a colour
/// beyond the largest one in use is only ever tried once. Throws BadParams
/// for k < 1.
std::optional<Colouring> is_k_colourable(const Graph& g, int k);

/// Exact chromatic number (0 for the empty graph).
int chromatic_number(const Graph& g);

struct CriticalityReport {
  int k = 0;
  int chromatic = 0;
  bool is_chromatic_k = false;
  /// Edges whose deletion leaves the graph k-chromatic.
  std::vector<Edge> non_critical_edges;
  /// χ(G−e) >= k−1 held for every edge.
  bool deletion_bound_holds = true;
  bool critical() const { return is_chromatic_k && non_critical_edges.empty(); }
  nlohmann::json to_json() const;
};

/// Recomputes χ(g) (ChiMismatch unless it equals k) and decides
/// (k−1)-colourability of every single-edge deletion.
CriticalityReport criticality_report(const Graph& g, int k, int jobs = 1);

struct VertexCriticalityReport {
  int k = 0;
  int chromatic = 0;
  std::vector<int> non_critical_vertices;
  bool critical() const { return chromatic == k && non_critical_vertices.empty(); }
  nlohmann::json to_json() const;
};

VertexCriticalityReport vertex_criticality_report(const Graph& g, int k, int jobs = 1);

struct OddCycle {
  std::vector<int> cycle;  // consecutive vertices, closing edge back to the front
};

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
};

std::variant<OddCycle, Bipartition> odd_cycle_or_bipartition(const Graph& g);

}  // namespace sperner
