#pragma once

#include <string>
#include <vector>

#include "sperner/certificate.hpp"
#include "sperner/graph.hpp"
#include "sperner/sperner.hpp"

namespace sperner {

enum class Role { V1, V2, V3 };

std::string to_string(Role r);

struct GallaiVertex {
  Role role;
  /// V1: vertex name in K. V2: facet of K as "a,b,...". V3: the label j of
  /// the corner opposite the simplex facet this vertex stands for.
  std::string provenance;
};

/// Graph whose (d+1)-colourings are exactly the rainbow-free Sperner
/// labellings. Vertex layout: V1 (one per vertex of K, in K's order), then
/// V2 (one per facet, in K's order), then V3 (labels 1..d+1).
struct GallaiGraph {
  Graph graph;
  std::vector<GallaiVertex> vertices;
  int dim = 0;
  int v1_count = 0;
  int v2_count = 0;
  int v3_count = 0;

  int v1(VertexIndex u) const { return u; }
  int v2(std::size_t facet) const { return v1_count + static_cast<int>(facet); }
  int v3(Label j) const { return v1_count + v2_count + j - 1; }
};

/// E1: vertex–facet incidence. E2: u–w_j iff j is outside support(u).
/// E3: the w_j form a clique.
GallaiGraph build_gallai_graph(const SpernerInstance& s);

/// Empty when V1 and V2 are independent, V3 is a clique and there are no
/// V2–V3 edges; otherwise one message per broken rule.
std::vector<std::string> structure_violations(const GallaiGraph& g);

/// V3 gets 1..d+1, V2 gets 1, V1 gets d+2.
Colouring explicit_upper_colouring(const GallaiGraph& g);

/// Decides "G_K is (d+1)-colourable" by exact colouring and "some valid
/// labelling has no rainbow facet" by exhaustive sweep; PASS when they agree.
Certificate verify_equivalence(const SpernerInstance& s, const SearchOptions& opts = {});

std::size_t triangle_count(const Graph& g);

}  // namespace sperner
