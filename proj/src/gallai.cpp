#include "sperner/gallai.hpp"

#include <algorithm>

#include "sperner/chromatic.hpp"

namespace sperner {

std::string to_string(Role r) {
  switch (r) {
    case Role::V1: return "V1";
    case Role::V2: return "V2";
    case Role::V3: return "V3";
  }
  return "?";
}

GallaiGraph build_gallai_graph(const SpernerInstance& s) {
  const auto& c = s.complex();
  GallaiGraph g;
  g.dim = s.dim();
  g.v1_count = static_cast<int>(c.vertex_count());
  g.v2_count = static_cast<int>(c.facet_count());
  g.v3_count = s.label_count();
  g.graph = Graph(g.v1_count + g.v2_count + g.v3_count);

  for (const auto& v : c.vertices()) g.vertices.push_back({Role::V1, v});
  for (std::size_t f = 0; f < c.facet_count(); ++f) {
    g.vertices.push_back({Role::V2, format_simplex(c.facet_names(f))});
  }
  for (Label j = 1; j <= s.label_count(); ++j) g.vertices.push_back({Role::V3, std::to_string(j)});

  for (std::size_t f = 0; f < c.facet_count(); ++f) {
    for (auto u : c.facets()[f]) g.graph.add_edge(g.v1(u), g.v2(f));
  }
  for (std::size_t u = 0; u < c.vertex_count(); ++u) {
    for (Label j = 1; j <= s.label_count(); ++j) {
      if (!s.allowed(static_cast<VertexIndex>(u)).contains(j)) g.graph.add_edge(g.v1(static_cast<VertexIndex>(u)), g.v3(j));
    }
  }
  for (Label i = 1; i <= s.label_count(); ++i) {
    for (Label j = i + 1; j <= s.label_count(); ++j) g.graph.add_edge(g.v3(i), g.v3(j));
  }
  return g;
}

std::vector<std::string> structure_violations(const GallaiGraph& g) {
  std::vector<std::string> out;
  auto role = [&](int v) { return g.vertices[static_cast<std::size_t>(v)].role; };
  for (auto [u, v] : g.graph.edges()) {
    const Role a = role(u), b = role(v);
    if (a == b && a != Role::V3) out.push_back(to_string(a) + " edge " + std::to_string(u) + "-" + std::to_string(v));
    if ((a == Role::V2 && b == Role::V3) || (a == Role::V3 && b == Role::V2)) {
      out.push_back("V2-V3 edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  for (Label i = 1; i <= g.v3_count; ++i) {
    for (Label j = i + 1; j <= g.v3_count; ++j) {
      if (!g.graph.has_edge(g.v3(i), g.v3(j))) out.push_back("V3 pair " + std::to_string(i) + "," + std::to_string(j) + " not adjacent");
    }
  }
  return out;
}

Colouring explicit_upper_colouring(const GallaiGraph& g) {
  Colouring c(static_cast<std::size_t>(g.graph.vertex_count()));
  for (std::size_t v = 0; v < c.size(); ++v) {
    switch (g.vertices[v].role) {
      case Role::V1: c[v] = g.dim + 2; break;
      case Role::V2: c[v] = 1; break;
      case Role::V3: c[v] = static_cast<int>(v) - g.v1_count - g.v2_count + 1; break;
    }
  }
  return c;
}

Certificate verify_equivalence(const SpernerInstance& s, const SearchOptions& opts) {
  const GallaiGraph g = build_gallai_graph(s);
  const auto colouring = is_k_colourable(g.graph, s.label_count());
  const Certificate sweep = verify_sperner_lemma(s, opts);
  const bool rainbow_free_exists = !sweep.passed();

  Certificate cert;
  cert.kind = "gallai-equivalence";
  cert.space_size = sweep.space_size;
  bool consistent = colouring.has_value() == rainbow_free_exists;

  if (colouring) {
    // Read a labelling off the colouring, normalising so that w_j has colour j.
    std::vector<int> rename(static_cast<std::size_t>(s.label_count()) + 1, 0);
    for (Label j = 1; j <= s.label_count(); ++j) rename[static_cast<std::size_t>((*colouring)[static_cast<std::size_t>(g.v3(j))])] = j;
    Labelling l(s.complex().vertex_count());
    for (std::size_t u = 0; u < l.size(); ++u) l[u] = rename[static_cast<std::size_t>((*colouring)[u])];
    const bool induced_ok = is_valid_sperner(s, l) && rainbow_facets(s, l).count() == 0;
    consistent = consistent && induced_ok;
    cert.witness = labelling_to_json(s, l);
    cert.details["inducedLabellingRainbowFree"] = induced_ok;
  } else if (sweep.witness.is_object()) {
    cert.witness = sweep.witness;
  }
  cert.status = consistent ? Status::Pass : Status::Fail;
  cert.details["colourable"] = colouring.has_value();
  cert.details["colours"] = s.label_count();
  cert.details["rainbowFreeLabellingExists"] = rainbow_free_exists;
  cert.details["graphVertices"] = g.graph.vertex_count();
  cert.details["graphEdges"] = g.graph.edge_count();
  return cert;
}

std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    const auto& a = g.neighbours(u);
    const auto& b = g.neighbours(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (a[i] > b[j]) {
        ++j;
      } else {
        if (a[i] > v) ++count;
        ++i;
        ++j;
      }
    }
  }
  return count;
}

}  // namespace sperner
