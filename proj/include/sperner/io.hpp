#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sperner/gallai.hpp"
#include "sperner/graph.hpp"
#include "sperner/projective.hpp"
#include "sperner/sperner.hpp"

namespace sperner {

/// Canonical text: sorted keys, two-space indent, trailing LF.
std::string dump(const nlohmann::json& j);

nlohmann::json parse_json_text(const std::string& text);  // IoFormat

nlohmann::json complex_to_json(const SimplicialComplex& c);
nlohmann::json instance_to_json(const SpernerInstance& s, const std::optional<Simplex>& sigma = std::nullopt);
nlohmann::json symmetric_complex_to_json(const SymmetricComplex& c);

SimplicialComplex complex_from_json(const nlohmann::json& j);
/// Missing supports default to the full label set.
SpernerInstance instance_from_json(const nlohmann::json& j);
std::optional<Simplex> sigma_from_json(const nlohmann::json& j);
/// Origin tags are not part of the format and come back empty.
SymmetricComplex symmetric_complex_from_json(const nlohmann::json& j);

Labelling labelling_from_json(const SpernerInstance& s, const nlohmann::json& j);

struct DimacsGraph {
  Graph graph;
  std::vector<std::optional<GallaiVertex>> roles;  // from "c role" lines
};

/// "p edge n m" followed by "e u v" lines with 1-based ids; roles, when
/// given, become "c role <id> V1|V2|V3 <provenance>" comments.
std::string to_dimacs(const Graph& g, const std::vector<GallaiVertex>& roles = {});
DimacsGraph parse_dimacs(const std::string& text);  // IoFormat

/// Role annotations for a quotient graph, read off the origin tags.
std::vector<GallaiVertex> quotient_roles(const SymmetricComplex& c, const QuotientGraph& q);

std::string read_file(const std::string& path);                          // IoPath
void write_file(const std::string& path, const std::string& contents);  // IoPath

}  // namespace sperner
