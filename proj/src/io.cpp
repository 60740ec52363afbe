#include "sperner/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sperner/error.hpp"

namespace sperner {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::IoFormat, e.what());
  }
}

namespace {

json facets_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (std::size_t f = 0; f < c.facet_count(); ++f) facets.push_back(c.facet_names(f));
  return facets;
}

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::IoFormat, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// Wraps nlohmann type errors so callers only see IoFormat.
template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::IoFormat, e.what());
  }
}

}  // namespace

json complex_to_json(const SimplicialComplex& c) {
  json vertices = json::array();
  for (const auto& v : c.vertices()) vertices.push_back({{"id", v}});
  return {{"dim", c.dim()}, {"vertices", vertices}, {"facets", facets_json(c)}};
}

json instance_to_json(const SpernerInstance& s, const std::optional<Simplex>& sigma) {
  const auto& c = s.complex();
  json vertices = json::array();
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    vertices.push_back({{"id", c.vertices()[v]}, {"support", s.supports()[v].labels()}});
  }
  json corners = json::object();
  for (Label l = 1; l <= s.label_count(); ++l) {
    corners[std::to_string(l)] = c.vertices()[static_cast<std::size_t>(s.corner(l))];
  }
  json j = {{"dim", s.dim()},
            {"labelCount", s.label_count()},
            {"vertices", vertices},
            {"corners", corners},
            {"facets", facets_json(c)}};
  if (sigma) j["sigma"] = make_simplex(*sigma);
  return j;
}

json symmetric_complex_to_json(const SymmetricComplex& c) {
  json j = complex_to_json(c.complex);
  json involution = json::object(), colour = json::object();
  const auto& names = c.complex.vertices();
  for (std::size_t v = 0; v < names.size(); ++v) {
    involution[names[v]] = names[static_cast<std::size_t>(c.involution[v])];
    colour[names[v]] = to_string(c.colour[v]);
  }
  j["involution"] = involution;
  j["colour"] = colour;
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  return guarded([&] {
    std::vector<Simplex> facets;
    for (const auto& f : field(j, "facets")) facets.push_back(make_simplex(f.get<std::vector<std::string>>()));
    SimplicialComplex c(facets);
    if (j.contains("vertices")) {
      std::vector<VertexId> listed;
      for (const auto& v : j.at("vertices")) listed.push_back(field(v, "id").get<std::string>());
      std::sort(listed.begin(), listed.end());
      if (listed != c.vertices()) bad("vertex list does not match the facets");
    }
    if (j.contains("dim") && j.at("dim").get<int>() != c.dim()) bad("dim does not match the facets");
    return c;
  });
}

SpernerInstance instance_from_json(const json& j) {
  return guarded([&] {
    SimplicialComplex c = complex_from_json(j);
    const int label_count = field(j, "labelCount").get<int>();
    if (label_count < 1 || label_count > kMaxLabels) bad("labelCount out of range");
    std::map<VertexId, LabelSet> supports;
    if (j.contains("vertices")) {
      for (const auto& v : j.at("vertices")) {
        if (!v.contains("support")) continue;
        const auto ls = v.at("support").get<std::vector<Label>>();
        for (auto l : ls) {
          if (l < 1 || l > label_count) bad("support label out of range");
        }
        supports[v.at("id").get<std::string>()] = LabelSet::of(ls);
      }
    }
    std::map<Label, VertexId> corners;
    for (const auto& [key, value] : field(j, "corners").items()) {
      int l = 0;
      try {
        l = std::stoi(key);
      } catch (const std::exception&) {
        bad("corner key \"" + key + "\" is not a label");
      }
      corners[l] = value.get<std::string>();
    }
    try {
      return SpernerInstance::from_named(std::move(c), label_count, supports, corners);
    } catch (const Error& e) {
      if (e.code() == Errc::UnknownVertex || e.code() == Errc::MalformedInstance) bad(e.what());
      throw;
    }
  });
}

std::optional<Simplex> sigma_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sigma")) return std::nullopt;
  return guarded([&] { return std::optional<Simplex>(make_simplex(j.at("sigma").get<std::vector<std::string>>())); });
}

SymmetricComplex symmetric_complex_from_json(const json& j) {
  return guarded([&] {
    SymmetricComplex out{complex_from_json(j), {}, {}, {}};
    const auto& inv = field(j, "involution");
    const auto& col = field(j, "colour");
    for (const auto& v : out.complex.vertices()) {
      if (!inv.contains(v) || !col.contains(v)) bad("no involution or colour for " + v);
      const auto idx = out.complex.index_of(inv.at(v).get<std::string>());
      if (!idx) bad("involution maps " + v + " outside the complex");
      out.involution.push_back(*idx);
      const auto colour = col.at(v).get<std::string>();
      if (colour != "black" && colour != "white") bad("colour must be black or white");
      out.colour.push_back(colour == "white" ? Colour::White : Colour::Black);
    }
    return out;
  });
}

Labelling labelling_from_json(const SpernerInstance& s, const json& j) {
  return guarded([&] {
    NamedLabelling named;
    for (const auto& [id, label] : field(j, "assignment").items()) named[id] = label.get<Label>();
    try {
      return densify(s, named);
    } catch (const Error& e) {
      bad(e.what());
    }
  });
}

std::string to_dimacs(const Graph& g, const std::vector<GallaiVertex>& roles) {
  std::ostringstream out;
  for (std::size_t v = 0; v < roles.size(); ++v) {
    out << "c role " << v + 1 << ' ' << to_string(roles[v].role) << ' ' << roles[v].provenance << '\n';
  }
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

DimacsGraph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::pair<int, GallaiVertex>> roles;
  int line_no = 0;
  auto fail = [&](const std::string& why) { bad("line " + std::to_string(line_no) + ": " + why); };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string tag;
    words >> tag;
    if (tag == "c") {
      std::string kind, role;
      int id = 0;
      if (!(words >> kind) || kind != "role") continue;
      if (!(words >> id >> role)) fail("malformed role comment");
      std::string provenance;
      std::getline(words >> std::ws, provenance);
      Role r{};
      if (role == "V1") {
        r = Role::V1;
      } else if (role == "V2") {
        r = Role::V2;
      } else if (role == "V3") {
        r = Role::V3;
      } else {
        fail("unknown role " + role);
      }
      roles.emplace_back(id, GallaiVertex{r, provenance});
    } else if (tag == "p") {
      std::string format;
      if (n >= 0) fail("second problem line");
      if (!(words >> format >> n >> m) || format != "edge" || n < 0 || m < 0) fail("expected \"p edge n m\"");
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (n < 0) fail("edge before problem line");
      if (!(words >> u >> v)) fail("expected \"e u v\"");
      if (u < 1 || v < 1 || u > n || v > n) fail("vertex id out of range");
      if (u == v) fail("loop at vertex " + std::to_string(u));
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second) fail("duplicate edge");
      edges.emplace_back(u - 1, v - 1);
    } else {
      fail("unknown line type \"" + tag + "\"");
    }
    std::string extra;
    if (tag != "c" && (words >> extra)) fail("trailing data");
  }
  if (n < 0) bad("missing problem line");
  if (static_cast<long long>(edges.size()) != m) bad("edge count does not match the problem line");

  DimacsGraph out;
  try {
    out.graph = Graph(n, edges);
  } catch (const Error& e) {
    bad(e.what());
  }
  out.roles.assign(static_cast<std::size_t>(n), std::nullopt);
  for (auto& [id, role] : roles) {
    if (id < 1 || id > n) bad("role for unknown vertex " + std::to_string(id));
    out.roles[static_cast<std::size_t>(id - 1)] = std::move(role);
  }
  return out;
}

std::vector<GallaiVertex> quotient_roles(const SymmetricComplex& c, const QuotientGraph& q) {
  std::vector<GallaiVertex> out;
  for (const auto& [first, second] : q.origin) {
    const auto v = static_cast<std::size_t>(c.complex.require_index(first));
    const std::string tag = v < c.origin.size() ? c.origin[v] : "";
    if (tag.size() > 3 && tag[0] == 'V' && tag[2] == ':') {
      const Role r = tag[1] == '1' ? Role::V1 : tag[1] == '2' ? Role::V2 : Role::V3;
      out.push_back({r, tag.substr(3)});
    } else {
      return {};
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoPath, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoPath, "cannot write " + path);
  out << contents;
  if (!out) throw Error(Errc::IoPath, "write failed for " + path);
}

}  // namespace sperner
