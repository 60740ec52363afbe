#include "sperner/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sperner/error.hpp"

namespace sperner {

Simplex make_simplex(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(Errc::RepeatedVertex, "simplex {" + format_simplex(vertices) + "}");
  }
  return vertices;
}

Simplex parse_simplex(const std::string& text) {
  std::vector<VertexId> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return make_simplex(std::move(out));
}

std::string format_simplex(const Simplex& s, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += s[i];
  }
  return out;
}

namespace {

bool is_subset(const IndexSimplex& small, const IndexSimplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(const std::vector<Simplex>& facets) {
  std::set<VertexId> vertex_names;
  std::vector<Simplex> sorted;
  sorted.reserve(facets.size());
  for (const auto& f : facets) {
    sorted.push_back(make_simplex(f));
    vertex_names.insert(sorted.back().begin(), sorted.back().end());
  }
  vertices_.assign(vertex_names.begin(), vertex_names.end());

  facets_.reserve(sorted.size());
  for (const auto& f : sorted) facets_.push_back(to_indices(f));
  std::sort(facets_.begin(), facets_.end());
  auto dup = std::adjacent_find(facets_.begin(), facets_.end());
  if (dup != facets_.end()) {
    throw Error(Errc::DuplicateFacet, "facet {" + format_simplex(names(*dup)) + "}");
  }

  // Facets are sorted lexicographically, so a larger facet can still precede
  // a subset of it; compare all pairs with differing sizes.
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && facets_[i].size() < facets_[j].size() && is_subset(facets_[i], facets_[j])) {
        throw Error(Errc::NonMaximalFacet, "{" + format_simplex(names(facets_[i])) +
                                               "} is contained in {" +
                                               format_simplex(names(facets_[j])) + "}");
      }
    }
  }

  dim_ = -1;
  for (const auto& f : facets_) dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
  pure_ = std::all_of(facets_.begin(), facets_.end(),
                      [&](const IndexSimplex& f) { return static_cast<int>(f.size()) - 1 == dim_; });
}

SimplicialComplex SimplicialComplex::empty_simplex() {
  SimplicialComplex c;
  c.facets_.push_back({});
  return c;
}

std::optional<VertexIndex> SimplicialComplex::index_of(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

VertexIndex SimplicialComplex::require_index(const VertexId& v) const {
  auto i = index_of(v);
  if (!i) throw Error(Errc::UnknownVertex, "vertex '" + v + "'");
  return *i;
}

IndexSimplex SimplicialComplex::to_indices(const Simplex& s) const {
  IndexSimplex out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(require_index(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> SimplicialComplex::find_facet(const IndexSimplex& s) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), s);
  if (it == facets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

std::optional<std::size_t> SimplicialComplex::find_facet(const Simplex& s) const {
  IndexSimplex idx;
  for (const auto& v : s) {
    auto i = index_of(v);
    if (!i) return std::nullopt;
    idx.push_back(*i);
  }
  std::sort(idx.begin(), idx.end());
  return find_facet(idx);
}

std::size_t SimplicialComplex::require_facet(const Simplex& s) const {
  auto f = find_facet(s);
  if (!f) throw Error(Errc::NotAFacet, "{" + format_simplex(s) + "}");
  return *f;
}

Simplex SimplicialComplex::names(const IndexSimplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (auto i : s) out.push_back(vertices_.at(static_cast<std::size_t>(i)));
  return out;
}

std::vector<Simplex> SimplicialComplex::facet_list() const {
  std::vector<Simplex> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(names(f));
  return out;
}

std::vector<std::vector<IndexSimplex>> faces_by_dimension(const SimplicialComplex& c) {
  std::vector<std::set<IndexSimplex>> faces(static_cast<std::size_t>(std::max(c.dim() + 1, 0)));
  for (const auto& f : c.facets()) {
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      IndexSimplex face;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::uint64_t{1} << b)) face.push_back(f[b]);
      }
      faces[face.size() - 1].insert(std::move(face));
    }
  }
  std::vector<std::vector<IndexSimplex>> out;
  for (auto& s : faces) out.emplace_back(s.begin(), s.end());
  return out;
}

std::map<IndexSimplex, std::vector<std::size_t>> ridge_incidence(const SimplicialComplex& c) {
  std::map<IndexSimplex, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    const auto& f = c.facets()[i];
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      IndexSimplex ridge;
      ridge.reserve(f.size() - 1);
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != skip) ridge.push_back(f[j]);
      }
      out[ridge].push_back(i);
    }
  }
  return out;
}

std::vector<std::pair<VertexIndex, VertexIndex>> edges(const SimplicialComplex& c) {
  std::set<std::pair<VertexIndex, VertexIndex>> out;
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) out.emplace(f[i], f[j]);
    }
  }
  return {out.begin(), out.end()};
}

bool one_skeleton_connected(const SimplicialComplex& c) {
  const auto n = c.vertex_count();
  if (n == 0) return true;
  std::vector<VertexIndex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& f : c.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) {
      auto a = find(f[0]), b = find(f[i]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

StructureReport validate_complex(const SimplicialComplex& c) {
  if (c.facet_count() == 0) throw Error(Errc::BadInput, "complex has no facets");
  StructureReport r;
  r.pure = c.is_pure();

  auto faces = faces_by_dimension(c);
  long long sign = 1;
  for (const auto& layer : faces) {
    r.f_vector.push_back(layer.size());
    r.euler_char += sign * static_cast<long long>(layer.size());
    sign = -sign;
  }

  if (r.pure && c.dim() >= 1) {
    r.pseudomanifold = true;
    for (const auto& [ridge, owners] : ridge_incidence(c)) {
      if (owners.size() > 2) r.pseudomanifold = false;
      if (owners.size() == 1) r.boundary_faces.push_back(c.names(ridge));
    }
  } else if (r.pure && c.dim() == 0) {
    // Points: the only ridge is the empty face.
    r.pseudomanifold = c.facet_count() <= 2;
  }
  return r;
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  for (const auto& v : k.vertices()) {
    if (l.index_of(v)) throw Error(Errc::VertexClash, "vertex '" + v + "' is in both complexes");
  }
  std::vector<Simplex> facets;
  facets.reserve(k.facet_count() * l.facet_count());
  for (const auto& a : k.facet_list()) {
    for (const auto& b : l.facet_list()) {
      Simplex u = a;
      u.insert(u.end(), b.begin(), b.end());
      facets.push_back(std::move(u));
    }
  }
  if (facets.size() == 1 && facets.front().empty()) return SimplicialComplex::empty_simplex();
  return SimplicialComplex(facets);
}

SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& c, const Simplex& f,
                                          const VertexId& new_vertex) {
  const auto target = c.require_facet(make_simplex(f));
  if (c.index_of(new_vertex)) throw Error(Errc::VertexClash, "vertex '" + new_vertex + "' exists");
  std::vector<Simplex> facets;
  facets.reserve(c.facet_count() + f.size());
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    if (i != target) facets.push_back(c.facet_names(i));
  }
  const Simplex old = c.facet_names(target);
  for (std::size_t skip = 0; skip < old.size(); ++skip) {
    Simplex cone{new_vertex};
    for (std::size_t j = 0; j < old.size(); ++j) {
      if (j != skip) cone.push_back(old[j]);
    }
    facets.push_back(std::move(cone));
  }
  return SimplicialComplex(facets);
}

SimplicialComplex remove_facet(const SimplicialComplex& c, const Simplex& f) {
  const auto target = c.require_facet(make_simplex(f));
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < c.facet_count(); ++i) {
    if (i != target) facets.push_back(c.facet_names(i));
  }
  return SimplicialComplex(facets);
}

namespace {

struct IsoData {
  std::size_t n = 0;
  std::vector<std::uint64_t> facet_masks;
  std::unordered_set<std::uint64_t> facet_set;
  std::vector<int> degree;
  std::vector<std::vector<int>> together;  // facets containing both u and v
};

IsoData iso_data(const SimplicialComplex& c) {
  IsoData d;
  d.n = c.vertex_count();
  d.degree.assign(d.n, 0);
  d.together.assign(d.n, std::vector<int>(d.n, 0));
  for (const auto& f : c.facets()) {
    std::uint64_t m = 0;
    for (auto v : f) {
      m |= std::uint64_t{1} << v;
      ++d.degree[v];
    }
    for (auto u : f) {
      for (auto v : f) {
        if (u != v) ++d.together[u][v];
      }
    }
    d.facet_masks.push_back(m);
    d.facet_set.insert(m);
  }
  return d;
}

}  // namespace

IsomorphismResult complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                                       IsomorphismOptions options) {
  const std::size_t limit = std::min<std::size_t>(options.max_vertices, 64);
  if (a.vertex_count() > limit || b.vertex_count() > limit) {
    throw Error(Errc::TooLarge, "isomorphism search is bounded at " + std::to_string(limit) +
                                    " vertices");
  }
  IsomorphismResult result;
  if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count() ||
      a.dim() != b.dim()) {
    return result;
  }
  const IsoData da = iso_data(a), db = iso_data(b);
  {
    auto sa = da.degree, sb = db.degree;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return result;
  }
  const std::size_t n = da.n;

  // Facets of `a` are checked as soon as their last vertex (in search order)
  // is mapped.
  std::vector<std::vector<std::uint64_t>> closing(n);
  for (auto m : da.facet_masks) {
    int last = 63 - __builtin_clzll(m);
    closing[static_cast<std::size_t>(last)].push_back(m);
  }

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  auto map_mask = [&](std::uint64_t m) {
    std::uint64_t out = 0;
    while (m) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      out |= std::uint64_t{1} << image[static_cast<std::size_t>(v)];
    }
    return out;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    ++result.nodes_explored;
    if (i == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || da.degree[i] != db.degree[cand]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = da.together[i][j] == db.together[cand][static_cast<std::size_t>(image[j])];
      }
      if (!ok) continue;
      image[i] = static_cast<int>(cand);
      used[cand] = true;
      for (auto m : closing[i]) {
        if (!db.facet_set.count(map_mask(m))) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
      used[cand] = false;
      image[i] = -1;
    }
    return false;
  };

  if (search(search, 0)) {
    std::map<VertexId, VertexId> bij;
    for (std::size_t i = 0; i < n; ++i) {
      bij[a.vertices()[i]] = b.vertices()[static_cast<std::size_t>(image[i])];
    }
    result.bijection = std::move(bij);
  }
  return result;
}

}  // namespace sperner
