#include "sperner/planar.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "sperner/error.hpp"

namespace sperner {

namespace {

using PrimalEdge = std::pair<VertexIndex, VertexIndex>;

PrimalEdge ordered(VertexIndex a, VertexIndex b) { return a < b ? PrimalEdge{a, b} : PrimalEdge{b, a}; }

std::map<PrimalEdge, std::vector<std::size_t>> edge_faces(const std::vector<Triangle>& faces) {
  std::map<PrimalEdge, std::vector<std::size_t>> out;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& t = faces[f];
    for (int i = 0; i < 3; ++i) out[ordered(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 3)])].push_back(f);
  }
  return out;
}

}  // namespace

DiskTriangulation make_disk(const SpernerInstance& s) {
  const auto& c = s.complex();
  if (s.dim() != 2 || c.dim() != 2 || !c.is_pure()) throw Error(Errc::BadBoundary, "not a triangulated triangle");
  std::map<PrimalEdge, int> count;
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) ++count[ordered(f[i], f[j])];
    }
  }
  std::map<VertexIndex, std::vector<VertexIndex>> next;
  for (auto [e, n] : count) {
    if (n > 2) throw Error(Errc::BadBoundary, "edge in more than two triangles");
    if (n == 1) {
      next[e.first].push_back(e.second);
      next[e.second].push_back(e.first);
    }
  }
  for (const auto& [v, nb] : next) {
    if (nb.size() != 2) throw Error(Errc::BadBoundary, "boundary is not a cycle at " + c.vertices()[static_cast<std::size_t>(v)]);
  }

  std::array<VertexIndex, 3> corner{s.corner(1), s.corner(2), s.corner(3)};
  for (auto v : corner) {
    if (!next.count(v)) throw Error(Errc::BadBoundary, "corner off the boundary");
  }
  auto corner_index = [&](VertexIndex v) {
    const auto it = std::find(corner.begin(), corner.end(), v);
    return it == corner.end() ? -1 : static_cast<int>(it - corner.begin());
  };

  // Walk the cycle from corner 1 in the direction that meets corner 2 first.
  std::vector<VertexIndex> cycle;
  for (auto start : next.at(corner[0])) {
    cycle = {corner[0]};
    VertexIndex prev = corner[0], cur = start;
    while (cur != corner[0]) {
      cycle.push_back(cur);
      const auto& nb = next.at(cur);
      const VertexIndex step = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = step;
    }
    const auto first = std::find_if(cycle.begin() + 1, cycle.end(), [&](VertexIndex v) { return corner_index(v) >= 0; });
    if (first != cycle.end() && *first == corner[1]) break;
  }
  if (cycle.size() != next.size()) throw Error(Errc::BadBoundary, "boundary has more than one cycle");

  DiskTriangulation out{s, {}};
  int arc = 0;
  for (std::size_t i = 0; i <= cycle.size(); ++i) {
    const VertexIndex v = cycle[i % cycle.size()];
    out.arcs[static_cast<std::size_t>(arc)].push_back(v);
    if (i > 0 && corner_index(v) >= 0) {
      if (v != corner[static_cast<std::size_t>((arc + 1) % 3)]) throw Error(Errc::BadBoundary, "corners out of order");
      if (++arc < 3) out.arcs[static_cast<std::size_t>(arc)].push_back(v);
    }
  }
  for (int a = 0; a < 3; ++a) {
    const LabelSet allowed = LabelSet::single(a + 1) | LabelSet::single((a + 1) % 3 + 1);
    for (auto v : out.arcs[static_cast<std::size_t>(a)]) {
      if (!s.allowed(v).subset_of(allowed)) {
        throw Error(Errc::BadBoundary, "support of " + c.vertices()[static_cast<std::size_t>(v)] + " leaves its arc");
      }
    }
  }
  return out;
}

PlanarSphere extend_to_sphere(const DiskTriangulation& k) {
  const auto& c = k.instance.complex();
  PlanarSphere out;
  out.vertices = c.vertices();
  for (const auto& f : c.facets()) out.faces.push_back({f[0], f[1], f[2]});
  out.disk_faces = out.faces.size();
  for (const auto& arc : k.arcs) {
    for (std::size_t m = 1; m + 1 < arc.size(); ++m) out.faces.push_back({arc.front(), arc[m], arc[m + 1]});
  }
  out.tau = out.faces.size();
  out.faces.push_back({k.instance.corner(1), k.instance.corner(2), k.instance.corner(3)});

  for (const auto& [e, fs] : edge_faces(out.faces)) {
    if (fs.size() != 2) {
      throw Error(Errc::BadBoundary, "closing fan meets edge " + out.vertices[static_cast<std::size_t>(e.first)] + "," +
                                         out.vertices[static_cast<std::size_t>(e.second)] + " " +
                                         std::to_string(fs.size()) + " times");
    }
  }
  if (euler_characteristic(out) != 2) throw Error(Errc::BadBoundary, "closed surface is not a sphere");
  return out;
}

long long euler_characteristic(const PlanarSphere& s) {
  return static_cast<long long>(s.vertices.size()) - static_cast<long long>(edge_faces(s.faces).size()) +
         static_cast<long long>(s.faces.size());
}

DualPathSystem three_disjoint_dual_paths(const PlanarSphere& s, std::size_t sigma, std::size_t tau) {
  const std::size_t n = s.faces.size();
  if (sigma >= n || tau >= n || sigma == tau) throw Error(Errc::BadParams, "sigma and tau must be distinct faces");

  // Node 2f is face f entering, 2f+1 leaving. Arcs come in forward/backward pairs.
  struct Arc {
    std::size_t to;
    int cap;
    PrimalEdge edge;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(2 * n);
  auto add = [&](std::size_t a, std::size_t b, PrimalEdge e) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, 1, e});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0, e});
  };
  for (std::size_t f = 0; f < n; ++f) add(2 * f, 2 * f + 1, {-1, -1});
  const auto lune = [&](std::size_t f) { return f >= s.disk_faces && f < s.tau; };
  const auto disk = [&](std::size_t f) { return f < s.disk_faces; };
  for (const auto& [e, fs] : edge_faces(s.faces)) {
    if (fs.size() != 2) throw Error(Errc::FlowLessThan3, "not a closed surface");
    if (!(lune(fs[0]) && disk(fs[1]))) add(2 * fs[0] + 1, 2 * fs[1], e);
    if (!(lune(fs[1]) && disk(fs[0]))) add(2 * fs[1] + 1, 2 * fs[0], e);
  }

  const std::size_t source = 2 * sigma + 1, sink = 2 * tau;
  int flow = 0;
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  while (flow < 3) {
    std::vector<std::size_t> via(2 * n, none);
    std::queue<std::size_t> q;
    q.push(source);
    std::vector<bool> seen(2 * n, false);
    seen[source] = true;
    while (!q.empty() && !seen[sink]) {
      const auto u = q.front();
      q.pop();
      for (auto a : out[u]) {
        if (arcs[a].cap == 0 || seen[arcs[a].to]) continue;
        seen[arcs[a].to] = true;
        via[arcs[a].to] = a;
        q.push(arcs[a].to);
      }
    }
    if (!seen[sink]) break;
    for (auto v = sink; v != source;) {
      const auto a = via[v];
      --arcs[a].cap;
      ++arcs[a ^ 1].cap;
      v = arcs[a ^ 1].to;
    }
    ++flow;
  }
  if (flow < 3) throw Error(Errc::FlowLessThan3, "dual flow is " + std::to_string(flow));

  // Forward arcs that ended up saturated carry the flow.
  DualPathSystem paths;
  for (int p = 0; p < 3; ++p) {
    std::vector<std::size_t> faces{sigma};
    std::vector<PrimalEdge> crossed;
    std::size_t u = source;
    while (u != sink) {
      const auto it = std::find_if(out[u].begin(), out[u].end(), [&](std::size_t a) { return a % 2 == 0 && arcs[a].cap == 0; });
      if (it == out[u].end()) throw Error(Errc::InvariantViolation, "flow decomposition stalled");
      const auto a = *it;
      ++arcs[a].cap;  // consume
      if (arcs[a].edge.first >= 0) {
        crossed.push_back(arcs[a].edge);
        faces.push_back(arcs[a].to / 2);
      }
      u = arcs[a].to;
    }
    paths.faces.push_back(std::move(faces));
    paths.crossed.push_back(std::move(crossed));
  }

  std::vector<int> used(n, 0);
  for (const auto& path : paths.faces) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++used[path[i]];
  }
  if (std::any_of(used.begin(), used.end(), [](int u) { return u > 1; })) {
    throw Error(Errc::InvariantViolation, "dual paths share a face");
  }
  return paths;
}

Labelling region_labelling(const PlanarSphere& s, const DualPathSystem& paths, std::size_t sigma,
                           const std::array<VertexIndex, 3>& corners) {
  std::set<PrimalEdge> crossed;
  for (const auto& path : paths.crossed) crossed.insert(path.begin(), path.end());

  std::vector<VertexIndex> parent(s.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexIndex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (const auto& [e, fs] : edge_faces(s.faces)) {
    if (!crossed.count(e)) parent[static_cast<std::size_t>(find(e.first))] = find(e.second);
  }

  std::set<VertexIndex> roots;
  for (std::size_t v = 0; v < parent.size(); ++v) roots.insert(find(static_cast<VertexIndex>(v)));
  if (roots.size() != 3) {
    throw Error(Errc::RegionDecompositionFailed, std::to_string(roots.size()) + " components after cutting");
  }
  std::map<VertexIndex, Label> label_of_root;
  for (int i = 0; i < 3; ++i) label_of_root[find(corners[static_cast<std::size_t>(i)])] = i + 1;
  if (label_of_root.size() != 3) throw Error(Errc::RegionDecompositionFailed, "two corners share a component");
  std::set<VertexIndex> sigma_roots;
  for (auto v : s.faces[sigma]) sigma_roots.insert(find(v));
  if (sigma_roots.size() != 3) throw Error(Errc::RegionDecompositionFailed, "two vertices of sigma share a component");

  Labelling l(s.vertices.size());
  for (std::size_t v = 0; v < l.size(); ++v) l[v] = label_of_root.at(find(static_cast<VertexIndex>(v)));
  return l;
}

PlanarResult unique_rainbow_labelling_2d(const DiskTriangulation& k, const Simplex& sigma, const PlanarOptions& opts) {
  const auto& s = k.instance;
  const std::size_t facet = s.complex().require_facet(make_simplex(sigma));
  PlanarResult result;
  std::string failure;
  try {
    const PlanarSphere sphere = extend_to_sphere(k);
    result.paths = three_disjoint_dual_paths(sphere, facet, sphere.tau);
    result.labelling = region_labelling(sphere, result.paths, facet, {s.corner(1), s.corner(2), s.corner(3)});
    if (!is_valid_sperner(s, result.labelling)) {
      failure = "labelling violates the Sperner condition";
    } else {
      const auto rainbow = rainbow_facets(s, result.labelling);
      if (rainbow.facet_indices != std::vector<std::size_t>{facet}) {
        failure = std::to_string(rainbow.count()) + " rainbow facets";
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::RegionDecompositionFailed || !opts.fallback_exhaustive) throw;
    failure = e.what();
  }
  if (failure.empty()) return result;
  if (!opts.fallback_exhaustive) throw Error(Errc::ValidationFailed, failure);

  auto witness = unique_rainbow_witness(s, facet, opts.search);
  if (!witness) throw Error(Errc::ValidationFailed, failure + "; exhaustive search found nothing either");
  result.labelling = std::move(*witness);
  result.fallback_used = true;
  return result;
}

SpernerInstance triangle_grid(int side) {
  if (side < 1 || side > 9) throw Error(Errc::BadParams, "grid side must lie in 1..9");
  auto name = [&](int a, int b) {
    const int c = side - a - b;
    if (a == side) return std::string("v1");
    if (b == side) return std::string("v2");
    if (c == side) return std::string("v3");
    return "g" + std::to_string(a) + std::to_string(b) + std::to_string(c);
  };
  std::vector<Simplex> facets;
  std::map<VertexId, LabelSet> supports;
  for (int a = 0; a <= side; ++a) {
    for (int b = 0; a + b <= side; ++b) {
      LabelSet sup;
      if (a > 0) sup = sup | LabelSet::single(1);
      if (b > 0) sup = sup | LabelSet::single(2);
      if (side - a - b > 0) sup = sup | LabelSet::single(3);
      supports[name(a, b)] = sup;
      if (a + b < side) facets.push_back(make_simplex({name(a, b), name(a + 1, b), name(a, b + 1)}));
      if (a + b < side - 1) facets.push_back(make_simplex({name(a + 1, b), name(a, b + 1), name(a + 1, b + 1)}));
    }
  }
  return SpernerInstance::from_named(SimplicialComplex(facets), 3, supports, {{1, "v1"}, {2, "v2"}, {3, "v3"}});
}

namespace {

const std::map<Label, VertexId> kCorners{{1, "v1"}, {2, "v2"}, {3, "v3"}};

LabelSet labels(std::initializer_list<Label> ls) { return LabelSet::of(ls); }

SpernerInstance disk(const std::vector<std::string>& triangles, std::map<VertexId, LabelSet> supports) {
  std::vector<Simplex> facets;
  for (const auto& t : triangles) facets.push_back(parse_simplex(t));
  supports["v1"] = labels({1});
  supports["v2"] = labels({2});
  supports["v3"] = labels({3});
  return SpernerInstance::from_named(SimplicialComplex(facets), 3, supports, kCorners);
}

SpernerInstance subdivided(const SpernerInstance& s, std::size_t facet, const VertexId& apex) {
  const auto& c = s.complex();
  std::map<VertexId, LabelSet> supports;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) supports[c.vertices()[v]] = s.supports()[v];
  supports[apex] = LabelSet::full(3);
  return SpernerInstance::from_named(stellar_subdivide_facet(c, c.facet_names(facet), apex), 3, supports, kCorners);
}

}  // namespace

std::vector<CorpusEntry> planar_corpus() {
  std::vector<CorpusEntry> out;
  const auto trivial = disk({"v1,v2,v3"}, {});
  out.push_back({"trivial", trivial});
  const auto single = subdivided(trivial, 0, "x1");
  out.push_back({"stellar-1", single});
  for (std::size_t f = 0; f < single.complex().facet_count(); ++f) {
    out.push_back({"stellar-2-" + std::to_string(f), subdivided(single, f, "x2")});
  }

  const LabelSet s12 = labels({1, 2}), s13 = labels({1, 3}), s23 = labels({2, 3});
  out.push_back({"midpoint",
                 disk({"v1,m12,m13", "v2,m12,m23", "v3,m13,m23", "m12,m13,m23"},
                      {{"m12", s12}, {"m13", s13}, {"m23", s23}})});
  out.push_back({"barycentric",
                 disk({"v1,m12,c", "m12,v2,c", "v2,m23,c", "m23,v3,c", "v3,m13,c", "m13,v1,c"},
                      {{"m12", s12}, {"m13", s13}, {"m23", s23}, {"c", LabelSet::full(3)}})});
  out.push_back({"ten-vertex",
                 disk({"v1,v112,v113", "v112,v113,v0", "v112,v122,v0", "v122,v223,v0", "v122,v2,v223",
                       "v223,v233,v0", "v233,v133,v0", "v233,v3,v133", "v133,v113,v0"},
                      {{"v112", s12}, {"v122", s12}, {"v113", s13}, {"v133", s13}, {"v223", s23},
                       {"v233", s23}, {"v0", LabelSet::full(3)}})});
  out.push_back({"grid-3", triangle_grid(3)});
  out.push_back({"grid-4", triangle_grid(4)});
  return out;
}

}  // namespace sperner
