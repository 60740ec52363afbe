#include <variant>

#include "doctest.h"
#include "sperner/chromatic.hpp"
#include "sperner/counterexample.hpp"
#include "sperner/error.hpp"
#include "sperner/gallai.hpp"
#include "sperner/planar.hpp"
#include "sperner/projective.hpp"

using namespace sperner;

namespace {

SpernerInstance segment() {
  const SimplicialComplex c({parse_simplex("u,v")});
  return SpernerInstance::from_named(c, 2, {{"u", LabelSet::single(1)}, {"v", LabelSet::single(2)}}, {{1, "u"}, {2, "v"}});
}

SpernerInstance corpus(const std::string& name) {
  for (const auto& e : planar_corpus()) {
    if (e.name == name) return e.instance;
  }
  throw std::runtime_error("no corpus entry " + name);
}

bool bipartite(const Graph& g) { return std::holds_alternative<Bipartition>(odd_cycle_or_bipartition(g)); }

}  // namespace

TEST_CASE("glued spheres are centrally symmetric spheres with one white and one black facet") {
  const std::vector<std::array<long long, 4>> expected = {
      // d, vertices, facets, Euler characteristic
      {1, 8, 8, 0},
      {2, 12, 20, 2},
      {3, 16, 44, 0},
      {4, 20, 92, 2},
  };
  for (const auto& [d, v, f, chi] : expected) {
    const auto c = build_glued_sphere(static_cast<int>(d));
    CAPTURE(d);
    CHECK(c.complex.vertex_count() == static_cast<std::size_t>(v));
    CHECK(c.complex.facet_count() == static_cast<std::size_t>(f));
    const auto r = validate_complex(c.complex);
    CHECK(r.closed());
    CHECK(r.euler_char == chi);
    CHECK(one_skeleton_connected(c.complex));
    CHECK(symmetry_violations(c).empty());
    const auto mono = monochromatic_facets(c);
    REQUIRE(mono.size() == 2);
  }
  CHECK_THROWS_AS(build_glued_sphere(0), Error);
}

TEST_CASE("symmetry violations are detected") {
  auto c = build_glued_sphere(2);
  c.colour[0] = c.colour[static_cast<std::size_t>(c.involution[0])];
  CHECK_FALSE(symmetry_violations(c).empty());
  CHECK_THROWS_AS(antipodal_quotient(c), Error);

  auto d = build_glued_sphere(2);
  std::swap(d.involution[0], d.involution[1]);
  CHECK_FALSE(symmetry_violations(d).empty());
}

TEST_CASE("the bare glued circle has monochromatic facets and a bipartite quotient") {
  // The two caps are monochromatic edges; deleting them leaves a path.
  const auto c = build_glued_sphere(1);
  const auto q = antipodal_quotient(c);
  CHECK(q.graph.vertex_count() == 4);
  CHECK(q.graph.edge_count() == 3);
  CHECK(bipartite(q.graph));
}

TEST_CASE("inserting a segment into the glued circle gives a 5-cycle") {
  const auto kt = insert_k_copies(build_glued_sphere(1), segment());
  CHECK(monochromatic_facets(kt).empty());
  const auto q = antipodal_quotient(kt);
  CHECK(q.graph.vertex_count() == 5);
  CHECK(q.graph.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(q.graph.degree(v) == 2);
  CHECK_FALSE(bipartite(q.graph));
  const auto cert = verify_projective_theorem(segment());
  CHECK(cert.passed());
  CHECK(cert.details["quotientFacetProperty"] == true);
}

TEST_CASE("the quotient for the trivial triangle is G_K") {
  const auto s = corpus("trivial");
  const auto kt = insert_k_copies(build_glued_sphere(2), s);
  CHECK(kt.complex.vertex_count() == 14);
  const auto q = antipodal_quotient(kt);
  CHECK(q.graph.vertex_count() == 7);
  CHECK(q.graph.edge_count() == build_gallai_graph(s).graph.edge_count());
  const auto cert = verify_projective_theorem(s);
  CHECK(cert.passed());
  CHECK(cert.details["isomorphicToGallai"] == true);
  CHECK(cert.details["oddCycleLength"].get<int>() % 2 == 1);
}

TEST_CASE("K3 copies contribute 76 facets per cap") {
  const auto k3 = build_kd(3);
  const auto kt = insert_k_copies(build_glued_sphere(3), k3.instance);
  std::size_t white_apexes = 0, cap_facets = 0;
  for (const auto& v : kt.complex.vertices()) white_apexes += v.rfind("ab[", 0) == 0;
  for (const auto& f : kt.complex.facet_list()) {
    cap_facets += std::any_of(f.begin(), f.end(), [](const VertexId& v) { return v.rfind("aw[", 0) == 0; });
  }
  CHECK(white_apexes == 19);
  CHECK(cap_facets == 76);
  CHECK(kt.complex.facet_count() == 44 - 2 + 2 * 76);
  const auto cert = verify_projective_theorem(k3.instance);
  CHECK(cert.passed());
  CHECK(cert.details["quotientVertices"] == 31);
  CHECK(cert.details["quotientEdges"] == 94);
}

TEST_CASE("the theorem holds for refined and boundary-subdivided triangles") {
  for (const auto& e : planar_corpus()) {
    CAPTURE(e.name);
    const auto cert = verify_projective_theorem(e.instance);
    CHECK(cert.passed());
    CHECK(cert.details["closedPseudomanifold"] == true);
    CHECK(cert.details["eulerCharacteristic"] == 2);
    CHECK(cert.details["monochromaticFacets"] == 0);
    CHECK(cert.details["isomorphicToGallai"] == true);
  }
  CHECK(verify_projective_theorem(refine(build_kd(3).instance, build_kd(3).sigma, 1)).passed());
}

TEST_CASE("quotient facets with two same-coloured middle vertices span a V3 edge") {
  // The facet b-1,c+2,c+3 of the trivial construction maps to a corner class
  // and two V3 classes, which G_K joins, so it is not complete bipartite.
  const auto s = corpus("trivial");
  const auto kt = insert_k_copies(build_glued_sphere(2), s);
  const auto q = antipodal_quotient(kt);
  const auto& c = kt.complex;
  REQUIRE(c.find_facet(parse_simplex("b-1,c+2,c+3")));
  const int a = q.class_of[static_cast<std::size_t>(c.require_index("c+2"))];
  const int b = q.class_of[static_cast<std::size_t>(c.require_index("c+3"))];
  CHECK(q.graph.has_edge(a, b));
  CHECK(verify_projective_theorem(s).details["quotientFacetProperty"] == false);
}

TEST_CASE("insertion checks dimensions") {
  try {
    insert_k_copies(build_glued_sphere(3), corpus("trivial"));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}
