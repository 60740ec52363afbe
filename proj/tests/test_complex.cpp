#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sperner/error.hpp"
#include "sperner/gallery.hpp"

using namespace sperner;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::BadInput;
}

SimplicialComplex triangle() { return SimplicialComplex({parse_simplex("a,b,c")}); }

}  // namespace

TEST_CASE("simplices are sorted and parsed from commas or spaces") {
  CHECK(make_simplex({"c", "a", "b"}) == Simplex{"a", "b", "c"});
  CHECK(parse_simplex("c, a b") == Simplex{"a", "b", "c"});
  CHECK(format_simplex({"a", "b"}) == "a,b");
}

TEST_CASE("construction rejects malformed facet lists") {
  CHECK(code_of([] { SimplicialComplex({parse_simplex("a,b"), parse_simplex("b,a")}); }) == Errc::DuplicateFacet);
  CHECK(code_of([] { SimplicialComplex({parse_simplex("a,b,c"), parse_simplex("a,b")}); }) == Errc::NonMaximalFacet);
  CHECK(code_of([] { SimplicialComplex({Simplex{"a", "a", "b"}}); }) == Errc::RepeatedVertex);
  CHECK(code_of([] { triangle().require_facet(parse_simplex("a,b")); }) == Errc::NotAFacet);
  CHECK(code_of([] { triangle().require_index("z"); }) == Errc::UnknownVertex);
  CHECK(code_of([] { validate_complex(SimplicialComplex()); }) == Errc::BadInput);
}

TEST_CASE("the empty simplex is the complex {∅}") {
  const auto e = SimplicialComplex::empty_simplex();
  CHECK(e.facet_count() == 1);
  CHECK(e.vertex_count() == 0);
  CHECK(e.dim() == -1);
}

TEST_CASE("f-vector of the H8 boundary agrees with the closure oracle") {
  const auto h8 = h8_boundary();
  const auto r = validate_complex(h8);
  CHECK(r.f_vector == std::vector<std::size_t>{8, 28, 40, 20});
  CHECK(r.f_vector == oracle::f_vector(h8));
  CHECK(r.euler_char == 0);
  CHECK(r.closed());
  CHECK(one_skeleton_connected(h8));
}

TEST_CASE("a single triangle has three boundary edges") {
  const auto r = validate_complex(triangle());
  CHECK(r.pseudomanifold);
  CHECK(r.boundary_faces.size() == 3);
  CHECK(r.euler_char == 1);
  CHECK_FALSE(r.closed());
}

TEST_CASE("three triangles on one edge are not a pseudomanifold") {
  const SimplicialComplex c({parse_simplex("a,b,c"), parse_simplex("a,b,d"), parse_simplex("a,b,e")});
  CHECK_FALSE(validate_complex(c).pseudomanifold);
}

TEST_CASE("joins multiply facets and add dimensions") {
  const SimplicialComplex k({parse_simplex("a,b"), parse_simplex("b,c")});
  const SimplicialComplex l({parse_simplex("x"), parse_simplex("y"), parse_simplex("z")});
  const auto j = join(k, l);
  CHECK(j.facet_count() == 6);
  CHECK(j.vertex_count() == 6);
  CHECK(j.dim() == 2);
  CHECK(join(k, SimplicialComplex::empty_simplex()) == k);
  CHECK(code_of([&] { join(k, k); }) == Errc::VertexClash);
}

TEST_CASE("stellar subdivision keeps the boundary and closedness (random facets)") {
  std::mt19937 rng(7);
  SimplicialComplex c = h8_boundary();
  SimplicialComplex disk = triangle();
  const auto disk_boundary = validate_complex(disk).boundary_faces;
  for (int step = 0; step < 12; ++step) {
    const auto f = std::uniform_int_distribution<std::size_t>(0, c.facet_count() - 1)(rng);
    const auto before = c.facet_count();
    c = stellar_subdivide_facet(c, c.facet_names(f), "s" + std::to_string(step));
    CHECK(c.facet_count() == before + 3);
    const auto r = validate_complex(c);
    CHECK(r.closed());
    CHECK(r.euler_char == 0);
    CHECK(r.f_vector == oracle::f_vector(c));

    const auto g = std::uniform_int_distribution<std::size_t>(0, disk.facet_count() - 1)(rng);
    disk = stellar_subdivide_facet(disk, disk.facet_names(g), "t" + std::to_string(step));
    CHECK(validate_complex(disk).boundary_faces == disk_boundary);
  }
}

TEST_CASE("stellar subdivision rejects clashing names") {
  CHECK(code_of([] { stellar_subdivide_facet(triangle(), parse_simplex("a,b,c"), "a"); }) == Errc::VertexClash);
  CHECK(code_of([] { stellar_subdivide_facet(triangle(), parse_simplex("a,b"), "x"); }) == Errc::NotAFacet);
}

TEST_CASE("remove_facet drops exactly one facet") {
  const auto k = remove_facet(h8_boundary(), h8_sigma0());
  CHECK(k.facet_count() == 19);
  CHECK_FALSE(k.find_facet(h8_sigma0()));
  CHECK(validate_complex(k).boundary_faces.size() == 4);
}

TEST_CASE("isomorphism search finds relabellings and agrees with the permutation oracle") {
  const auto h8 = h8_boundary();
  std::map<VertexId, VertexId> rename;
  const std::vector<VertexId> target = {"8", "3", "5", "1", "7", "2", "6", "4"};
  for (std::size_t i = 0; i < h8.vertex_count(); ++i) rename[h8.vertices()[i]] = target[i];
  std::vector<Simplex> facets;
  for (const auto& f : h8.facet_list()) {
    Simplex g;
    for (const auto& v : f) g.push_back(rename.at(v));
    facets.push_back(make_simplex(g));
  }
  const SimplicialComplex copy(facets);
  const auto found = complexes_isomorphic(h8, copy);
  REQUIRE(found.bijection);
  for (const auto& f : h8.facet_list()) {
    Simplex g;
    for (const auto& v : f) g.push_back(found.bijection->at(v));
    CHECK(copy.find_facet(make_simplex(g)));
  }
  CHECK(oracle::isomorphic_by_permutation(h8, copy));
}

TEST_CASE("H8 and C(8,4) share an f-vector but are not isomorphic") {
  const auto h8 = h8_boundary();
  const auto c84 = cyclic_polytope_boundary(8, 4);
  CHECK(validate_complex(h8).f_vector == validate_complex(c84).f_vector);
  CHECK_FALSE(complexes_isomorphic(h8, c84).bijection);
  CHECK_FALSE(oracle::isomorphic_by_permutation(h8, c84));
}

TEST_CASE("isomorphism search refuses oversized inputs") {
  const auto c = cyclic_polytope_boundary(12, 4);
  CHECK(code_of([&] { complexes_isomorphic(c, c); }) == Errc::TooLarge);
}
