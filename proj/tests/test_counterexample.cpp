#include "doctest.h"
#include "oracles.hpp"
#include "sperner/counterexample.hpp"
#include "sperner/error.hpp"

using namespace sperner;

TEST_CASE("shape of K_d") {
  const auto k3 = build_kd(3);
  CHECK(k3.instance.complex().vertex_count() == 8);
  CHECK(k3.instance.complex().facet_count() == 19);
  CHECK(k3.sigma == parse_simplex("C,D,E,F"));
  CHECK(LabellingSpace(k3.instance).size() == 256);

  const auto k4 = build_kd(4);
  CHECK(k4.instance.complex().vertex_count() == 9);
  CHECK(k4.instance.complex().facet_count() == 19);
  CHECK(k4.sigma == parse_simplex("C,D,E,F,p5"));
  CHECK(k4.instance.dim() == 4);
  CHECK(LabellingSpace(k4.instance).size() == 256);

  const auto k6 = build_kd(6);
  CHECK(k6.instance.complex().vertex_count() == 11);
  CHECK(validate_complex(k6.instance.complex()).pseudomanifold);
  CHECK_THROWS_AS(build_kd(2), Error);
}

TEST_CASE("K_d triangulates a simplex: its boundary is the boundary of the removed facet joined with rho") {
  const auto k3 = build_kd(3);
  const auto r = validate_complex(k3.instance.complex());
  CHECK(r.pseudomanifold);
  CHECK(r.boundary_faces.size() == 4);
  CHECK(r.euler_char == 1);
}

TEST_CASE("refinement adds d facets per step and never touches sigma") {
  const auto k4 = build_kd(4);
  const auto r2 = refine(k4.instance, k4.sigma, 2);
  CHECK(r2.complex().vertex_count() == 11);
  CHECK(r2.complex().facet_count() == 27);
  CHECK(r2.complex().find_facet(k4.sigma));
  CHECK(r2.complex().index_of("b1"));
  CHECK(r2.complex().index_of("b2"));
  CHECK(r2.support(r2.complex().require_index("b2")) == LabelSet::full(5));
  CHECK(validate_instance(r2).valid());
}

TEST_CASE("seeded refinement is reproducible") {
  const auto k3 = build_kd(3);
  CHECK(refine(k3.instance, k3.sigma, 5, 42) == refine(k3.instance, k3.sigma, 5, 42));
  CHECK_FALSE(refine(k3.instance, k3.sigma, 5, 42) == refine(k3.instance, k3.sigma, 5));
}

TEST_CASE("refinement errors") {
  const SimplicialComplex c({parse_simplex("a,b,c")});
  const auto s = SpernerInstance::from_named(c, 3, {}, {{1, "a"}, {2, "b"}, {3, "c"}});
  try {
    refine(s, parse_simplex("a,b,c"), 1);
    FAIL("expected NoEligibleFacet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoEligibleFacet);
  }
  CHECK_THROWS_AS(refine(build_kd(3).instance, parse_simplex("A,B,G,Z"), 1), Error);
}

TEST_CASE("sigma is never the only rainbow facet of K3, K4 and refinements") {
  const auto k3 = build_kd(3), k4 = build_kd(4);
  std::vector<SpernerInstance> cases = {k3.instance, k4.instance, refine(k3.instance, k3.sigma, 1),
                                        refine(k3.instance, k3.sigma, 3, 7), refine(k4.instance, k4.sigma, 2, 1)};
  for (const auto& s : cases) {
    const auto cert = verify_theorem_main(s, static_cast<int>(k3.sigma.size()) == s.label_count() ? k3.sigma : k4.sigma);
    CHECK(cert.passed());
    CHECK(cert.details["rainbowFree"] == 0);
    CHECK(cert.details["onlySigmaRainbow"] == 0);
    CHECK(cert.details["uniqueRainbowWitnessFound"] == false);
    CHECK(cert.details["searchRoutesAgree"] == true);
  }
}

TEST_CASE("the brute-force oracle agrees that CDEF has no unique-rainbow labelling") {
  const auto k3 = build_kd(3);
  const auto sigma = k3.instance.complex().require_facet(k3.sigma);
  CHECK_FALSE(oracle::unique_rainbow_exists(k3.instance, sigma));
  CHECK_FALSE(unique_rainbow_witness(k3.instance, k3.sigma));
  const auto r1 = refine(k3.instance, k3.sigma, 1);
  CHECK_FALSE(oracle::unique_rainbow_exists(r1, r1.complex().require_facet(k3.sigma)));
}

TEST_CASE("the sigma-rainbow count of K3 is exactly 4!") {
  const auto cert = verify_theorem_main(build_kd(3).instance, build_kd(3).sigma);
  CHECK(cert.details["labellings"] == 256);
  CHECK(cert.details["sigmaRainbow"] == 24);
  CHECK(cert.details["minOtherRainbow"] >= 1);
}

TEST_CASE("verify_theorem_main fails when sigma can be the unique rainbow facet") {
  const auto k3 = build_kd(3);
  bool tried = false;
  for (const auto& fc : classify_facets(k3.instance)) {
    if (!fc.admits_unique_rainbow()) continue;
    const auto cert = verify_theorem_main(k3.instance, fc.simplex);
    CHECK_FALSE(cert.passed());
    CHECK_FALSE(cert.witness.is_null());
    tried = true;
    break;
  }
  CHECK(tried);
}
