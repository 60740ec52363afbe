#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sperner/counterexample.hpp"
#include "sperner/error.hpp"
#include "sperner/gallery.hpp"
#include "sperner/planar.hpp"

using namespace sperner;

namespace {

std::vector<SpernerInstance> small_instances() {
  std::vector<SpernerInstance> out;
  for (const auto& e : planar_corpus()) out.push_back(e.instance);
  const auto k3 = build_kd(3);
  out.push_back(k3.instance);
  out.push_back(refine(k3.instance, k3.sigma, 1));
  out.push_back(associated_triangulation(cyclic_polytope_boundary(7, 4), cyclic_polytope_boundary(7, 4).facet_names(0)));
  return out;
}

// Relabels the instance by a permutation of {1..n}.
SpernerInstance permute_labels(const SpernerInstance& s, const std::vector<Label>& perm) {
  std::vector<LabelSet> supports;
  for (auto sup : s.supports()) {
    LabelSet t;
    for (auto l : sup.labels()) t = t | LabelSet::single(perm[static_cast<std::size_t>(l - 1)]);
    supports.push_back(t);
  }
  std::vector<VertexIndex> corners(s.corners().size());
  for (Label l = 1; l <= s.label_count(); ++l) corners[static_cast<std::size_t>(perm[static_cast<std::size_t>(l - 1)] - 1)] = s.corner(l);
  return SpernerInstance(s.complex(), s.label_count(), supports, corners);
}

}  // namespace

TEST_CASE("enumeration yields the product of support sizes without duplicates") {
  for (const auto& s : small_instances()) {
    std::uint64_t expected = 1;
    for (auto sup : s.supports()) expected *= static_cast<std::uint64_t>(sup.size());
    const auto all = enumerate_labellings(s);
    CHECK(all.size() == expected);
    CHECK(std::set<Labelling>(all.begin(), all.end()).size() == expected);
    for (const auto& l : all) CHECK(is_valid_sperner(s, l));
    std::uint64_t oracle_count = 0;
    oracle::for_each_labelling(s, [&](const std::vector<Label>&) { ++oracle_count; });
    CHECK(oracle_count == expected);
  }
}

TEST_CASE("the enumerator and the decoder agree index by index") {
  const auto s = build_kd(3).instance;
  const LabellingSpace space(s);
  LabellingEnumerator e(s);
  std::uint64_t i = 0;
  Labelling decoded;
  while (e.next()) {
    space.decode(i++, decoded);
    CHECK(decoded == e.current());
  }
  CHECK(i == space.size());
}

TEST_CASE("validity and rainbow detection on a hand example") {
  const auto s = build_kd(3).instance;
  const auto& c = s.complex();
  NamedLabelling named{{"A", 1}, {"B", 2}, {"G", 3}, {"Z", 4}, {"C", 1}, {"D", 2}, {"E", 3}, {"F", 4}};
  const auto l = densify(s, named);
  CHECK(is_valid_sperner(s, named));
  const auto r = rainbow_facets(s, l);
  CHECK(r.facet_indices == oracle::rainbow(s, l));
  CHECK(std::find(r.facets.begin(), r.facets.end(), parse_simplex("C,D,E,F")) != r.facets.end());

  named["A"] = 2;
  CHECK_FALSE(is_valid_sperner(s, named));
  named.erase("A");
  CHECK_THROWS_AS(densify(s, named), Error);
  CHECK(name_labelling(s, l).size() == c.vertex_count());
}

TEST_CASE("Sperner's lemma holds on every small instance and rainbow counts are odd") {
  for (const auto& s : small_instances()) {
    const auto cert = verify_sperner_lemma(s);
    CHECK(cert.passed());
    CHECK(cert.details["rainbowFree"] == 0);
    CHECK(cert.details["allRainbowCountsOdd"] == true);
    std::uint64_t free = 0;
    oracle::for_each_labelling(s, [&](const std::vector<Label>& l) { free += oracle::rainbow(s, l).empty(); });
    CHECK(free == 0);
  }
}

TEST_CASE("a labelling ignoring supports has no rainbow guarantee") {
  // A strip whose corners share no facet; p, q and r may take any label.
  const SimplicialComplex c({parse_simplex("a,p,q"), parse_simplex("p,q,b"), parse_simplex("q,b,r"), parse_simplex("b,r,c")});
  const auto s = SpernerInstance::from_named(c, 3, {}, {{1, "a"}, {2, "b"}, {3, "c"}});
  const auto cert = verify_sperner_lemma(s);
  CHECK_FALSE(cert.passed());
  CHECK_FALSE(cert.witness.is_null());
}

TEST_CASE("unique-rainbow search matches the brute-force oracle facet by facet") {
  for (const auto& s : small_instances()) {
    const auto classes = classify_facets(s);
    REQUIRE(classes.size() == s.complex().facet_count());
    for (const auto& fc : classes) {
      CHECK(fc.admits_unique_rainbow() == oracle::unique_rainbow_exists(s, fc.facet));
      if (fc.witness) {
        CHECK(is_valid_sperner(s, *fc.witness));
        CHECK(oracle::rainbow(s, *fc.witness) == std::vector<std::size_t>{fc.facet});
      }
    }
  }
}

TEST_CASE("results do not depend on the number of workers") {
  const auto s = refine(build_kd(3).instance, build_kd(3).sigma, 2);
  const auto one = verify_sperner_lemma(s, {SearchOptions{}.bound, 1});
  const auto four = verify_sperner_lemma(s, {SearchOptions{}.bound, 4});
  CHECK(one.to_json() == four.to_json());
  const auto a = classify_facets(s, {SearchOptions{}.bound, 1});
  const auto b = classify_facets(s, {SearchOptions{}.bound, 3});
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].witness == b[i].witness);
}

TEST_CASE("permuting labels permutes rainbow structure (random permutations)") {
  std::mt19937 rng(11);
  for (const auto& s : small_instances()) {
    std::vector<Label> perm(static_cast<std::size_t>(s.label_count()));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto t = permute_labels(s, perm);
    CHECK(validate_instance(t).valid() == validate_instance(s).valid());
    const auto cs = classify_facets(s), ct = classify_facets(t);
    for (std::size_t f = 0; f < cs.size(); ++f) CHECK(cs[f].admits_unique_rainbow() == ct[f].admits_unique_rainbow());
    for (int trial = 0; trial < 5; ++trial) {
      const LabellingSpace space(s);
      Labelling l;
      space.decode(std::uniform_int_distribution<std::uint64_t>(0, space.size() - 1)(rng), l);
      Labelling m = l;
      for (auto& x : m) x = perm[static_cast<std::size_t>(x - 1)];
      CHECK(is_valid_sperner(t, m));
      CHECK(rainbow_facets(s, l).facet_indices == rainbow_facets(t, m).facet_indices);
    }
  }
}

TEST_CASE("search bound is enforced") {
  const auto s = build_kd(3).instance;
  CHECK_THROWS_AS(verify_sperner_lemma(s, {255, 1}), Error);
  CHECK_NOTHROW(verify_sperner_lemma(s, {256, 1}));
  try {
    unique_rainbow_witness(s, std::size_t{0}, {16, 1});
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchSpaceTooLarge);
  }
}

TEST_CASE("labelling JSON maps ids to labels") {
  const auto s = build_kd(3).instance;
  const auto l = LabellingSpace(s).first();
  const auto j = labelling_to_json(s, l);
  CHECK(j["assignment"]["A"] == 1);
  CHECK(j["assignment"].size() == s.complex().vertex_count());
}
