#include "doctest.h"
#include "sperner/counterexample.hpp"
#include "sperner/error.hpp"
#include "sperner/instance.hpp"

using namespace sperner;

namespace {

SpernerInstance triangle(std::map<VertexId, LabelSet> supports, std::map<Label, VertexId> corners = {
                                                                    {1, "a"}, {2, "b"}, {3, "c"}}) {
  return SpernerInstance::from_named(SimplicialComplex({parse_simplex("a,b,c")}), 3, supports, corners);
}

}  // namespace

TEST_CASE("label sets behave as bit sets") {
  const auto s = LabelSet::of({1, 3});
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.labels() == std::vector<Label>{1, 3});
  CHECK(LabelSet::single(2).subset_of(LabelSet::full(3)));
  CHECK((s | LabelSet::single(2)) == LabelSet::full(3));
  CHECK((s & LabelSet::single(2)).empty());
  CHECK(LabelSet::full(32).size() == 32);
}

TEST_CASE("missing supports default to the full label set") {
  const auto s = triangle({{"a", LabelSet::single(1)}});
  CHECK(s.support(s.complex().require_index("b")) == LabelSet::full(3));
}

TEST_CASE("the counterexample instances validate cleanly") {
  for (int d = 3; d <= 5; ++d) CHECK(validate_instance(build_kd(d).instance).valid());
}

TEST_CASE("validation reports every corner problem") {
  const auto ok = triangle({{"a", LabelSet::single(1)}, {"b", LabelSet::single(2)}, {"c", LabelSet::single(3)}});
  CHECK(validate_instance(ok).valid());

  CHECK(validate_instance(triangle({{"a", LabelSet::of({1, 2})}, {"b", LabelSet::single(2)}, {"c", LabelSet::single(3)}}))
            .has("CORNER_NOT_SINGLETON"));
  CHECK(validate_instance(triangle({{"a", LabelSet::single(2)}, {"b", LabelSet::single(2)}, {"c", LabelSet::single(3)}}))
            .has("CORNER_LABEL_MISMATCH"));
  CHECK(validate_instance(triangle({{"a", LabelSet::single(1)}}, {{1, "a"}, {2, "a"}, {3, "c"}})).has("CORNER_DUPLICATE"));
  CHECK(validate_instance(triangle({{"a", LabelSet()}})).has("EMPTY_SUPPORT"));
  CHECK(validate_instance(triangle({{"a", LabelSet::of({1, 4})}})).has("SUPPORT_OUT_OF_RANGE"));
}

TEST_CASE("validation reports shape problems") {
  const SimplicialComplex mixed({parse_simplex("a,b,c"), parse_simplex("c,d")});
  const auto s = SpernerInstance::from_named(mixed, 3, {}, {{1, "a"}, {2, "b"}, {3, "c"}});
  CHECK(validate_instance(s).has("NOT_PURE"));

  const SimplicialComplex edge({parse_simplex("a,b")});
  CHECK(validate_instance(SpernerInstance::from_named(edge, 3, {}, {{1, "a"}, {2, "b"}, {3, "a"}}))
            .has("LABEL_COUNT_MISMATCH"));

  const SimplicialComplex fin({parse_simplex("a,b,c"), parse_simplex("a,b,d"), parse_simplex("a,b,e")});
  CHECK(validate_instance(SpernerInstance::from_named(fin, 3, {}, {{1, "a"}, {2, "b"}, {3, "c"}}))
            .has("NOT_PSEUDOMANIFOLD"));
}

TEST_CASE("a boundary face carrying every label is flagged") {
  // Boundary edge b,c with b full: b,c together see all three labels.
  const auto s = triangle({{"a", LabelSet::single(1)}, {"b", LabelSet::full(3)}, {"c", LabelSet::single(3)}});
  CHECK(validate_instance(s).has("BOUNDARY_FULL_SUPPORT"));
}

TEST_CASE("constructor shape errors") {
  const SimplicialComplex c({parse_simplex("a,b,c")});
  CHECK_THROWS_AS(SpernerInstance(c, 3, {LabelSet::full(3)}, {0, 1, 2}), Error);
  CHECK_THROWS_AS(SpernerInstance::from_named(c, 3, {}, {{1, "a"}, {2, "b"}}), Error);
  CHECK_THROWS_AS(SpernerInstance::from_named(c, 3, {{"z", LabelSet::full(3)}}, {{1, "a"}, {2, "b"}, {3, "c"}}), Error);
}
