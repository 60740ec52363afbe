#include <filesystem>

#include "doctest.h"
#include "sperner/counterexample.hpp"
#include "sperner/error.hpp"
#include "sperner/gallery.hpp"
#include "sperner/io.hpp"

using namespace sperner;
using nlohmann::json;

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

}  // namespace

TEST_CASE("canonical dump sorts keys and ends with a newline") {
  const json j = {{"zeta", 1}, {"alpha", {{"b", 2}, {"a", 1}}}};
  const auto text = dump(j);
  CHECK(text == "{\n  \"alpha\": {\n    \"a\": 1,\n    \"b\": 2\n  },\n  \"zeta\": 1\n}\n");
  CHECK(dump(parse_json_text(text)) == text);
  CHECK(code_of([] { parse_json_text("{\"a\": "); }) == Errc::IoFormat);
}

TEST_CASE("complexes round-trip") {
  const auto h8 = h8_boundary();
  const auto j = complex_to_json(h8);
  CHECK(j["dim"] == 3);
  CHECK(j["vertices"].size() == 8);
  CHECK(j["facets"].size() == 20);
  CHECK(complex_from_json(j) == h8);
  CHECK(complex_from_json(parse_json_text(dump(j))) == h8);
}

TEST_CASE("instances round-trip with sigma") {
  const auto k3 = build_kd(3);
  const auto j = instance_to_json(k3.instance, k3.sigma);
  CHECK(j["labelCount"] == 4);
  const auto back = instance_from_json(j);
  CHECK(back == k3.instance);
  CHECK(sigma_from_json(j) == k3.sigma);
  CHECK_FALSE(sigma_from_json(instance_to_json(k3.instance)));
}

TEST_CASE("missing supports default to every label") {
  const json j = {{"labelCount", 3},
                  {"facets", {{"a", "b", "c"}, {"b", "c", "d"}}},
                  {"corners", {{"1", "a"}, {"2", "b"}, {"3", "c"}}}};
  const auto s = instance_from_json(j);
  CHECK(s.support(s.complex().require_index("d")) == LabelSet::full(3));
}

TEST_CASE("malformed instances are format errors") {
  CHECK(code_of([] { instance_from_json(json{{"facets", 3}}); }) == Errc::IoFormat);
  CHECK(code_of([] { complex_from_json(json::array()); }) == Errc::IoFormat);
}

TEST_CASE("labellings read by vertex name") {
  const auto k3 = build_kd(3);
  json j = {{"assignment", json::object()}};
  for (const auto& v : k3.instance.complex().vertices()) j["assignment"][v] = 1;
  const auto l = labelling_from_json(k3.instance, j);
  CHECK(l.size() == 8);
  CHECK(std::all_of(l.begin(), l.end(), [](Label x) { return x == 1; }));
  j["assignment"].erase("Z");
  CHECK_THROWS_AS(labelling_from_json(k3.instance, j), Error);
}

TEST_CASE("symmetric complexes round-trip without origin tags") {
  const auto c = build_glued_sphere(2);
  const auto back = symmetric_complex_from_json(symmetric_complex_to_json(c));
  CHECK(back.complex == c.complex);
  CHECK(back.involution == c.involution);
  CHECK(back.colour == c.colour);
}

TEST_CASE("DIMACS round-trip keeps edges and roles") {
  const auto g = build_gallai_graph(build_kd(3).instance);
  const auto text = to_dimacs(g.graph, g.vertices);
  CHECK(text.find("p edge 31 94\n") != std::string::npos);
  const auto back = parse_dimacs(text);
  CHECK(back.graph == g.graph);
  REQUIRE(back.roles.size() == 31);
  for (std::size_t v = 0; v < 31; ++v) {
    REQUIRE(back.roles[v]);
    CHECK(back.roles[v]->role == g.vertices[v].role);
    CHECK(back.roles[v]->provenance == g.vertices[v].provenance);
  }
  const auto bare = parse_dimacs(to_dimacs(g.graph));
  CHECK(bare.graph == g.graph);
  CHECK_FALSE(bare.roles[0]);
}

TEST_CASE("DIMACS errors carry the line") {
  auto message = [](const std::string& text) {
    try {
      parse_dimacs(text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::IoFormat);
      return std::string(e.what());
    }
    FAIL("expected IoFormat");
    return std::string();
  };
  CHECK(message("p edge 3 2\ne 1 2\n").find("edge") != std::string::npos);
  CHECK(message("p edge 3 1\ne 1 4\n").find("line 2") != std::string::npos);
  CHECK(message("e 1 2\n").find("line 1") != std::string::npos);
  CHECK(message("p edge 3 2\ne 1 2\ne 2 1\n").find("line 3") != std::string::npos);
  CHECK(message("p edge 2 1\nx 1 2\n").find("line 2") != std::string::npos);
}

TEST_CASE("file errors") {
  CHECK(code_of([] { read_file("/nonexistent/dir/file.json"); }) == Errc::IoPath);
  CHECK(code_of([] { write_file("/nonexistent/dir/file.json", "x"); }) == Errc::IoPath);
  const auto path = (std::filesystem::temp_directory_path() / "sperner-forge-io-test.txt").string();
  write_file(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  std::filesystem::remove(path);
}
