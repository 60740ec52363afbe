#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "sperner/cli.hpp"
#include "sperner/io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = sperner::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sperner-forge-cli-" + name)).string();
}

}  // namespace

TEST_CASE("verify h8 passes") {
  const auto r = run({"verify", "h8"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["spaceSize"] == 65536);
  CHECK(j["kind"].is_string());
  CHECK(j["witness"].is_null());
}

TEST_CASE("a failing certificate exits 1") {
  const auto cross = temp("cross.json");
  REQUIRE(run({"-o", cross, "gallery", "cross", "--dim", "4"}).code == 0);
  const auto r = run({"verify", "h8", "--complex", cross, "--sigma0", "+1,+2,+3,+4", "--sigma1", "-1,-2,-3,-4"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["status"] == "FAIL");
  std::filesystem::remove(cross);
}

TEST_CASE("build a counterexample and verify it") {
  const auto path = temp("k4.json");
  REQUIRE(run({"-o", path, "build", "counterexample", "--dim", "4", "--refinements", "1"}).code == 0);
  const auto r = run({"verify", "main", "--complex", path});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["spaceSize"] == 256 * 5);
  std::filesystem::remove(path);
}

TEST_CASE("seeded builds are reproducible") {
  const auto a = run({"--seed", "11", "build", "counterexample", "--dim", "3", "--refinements", "4"});
  const auto b = run({"--seed", "11", "build", "counterexample", "--dim", "3", "--refinements", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("gallai graph through chromatic critical") {
  const auto inst = temp("k3.json"), col = temp("k3.col");
  REQUIRE(run({"-o", inst, "build", "counterexample", "--dim", "3"}).code == 0);
  REQUIRE(run({"-o", col, "gallai", "build", "--complex", inst}).code == 0);
  CHECK(sperner::read_file(col).find("p edge 31 94") != std::string::npos);

  const auto n = run({"chromatic", "number", "--graph", col});
  REQUIRE(n.code == 0);
  CHECK(json::parse(n.out)["chromatic"] == 5);

  const auto c = run({"--jobs", "2", "chromatic", "critical", "--graph", col, "--k", "5"});
  REQUIRE(c.code == 0);
  const auto j = json::parse(c.out);
  CHECK(j["verdict"] == "not critical");
  CHECK(j["nonCriticalEdges"].size() == 4);

  const auto t = run({"gallai", "triangles", "--complex", inst});
  CHECK(json::parse(t.out)["triangles"] == 16);

  std::filesystem::remove(inst);
  std::filesystem::remove(col);
}

TEST_CASE("quad build writes the quotient and quad verify reports") {
  const auto inst = temp("k3q.json"), col = temp("k3q.col");
  REQUIRE(run({"-o", inst, "build", "counterexample", "--dim", "3"}).code == 0);
  const auto b = run({"quad", "build", "--complex", inst, "--quotient", col});
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["involution"].size() == 62);
  const auto q = sperner::parse_dimacs(sperner::read_file(col));
  CHECK(q.graph.vertex_count() == 31);
  CHECK(q.graph.edge_count() == 94);
  const auto v = run({"quad", "verify", "--complex", inst});
  CHECK(v.code == 0);
  std::filesystem::remove(inst);
  std::filesystem::remove(col);
}

TEST_CASE("planar-label emits a labelling and a certificate") {
  const auto path = temp("tri.json");
  const json tri = {{"labelCount", 3},
                    {"facets", {{"v1", "v2", "x"}, {"v2", "v3", "x"}, {"v1", "v3", "x"}}},
                    {"corners", {{"1", "v1"}, {"2", "v2"}, {"3", "v3"}}}};
  sperner::write_file(path, sperner::dump(tri));
  const auto r = run({"planar-label", "--complex", path, "--facet", "v2,v3,x"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["certificate"]["status"] == "PASS");
  CHECK(j["certificate"]["details"]["fallbackUsed"] == false);
  CHECK(j["labelling"]["assignment"]["x"] == 1);
  std::filesystem::remove(path);
}

TEST_CASE("text format") {
  const auto r = run({"--format", "text", "verify", "h8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: PASS") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", "counterexample"}).code == 2);
  CHECK(run({"--format", "xml", "verify", "h8"}).code == 2);
  const auto missing = run({"verify", "main", "--complex", "/nonexistent/k.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("IO_PATH") != std::string::npos);
  const auto bad = run({"build", "counterexample", "--dim", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error: ") == 0);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("the conjecture report") {
  const auto r = run({"conjecture", "cyclic", "--n", "6..7"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j["instances"].size() == 2);
  for (const auto& inst : j["instances"]) {
    for (const char* key : {"n", "dim", "removedFacet", "vertices", "facetCount", "labellings", "facetsAdmitting", "facets"}) {
      CHECK(inst.contains(key));
    }
    std::size_t admitting = 0;
    for (const auto& f : inst["facets"]) {
      CHECK(f["facet"].is_string());
      admitting += f["admitsUniqueRainbow"].get<bool>();
      CHECK(f["witness"].is_null() != f["admitsUniqueRainbow"].get<bool>());
    }
    CHECK(inst["facetsAdmitting"] == admitting);
    CHECK(inst["facets"].size() == inst["facetCount"]);
  }
  CHECK(j["instances"][1]["facetsAdmitting"] == 13);
}
