#include <doctest.h>

#include <json.hpp>
#include <fstream>
#include <sstream>

#include "cover/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  json report;
  std::string raw;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cover::run_cli(args, out, err);
  RunResult r{code, json(), out.str()};
  if (!r.raw.empty()) {
    try {
      r.report = json::parse(r.raw);
    } catch (...) {
    }
  }
  return r;
}

}  // namespace

TEST_CASE("classify subcommand") {
  RunResult r = run({"classify", "--graph", "F4", "--voltage", "cdc", "--group", "A4"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["kind"] == "SplitSectional");

  RunResult mixed = run({"classify", "--graph", "F4", "--voltage", "cdc", "--group", "S4"});
  CHECK(mixed.report["results"]["kind"] == "SplitMixed");
}

TEST_CASE("cdc-test and lift-check subcommands") {
  RunResult r = run({"cdc-test", "--graph", "F10", "--voltage", "all-ones"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["cdc"] == true);

  RunResult lift = run({"lift-check", "--graph", "F10", "--voltage", "cdc", "--group", "S5"});
  CHECK(lift.report["results"]["lifts"] == true);
}

TEST_CASE("classes subcommand") {
  RunResult r = run({"classes", "--graph", "F10", "--group", "A5"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["betti"] == 6);
  CHECK(r.report["results"]["dimension"] == 2);
  CHECK(r.report["results"]["classes"].size() == 3);
}

TEST_CASE("family subcommand") {
  RunResult r = run({"family", "--k", "0", "--verify"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["verify"]["pass"] == true);
  CHECK(r.report["results"]["verify"]["order"] == "1814400");
}

TEST_CASE("chain subcommand emits the merged diagram") {
  RunResult r = run({"chain", "--graph", "F10", "--group", "A5", "--depth", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["split_length"] == 2);
  CHECK(r.report["results"]["nodes"].size() == 4);
  CHECK(r.report["budget_flags"]["partial"] == false);
}

TEST_CASE("sreg subcommand") {
  RunResult r = run({"sreg", "--graph", "F4", "--group", "S4"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["s"] == 2);
  CHECK(r.report["results"]["verified"] == true);
}

TEST_CASE("malformed inputs exit with code 2") {
  RunResult missing = run({"classify", "--graph", "nosuchfile.json", "--voltage", "cdc",
                           "--group", "A4"});
  CHECK(missing.code == 2);
  CHECK(missing.report["error"]["kind"] == "malformed-input");

  RunResult badsub = run({"frobnicate"});
  CHECK(badsub.code == 2);
}

TEST_CASE("domain errors exit with code 1") {
  // trivial group is not vertex-transitive: classify refuses
  std::ofstream f("/tmp/trivial_group.json");
  f << R"({"degree": 4, "generators": []})";
  f.close();
  RunResult r = run({"classify", "--graph", "F4", "--voltage", "cdc", "--group",
                     "/tmp/trivial_group.json"});
  CHECK(r.code == 1);
  CHECK(r.report["error"]["kind"] == "domain");
}

TEST_CASE("reports are byte-identical across runs") {
  RunResult a = run({"classes", "--graph", "F10", "--group", "A5"});
  RunResult b = run({"classes", "--graph", "F10", "--group", "A5"});
  CHECK(a.raw == b.raw);
}

TEST_CASE("quotient subcommand") {
  std::ofstream f("/tmp/rot3.json");
  f << R"x({"degree": 6, "generators": ["(1 4)(2 5)(3 6)"]})x";
  f.close();
  RunResult r = run({"quotient", "--graph", "C(6;1)", "--group", "/tmp/rot3.json"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["graph"]["n"] == 3);
}

TEST_CASE("class vectors round-trip through the CLI") {
  RunResult classes = run({"classes", "--graph", "F10", "--group", "A5"});
  REQUIRE(classes.code == 0);
  for (const auto& cls : classes.report["results"]["classes"]) {
    RunResult lifts = run({"lift-check", "--graph", "F10", "--voltage",
                           cls.get<std::string>(), "--group", "A5"});
    CHECK(lifts.report["results"]["lifts"] == true);
  }
  std::string cdc_class = classes.report["results"]["cdc_class"];
  RunResult cdc = run({"cdc-test", "--graph", "F10", "--voltage", cdc_class});
  CHECK(cdc.report["results"]["cdc"] == true);
}

TEST_CASE("graph files resolve like fixtures") {
  std::ofstream f("/tmp/k4_graph.json");
  f << R"({"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})";
  f.close();
  RunResult r = run({"classify", "--graph", "/tmp/k4_graph.json", "--voltage", "cdc",
                     "--group", "A4"});
  REQUIRE(r.code == 0);
  CHECK(r.report["results"]["kind"] == "SplitSectional");
}
