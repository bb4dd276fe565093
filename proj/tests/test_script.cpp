#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "morifiber/mmp.hpp"
#include "morifiber/report.hpp"
#include "morifiber/script.hpp"

using namespace morifiber;

namespace {

const char* kExampleScript =
    "ruled\n"
    "mark q1 q2 q3 q4\n"
    "make_nonreduced q1\n"
    "make_nonreduced q2\n"
    "make_nonreduced q3\n"
    "make_nonreduced q4\n";

}  // namespace

TEST_CASE("a three-op script parses") {
  auto script = parse_script("ruled\nmark q1 q2 q3 q4\nmake_nonreduced q1\n");
  REQUIRE(script.ops.size() == 3);
  CHECK(std::holds_alternative<OpRuled>(script.ops[0]));
  CHECK(std::get<OpMark>(script.ops[1]).points ==
        std::vector<std::string>{"q1", "q2", "q3", "q4"});
  CHECK(std::get<OpMakeNonreduced>(script.ops[2]).point == "q1");
}

TEST_CASE("the full example script has six ops") {
  CHECK(parse_script(kExampleScript).ops.size() == 6);
}

TEST_CASE("comments and blank lines are ignored, with line numbers kept") {
  auto script = parse_script(
      "# a construction\n"
      "ruled\n"
      "\n"
      "mark q1   # the only point\n");
  REQUIRE(script.ops.size() == 2);
  CHECK(script.lines == std::vector<int>{2, 4});
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_script("ruled\nfrobnicate q1\n");
    FAIL("expected a parse error");
  } catch (const ScriptError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_script("ruled\nmark\n"), ScriptError);       // arity
  CHECK_THROWS_AS(parse_script("ruled\nblowup_edge q1 C\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("mark q1\n"), ScriptError);  // missing ruled
  CHECK_THROWS_AS(parse_script("ruled\nruled\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("# nothing\n"), ScriptError);
  CHECK_THROWS_AS(parse_script(""), ScriptError);
}

TEST_CASE("unresolved identifiers fail at replay, not parse") {
  auto script = parse_script("ruled\nblowup_edge q1 C E\n");
  try {
    run_script(script);
    FAIL("expected a replay error");
  } catch (const ScriptError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("q1") != std::string::npos);
  }
}

TEST_CASE("replay rejects double marks and re-made fibers") {
  CHECK_THROWS_AS(run_script(parse_script("ruled\nmark q1 q1\n")),
                  ScriptError);
  CHECK_THROWS_AS(run_script(parse_script(
                      "ruled\nmark q1\nmake_nonreduced q1\nmake_nonreduced "
                      "q1\n")),
                  ScriptError);
}

TEST_CASE("render and parse round-trip") {
  auto script = parse_script(
      "# build\n"
      "ruled\n"
      "mark q1 q2 q3 q4 q5\n"
      "make_nonreduced q1\n"
      "elem_transform q1 E2\n"
      "blowup_curve q2 C0\n"
      "blowup_edge q2 C0 E1\n"
      "contract q2 C0 E1\n");
  CHECK(parse_script(render_script(script)) == script);
}

TEST_CASE("render/parse round-trip on randomized scripts") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> kind(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    ConstructionScript script;
    script.ops.emplace_back(OpRuled{});
    script.ops.emplace_back(OpMark{{"q1", "q2"}});
    int n = 1 + trial % 6;
    for (int i = 0; i < n; ++i) {
      std::string q = "q" + std::to_string(1 + (i % 2));
      std::string c = "E" + std::to_string(i + 1);
      switch (kind(rng)) {
        case 0: script.ops.emplace_back(OpMakeNonreduced{q}); break;
        case 1: script.ops.emplace_back(OpElemTransform{q, c}); break;
        case 2: script.ops.emplace_back(OpBlowupCurve{q, c}); break;
        case 3: script.ops.emplace_back(OpBlowupEdge{q, c, "C0"}); break;
        default: script.ops.emplace_back(OpContract{q, {c, "C0"}}); break;
      }
    }
    CHECK(parse_script(render_script(script)) == script);
  }
}

TEST_CASE("the example script builds the expected model") {
  SurfaceModel model = run_script(parse_script(kExampleScript));
  CHECK(model.marked_points ==
        std::vector<std::string>{"q1", "q2", "q3", "q4"});
  for (const std::string& q : model.marked_points) {
    CHECK(model.fiber(q).size() == 3);
    CHECK(model.points(q).size() == 2);
    CHECK(classify_mori_fiber(model, q) == fiber_a1a1());
  }
}

TEST_CASE("an elementary transform in the script shows up as D3") {
  SurfaceModel model = run_script(
      parse_script(std::string(kExampleScript) + "elem_transform q1 E2\n"));
  CHECK(classify_mori_fiber(model, "q1") == fiber_d(3));
  CHECK(classify_mori_fiber(model, "q2") == fiber_a1a1());
}

TEST_CASE("DOT export is bit-stable") {
  SurfaceModel model = run_script(parse_script(kExampleScript));
  std::string expected =
      "graph \"q1\" {\n"
      "  node [shape=ellipse];\n"
      "  \"C0\" [label=\"C0 [-2, 0, 1]\", peripheries=2];\n"
      "  \"E1\" [label=\"E1 [-2, 0, 1]\", peripheries=2];\n"
      "  \"E2\" [label=\"E2 [-1, -1, 2]\"];\n"
      "  \"C0\" -- \"E2\";\n"
      "  \"E1\" -- \"E2\";\n"
      "}\n";
  CHECK(dot_graph("q1", model.fiber("q1"), model.points("q1")) == expected);
}

TEST_CASE("DOT edges with weight > 1 carry a label") {
  Configuration cfg = testing::make_config(
      "z", {{"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}}, {{"a", "b", 2}});
  std::string dot = dot_graph("z", cfg, {});
  CHECK(dot.find("\"a\" -- \"b\" [label=\"2\"];") != std::string::npos);
}

TEST_CASE("structured model records carry fibers, curves and points") {
  SurfaceModel model = run_script(parse_script(kExampleScript));
  nlohmann::json doc = model_record(model);
  CHECK(doc["marked_points"].size() == 4);
  REQUIRE(doc["fibers"].size() == 4);
  const auto& fiber = doc["fibers"][0];
  CHECK(fiber["label"] == "q1");
  CHECK(fiber["config"]["curves"].size() == 3);
  CHECK(fiber["points"].size() == 2);
  CHECK(fiber["points"][0]["type"] == "A1");
  CHECK(fiber["points"][0]["attachments"]["E2"]["C0"] == 1);

  // records are regression-diffable: two runs produce identical documents
  CHECK(model_record(run_script(parse_script(kExampleScript))) == doc);
}
