#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "morifiber/config.hpp"
#include "morifiber/oracle.hpp"

using namespace morifiber;
using namespace morifiber::testing;

namespace {

bool has_code(const std::vector<Violation>& vs, ViolationCode code) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("generic smooth fiber is valid") {
  CHECK(validate(generic_fiber()).empty());
}

TEST_CASE("doubled generic fiber violates K.F = -2") {
  Configuration cfg = make_config("z", {{"C", 0, -2, 0, 2}});
  auto violations = validate(cfg);
  CHECK(has_code(violations, ViolationCode::CanonicalFiberDegree));
}

TEST_CASE("the two-(-2)s-plus-(-1) fiber graph is valid") {
  Configuration cfg = make_config(
      "z",
      {{"s", -1, -1, 0, 2}, {"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}},
      {{"s", "a", 1}, {"s", "b", 1}});
  CHECK(validate(cfg).empty());
}

TEST_CASE("intersection matrix and fiber cycle follow curve order") {
  Configuration cfg = make_config(
      "z",
      {{"s", -1, -1, 0, 2}, {"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}},
      {{"s", "a", 1}, {"s", "b", 1}});
  Mat expected = {{-1, 1, 1}, {1, -2, 0}, {1, 0, -2}};
  CHECK(intersection_matrix(cfg) == expected);
  CHECK(fiber_cycle(cfg) == std::vector<long long>{2, 1, 1});
}

TEST_CASE("empty configuration has empty matrix") {
  Configuration cfg("z");
  CHECK(intersection_matrix(cfg).empty());
  CHECK(fiber_cycle(cfg).empty());
}

TEST_CASE("generic fiber matrix is 1x1 zero") {
  CHECK(intersection_matrix(generic_fiber()) == Mat{{0}});
  CHECK(fiber_cycle(generic_fiber()) == std::vector<long long>{1});
}

TEST_CASE("adjunction violations are reported per curve") {
  Configuration cfg = make_config("z", {{"C", 0, -1, 0, 1}});
  auto violations = validate(cfg);
  CHECK(has_code(violations, ViolationCode::Adjunction));
}

TEST_CASE("disconnected graphs are flagged, with the radical too large") {
  Configuration cfg =
      make_config("z", {{"a", 0, -2, 0, 1}, {"b", 0, -2, 0, 1}});
  auto violations = validate(cfg);
  CHECK(has_code(violations, ViolationCode::Disconnected));
  CHECK(has_code(violations, ViolationCode::RadicalNotFiberCycle));
}

TEST_CASE("non-positive multiplicities and genus are flagged") {
  Configuration cfg = make_config("z", {{"C", 0, -2, 0, 0}});
  CHECK(has_code(validate(cfg), ViolationCode::BadMultiplicity));
  Configuration g = make_config("z", {{"C", 0, -4, 1, 1}});
  CHECK(has_code(validate(g), ViolationCode::BadGenus));
}

TEST_CASE("isomorphism ignores curve order and ids") {
  Configuration a = a1a1_resolution();
  Configuration b = make_config(
      "w",
      {{"x", -2, 0, 0, 1}, {"m", -1, -1, 0, 2}, {"y", -2, 0, 0, 1}},
      {{"m", "x", 1}, {"m", "y", 1}});
  CHECK(is_isomorphic(a, b));
}

TEST_CASE("A1A1 and D3 resolutions are not isomorphic") {
  Configuration d3 = make_config(
      "z",
      {{"a", -2, 0, 0, 1}, {"s", -2, 0, 0, 2}, {"b", -2, 0, 0, 1},
       {"t", -1, -1, 0, 2}},
      {{"a", "s", 1}, {"b", "s", 1}, {"s", "t", 1}});
  CHECK_FALSE(is_isomorphic(a1a1_resolution(), d3));
  CHECK(validate(d3).empty());
}

TEST_CASE("two generic fibers are isomorphic") {
  CHECK(is_isomorphic(generic_fiber("z"), generic_fiber("w")));
}

TEST_CASE("isomorphism distinguishes labels and weights") {
  Configuration a = make_config(
      "z", {{"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}}, {{"a", "b", 1}});
  Configuration b = make_config(
      "z", {{"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}}, {{"a", "b", 2}});
  Configuration c = make_config(
      "z", {{"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 2}}, {{"a", "b", 1}});
  CHECK_FALSE(is_isomorphic(a, b));
  CHECK_FALSE(is_isomorphic(a, c));
}

TEST_CASE("isomorphism is an equivalence on enumerated configurations") {
  auto configs = enumerate_blowup_sequences(3);
  for (const auto& rec : configs) CHECK(is_isomorphic(rec.config, rec.config));
  for (std::size_t i = 0; i < configs.size(); ++i)
    for (std::size_t j = i + 1; j < configs.size(); ++j) {
      bool ij = is_isomorphic(configs[i].config, configs[j].config);
      bool ji = is_isomorphic(configs[j].config, configs[i].config);
      CHECK(ij == ji);
    }
  // transitivity spot-check through relabeled copies
  std::mt19937 rng(7);
  Configuration x = random_blowup_config(rng, 4);
  Configuration y = x;
  y.set_base_label("other");
  Configuration z = make_config("w", y.curves());
  for (const auto& [key, w] : y.edges()) z.set_edge(key.a, key.b, w);
  CHECK(is_isomorphic(x, y));
  CHECK(is_isomorphic(y, z));
  CHECK(is_isomorphic(x, z));
}

TEST_CASE("snc tree recognition") {
  CHECK(is_snc_tree(generic_fiber()));
  CHECK(is_snc_tree(a1a1_resolution()));
  Configuration doubled = make_config(
      "z", {{"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}}, {{"a", "b", 2}});
  CHECK_FALSE(is_snc_tree(doubled));
  Configuration cycle = make_config(
      "z", {{"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}, {"c", -2, 0, 0, 1}},
      {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
  CHECK_FALSE(is_snc_tree(cycle));
  CHECK_FALSE(is_snc_tree(Configuration("z")));
}

TEST_CASE("configuration edge bookkeeping") {
  Configuration cfg = a1a1_resolution();
  CHECK(cfg.edge_weight("C0", "E2") == 1);
  CHECK(cfg.edge_weight("E2", "C0") == 1);
  CHECK(cfg.edge_weight("C0", "E1") == 0);
  CHECK(cfg.neighbors("E2") == std::vector<CurveId>{"C0", "E1"});
  cfg.set_edge("C0", "E2", 0);
  CHECK(cfg.edges().size() == 1);
  CHECK_THROWS_AS(cfg.set_edge("C0", "nope", 1), PreconditionError);
  CHECK_THROWS_AS((void)cfg.curve("nope"), PreconditionError);
  CHECK_THROWS_AS(cfg.add_curve({"C0", 0, -2, 0, 1}), PreconditionError);
}
