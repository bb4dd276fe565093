#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "morifiber/birational.hpp"
#include "morifiber/mmp.hpp"
#include "morifiber/script.hpp"
#include "morifiber/singularities.hpp"

using namespace morifiber;
using namespace morifiber::testing;

namespace {

// F.F, K.F and F.C_i = 0 through the exact matrix.
void check_fiber_numbers(const Configuration& cfg) {
  const Mat m = intersection_matrix(cfg);
  const auto cycle = fiber_cycle(cfg);
  long long ff = 0, kf = 0;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    long long row = 0;
    for (std::size_t j = 0; j < cfg.size(); ++j) row += cycle[j] * m[i][j];
    CHECK(row == 0);
    ff += cycle[i] * row;
    kf += cycle[i] * cfg.curves()[i].k_deg;
  }
  CHECK(ff == 0);
  CHECK(kf == -2);
  for (const Curve& c : cfg.curves())
    CHECK(2 * c.genus - 2 == c.self_int + c.k_deg);
}

SurfaceModel a1a1_model(const std::string& label = "q1") {
  SurfaceModel model;
  model.marked_points = {label};
  Configuration cfg = a1a1_resolution();
  cfg.set_base_label(label);
  model.fibers[label] = cfg;
  model = contract_ade(model, label, {"C0"});
  model = contract_ade(model, label, {"E1"});
  return model;
}

}  // namespace

TEST_CASE("blow-up at a generic point of the generic fiber") {
  Configuration cfg = make_config("z", {{"C", 0, -2, 0, 1}});
  Configuration out = blow_up_on_curve(cfg, "C");
  Configuration expected = make_config(
      "z", {{"C", -1, -1, 0, 1}, {"E1", -1, -1, 0, 1}}, {{"C", "E1", 1}});
  CHECK(out == expected);
}

TEST_CASE("blow-up preserves validity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Configuration cfg = random_blowup_config(rng, 5);
    CHECK(validate(cfg).empty());
    check_fiber_numbers(cfg);
    CHECK(is_snc_tree(cfg));
  }
}

TEST_CASE("two generic blow-ups of the same curve") {
  Configuration cfg = generic_fiber();
  cfg = blow_up_on_curve(cfg, "C0");
  cfg = blow_up_on_curve(cfg, "C0");
  CHECK(cfg.curve("C0").self_int == -2);
  CHECK(cfg.curve("C0").k_deg == 0);
  for (const CurveId& e : {CurveId("E1"), CurveId("E2")}) {
    CHECK(cfg.curve(e).self_int == -1);
    CHECK(cfg.neighbors(e) == std::vector<CurveId>{"C0"});
  }
  CHECK(cfg.edge_weight("E1", "E2") == 0);
}

TEST_CASE("blow-up on the intersection point reaches the A1A1 resolution") {
  Configuration cfg = blow_up_on_curve(generic_fiber(), "C0");
  Configuration out = blow_up_on_edge(cfg, "C0", "E1");
  CHECK(out == a1a1_resolution());
  check_fiber_numbers(out);
}

TEST_CASE("blow-up on an edge with weight > 1 keeps the leftover crossings") {
  Configuration cfg = make_config(
      "z", {{"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}}, {{"a", "b", 2}});
  Configuration out = blow_up_on_edge(cfg, "a", "b");
  CHECK(out.edge_weight("a", "b") == 1);
  CHECK(out.edge_weight("a", "E1") == 1);
  CHECK(out.edge_weight("b", "E1") == 1);
  CHECK(out.curve("E1").fiber_mult == 2);
}

TEST_CASE("blow-up errors") {
  Configuration cfg = generic_fiber();
  CHECK_THROWS_AS(blow_up_on_curve(cfg, "nope"), PreconditionError);
  CHECK_THROWS_AS(blow_up_on_edge(a1a1_resolution(), "C0", "E1"),
                  PreconditionError);
}

TEST_CASE("blow-down inverts blow-up exactly") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Configuration cfg = random_blowup_config(rng, trial % 6);
    Configuration blown = random_blowup(rng, cfg);
    // the new curve is the last one added
    CurveId created = blown.curves().back().id;
    CHECK(blow_down(blown, created) == cfg);
  }
}

TEST_CASE("blow-down of the A1A1 resolution support, then of a leg") {
  Configuration cfg = make_config(
      "z",
      {{"s", -1, -1, 0, 2}, {"a", -2, 0, 0, 1}, {"b", -2, 0, 0, 1}},
      {{"s", "a", 1}, {"s", "b", 1}});
  Configuration step = blow_down(cfg, "s");
  Configuration expected = make_config(
      "z", {{"a", -1, -1, 0, 1}, {"b", -1, -1, 0, 1}}, {{"a", "b", 1}});
  CHECK(step == expected);
  check_fiber_numbers(step);

  Configuration ruled = blow_down(step, "a");
  CHECK(ruled == make_config("z", {{"b", 0, -2, 0, 1}}));
}

TEST_CASE("blow-down rejects everything but (-1)-curves with K.e = -1") {
  Configuration cfg = a1a1_resolution();
  CHECK_THROWS_AS(blow_down(cfg, "C0"), PreconditionError);  // a (-2)-curve
  CHECK_THROWS_AS(blow_down(cfg, "nope"), PreconditionError);
  Configuration fake = make_config("z", {{"g", -1, -1, 1, 1}});
  CHECK_THROWS_AS(blow_down(fake, "g"), PreconditionError);  // positive genus
}

TEST_CASE("curve count moves by one per operation") {
  std::mt19937 rng(5);
  Configuration cfg = random_blowup_config(rng, 4);
  std::size_t n = cfg.size();
  Configuration up = random_blowup(rng, cfg);
  CHECK(up.size() == n + 1);
  CHECK(blow_down(up, up.curves().back().id).size() == n);
}

TEST_CASE("elementary transform turns A1A1 into D3") {
  SurfaceModel model = a1a1_model();
  SurfaceModel out = elementary_transform(model, "q1", "E2");

  REQUIRE(out.points("q1").size() == 1);
  CHECK(out.points("q1")[0].type == ade_a(3));
  CHECK(out.points("q1")[0].contracted ==
        std::vector<CurveId>{"C0", "E1", "E2"});
  CHECK(classify_mori_fiber(out, "q1") == fiber_d(3));

  // new support: multiplicity-2 (-1)-curve meeting the middle of the chain
  auto survivors = out.surviving("q1");
  REQUIRE(survivors.size() == 1);
  const Curve& support = out.fiber("q1").curve(survivors[0]);
  CHECK(support.self_int == -1);
  CHECK(support.k_deg == -1);
  CHECK(support.fiber_mult == 2);
  CHECK(out.fiber("q1").edge_weight(support.id, "E2") == 1);
}

TEST_CASE("elementary transforms climb the D-ladder") {
  SurfaceModel model = a1a1_model();
  model = elementary_transform(model, "q1", "E2");
  for (int i = 3; i <= 9; ++i) {
    CHECK(classify_mori_fiber(model, "q1") == fiber_d(i));
    CurveId support = model.surviving("q1")[0];
    model = elementary_transform(model, "q1", support);
    CHECK(classify_mori_fiber(model, "q1") == fiber_d(i + 1));
  }
}

TEST_CASE("elementary transform rejects reduced fibers") {
  SurfaceModel model;
  model.marked_points = {"q1"};
  model.fibers["q1"] = generic_fiber("q1");
  CHECK_THROWS_AS(elementary_transform(model, "q1", "C0"), PreconditionError);
}

TEST_CASE("elementary transform rejects contracted curves") {
  SurfaceModel model = a1a1_model();
  CHECK_THROWS_AS(elementary_transform(model, "q1", "C0"), PreconditionError);
}

TEST_CASE("model-level blow-ups require surviving curves") {
  SurfaceModel model = a1a1_model();
  CHECK_THROWS_AS(blow_up_on_curve(model, "q1", "C0"), PreconditionError);
  SurfaceModel out = blow_up_on_curve(model, "q1", "E2");
  CHECK(out.fiber("q1").size() == 4);
  CHECK(out.points("q1") == model.points("q1"));
  CHECK_THROWS_AS(blow_up_on_edge(out, "q1", "E2", "C0"), PreconditionError);
}
