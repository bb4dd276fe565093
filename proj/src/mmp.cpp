#include "morifiber/mmp.hpp"

#include <optional>
#include <set>

#include "morifiber/birational.hpp"
#include "morifiber/singularities.hpp"

namespace morifiber {

namespace {

bool is_minus_one_curve(const Curve& c) {
  return c.self_int == -1 && c.k_deg == -1 && c.genus == 0;
}

std::optional<CurveId> lowest_minus_one(const Configuration& cfg,
                                        const std::set<CurveId>* within) {
  std::optional<CurveId> best;
  for (const Curve& c : cfg.curves()) {
    if (!is_minus_one_curve(c)) continue;
    if (within && !within->count(c.id)) continue;
    if (!best || curve_id_less(c.id, *best)) best = c.id;
  }
  return best;
}

}  // namespace

SmoothMmpResult relative_mmp_smooth(const Configuration& config) {
  Configuration cfg = config;
  std::vector<CurveId> log;
  while (cfg.size() > 1) {
    auto next = lowest_minus_one(cfg, nullptr);
    if (!next)
      throw MmpStuckError(
          "no (-1)-curve left with " + std::to_string(cfg.size()) +
          " components: not an iterated blow-up of a ruled fiber");
    log.push_back(*next);
    cfg = blow_down(cfg, *next);
  }
  if (cfg.size() != 1)
    throw MmpStuckError("empty configuration");
  const Curve& last = cfg.curves()[0];
  if (last.self_int != 0 || last.k_deg != -2 || last.fiber_mult != 1)
    throw MmpStuckError("relative MMP did not end at a generic ruled fiber");
  return {std::move(cfg), std::move(log)};
}

namespace {

struct StepOutcome {
  SurfaceModel model;
  std::vector<CurveId> blown_down;
};

// Recomputes attachment tables against the current resolution.
std::vector<SingularPoint> rebuild_points(
    const Configuration& cfg, const std::vector<SingularPoint>& points) {
  std::vector<SingularPoint> out;
  out.reserve(points.size());
  for (const SingularPoint& pt : points)
    out.push_back(make_singular_point(cfg, pt.contracted, pt.type));
  return out;
}

// Extremal divisorial step: contract the surviving curve c downstairs. On
// the resolution this removes c together with every singular point sitting
// on it, by iterated (-1)-contractions; anything short of full exhaustion
// would leave a singular image point, which extremal contractions of
// canonical surfaces never produce.
std::optional<StepOutcome> try_extremal_step(const SurfaceModel& model,
                                             const std::string& label,
                                             const CurveId& c) {
  const Configuration& cfg = model.fiber(label);

  std::set<CurveId> to_contract{c};
  std::vector<SingularPoint> kept;
  for (const SingularPoint& pt : model.points(label)) {
    bool adjacent = false;
    for (const CurveId& e : pt.contracted)
      if (cfg.edge_weight(c, e) > 0) adjacent = true;
    if (adjacent)
      to_contract.insert(pt.contracted.begin(), pt.contracted.end());
    else
      kept.push_back(pt);
  }

  Configuration work = cfg;
  std::vector<CurveId> blown;
  while (!to_contract.empty()) {
    auto next = lowest_minus_one(work, &to_contract);
    if (!next) return std::nullopt;  // union is not exhaustible
    to_contract.erase(*next);
    blown.push_back(*next);
    work = blow_down(work, *next);
  }

  SurfaceModel out = model;
  out.fibers[label] = work;
  if (kept.empty())
    out.contractions.erase(label);
  else
    out.contractions[label] = rebuild_points(work, kept);
  return StepOutcome{std::move(out), std::move(blown)};
}

// Ladder step on an irreducible non-reduced fiber: contract the support's
// strict transform on the resolution. Exceptional curves that met it leave
// the singular locus; the remaining ones re-classify component by component.
SurfaceModel ladder_step(const SurfaceModel& model, const std::string& label,
                         const CurveId& c) {
  const Configuration& cfg = model.fiber(label);
  if (!is_minus_one_curve(cfg.curve(c)))
    throw PreconditionError(
        "fiber support is not contractible on the resolution");

  std::set<CurveId> released;
  for (const CurveId& id : cfg.neighbors(c))
    if (model.is_contracted(label, id)) released.insert(id);

  Configuration work = blow_down(cfg, c);

  std::set<CurveId> still_contracted;
  for (const SingularPoint& pt : model.points(label))
    for (const CurveId& id : pt.contracted)
      if (!released.count(id)) still_contracted.insert(id);

  // Split the remaining exceptional curves into connected components; each
  // must again be a Du Val configuration.
  std::vector<SingularPoint> points;
  std::set<CurveId> unassigned = still_contracted;
  while (!unassigned.empty()) {
    std::vector<CurveId> component{*unassigned.begin()};
    unassigned.erase(unassigned.begin());
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (const CurveId& id : work.neighbors(component[i])) {
        if (unassigned.count(id)) {
          unassigned.erase(id);
          component.push_back(id);
        }
      }
    }
    auto type = classify_ade(work, component);
    if (!type)
      throw InvariantViolation(
          "exceptional curves left after the ladder step are not Du Val");
    points.push_back(make_singular_point(work, component, *type));
  }

  SurfaceModel out = model;
  out.fibers[label] = work;
  if (points.empty())
    out.contractions.erase(label);
  else
    out.contractions[label] = std::move(points);
  return out;
}

}  // namespace

SurfaceModel extremal_contraction_singular(const SurfaceModel& model,
                                           const std::string& label,
                                           const CurveId& c) {
  const Configuration& cfg = model.fiber(label);
  cfg.index_of(c);
  if (model.is_contracted(label, c))
    throw PreconditionError("curve '" + c + "' is already contracted");
  if (k_degree_on_singular(model, label, c) >= 0)
    throw PreconditionError("curve '" + c +
                            "' is not K-negative on the singular model");

  if (model.surviving(label).size() == 1) return ladder_step(model, label, c);

  if (intersection_on_singular(model, label, c, c) >= 0)
    throw PreconditionError(
        "curve '" + c +
        "' has non-negative self-intersection on the singular model");
  auto outcome = try_extremal_step(model, label, c);
  if (!outcome)
    throw PreconditionError(
        "contracting '" + c +
        "' does not land on a smooth point: the exceptional union is not "
        "exhausted by (-1)-contractions");
  return std::move(outcome->model);
}

MoriResult to_mori_fiber(const SurfaceModel& model) {
  SurfaceModel cur = model;
  std::vector<ContractionStep> log;

  const std::vector<std::string> labels = cur.marked_points;
  for (const std::string& label : labels) {
    while (true) {
      std::vector<CurveId> survivors = cur.surviving(label);
      if (survivors.size() <= 1) break;

      bool applied = false;
      for (const CurveId& c : survivors) {
        if (cur.fiber(label).curve(c).k_deg >= 0) continue;
        auto outcome = try_extremal_step(cur, label, c);
        if (!outcome) continue;
        log.push_back({label, c, std::move(outcome->blown_down)});
        cur = std::move(outcome->model);
        applied = true;
        break;
      }
      if (!applied)
        throw MmpStuckError("fiber over '" + label +
                            "': no extremal contraction applies");
    }
  }
  return {std::move(cur), std::move(log)};
}

FiberType classify_mori_fiber(const SurfaceModel& model,
                              const std::string& label) {
  std::vector<CurveId> survivors = model.surviving(label);
  if (survivors.size() != 1)
    throw PreconditionError("fiber over '" + label +
                            "' is not irreducible on the singular model");
  const Curve& support = model.fiber(label).curve(survivors[0]);
  const auto& pts = model.points(label);

  if (pts.empty()) {
    if (support.fiber_mult == 1) return fiber_reduced();
    throw InvariantViolation(
        "non-reduced fiber without singular points is outside the table");
  }

  if (support.fiber_mult != 2)
    throw InvariantViolation("singular fiber with support multiplicity " +
                             std::to_string(support.fiber_mult) +
                             " is outside the table");

  if (pts.size() == 2) {
    for (const SingularPoint& pt : pts)
      if (pt.type != ade_a(1))
        throw InvariantViolation(
            "two singular points on one fiber must both be A1, got " +
            to_string(pt.type));
    return fiber_a1a1();
  }

  if (pts.size() == 1) {
    const AdeType& t = pts[0].type;
    if (t == ade_a(3)) return fiber_d(3);
    if (t.series == AdeType::Series::D) return fiber_d(t.rank);
    throw InvariantViolation(
        "isolated singular point of a non-reduced fiber must be A3 or D_i, "
        "got " +
        to_string(t));
  }

  throw InvariantViolation("more than 2 singular points on one fiber");
}

int count_nonreduced(const SurfaceModel& model) {
  int count = 0;
  for (const std::string& label : model.marked_points) {
    std::vector<CurveId> survivors = model.surviving(label);
    if (survivors.size() != 1)
      throw PreconditionError("fiber over '" + label +
                              "' is not irreducible: not a Mori fiber model");
    if (model.fiber(label).curve(survivors[0]).fiber_mult == 2) ++count;
  }
  return count;
}

}  // namespace morifiber
