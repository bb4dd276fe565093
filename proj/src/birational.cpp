#include "morifiber/birational.hpp"

#include <utility>

#include "morifiber/singularities.hpp"

namespace morifiber {

CurveId fresh_exceptional_id(const Configuration& config) {
  for (int k = 1;; ++k) {
    CurveId id = "E" + std::to_string(k);
    if (!config.has_curve(id)) return id;
  }
}

Configuration blow_up_on_curve(const Configuration& config, const CurveId& c,
                               const CurveId& new_id) {
  Configuration out = config;
  if (out.has_curve(new_id))
    throw PreconditionError("curve '" + new_id + "' already exists");
  Curve& host = out.curve_mut(c);
  Curve exceptional{new_id, -1, -1, 0, host.fiber_mult};
  host.self_int -= 1;
  host.k_deg += 1;
  out.add_curve(exceptional);
  out.set_edge(c, new_id, 1);
  return out;
}

Configuration blow_up_on_curve(const Configuration& config, const CurveId& c) {
  return blow_up_on_curve(config, c, fresh_exceptional_id(config));
}

Configuration blow_up_on_edge(const Configuration& config, const CurveId& c,
                              const CurveId& d, const CurveId& new_id) {
  if (config.edge_weight(c, d) < 1) {
    config.index_of(c);
    config.index_of(d);
    throw PreconditionError("curves '" + c + "' and '" + d +
                            "' have no intersection point");
  }
  Configuration out = config;
  if (out.has_curve(new_id))
    throw PreconditionError("curve '" + new_id + "' already exists");
  Curve exceptional{new_id, -1, -1, 0,
                    out.curve(c).fiber_mult + out.curve(d).fiber_mult};
  for (const CurveId& id : {c, d}) {
    Curve& host = out.curve_mut(id);
    host.self_int -= 1;
    host.k_deg += 1;
  }
  out.add_edge_weight(c, d, -1);
  out.add_curve(exceptional);
  out.set_edge(c, new_id, 1);
  out.set_edge(d, new_id, 1);
  return out;
}

Configuration blow_up_on_edge(const Configuration& config, const CurveId& c,
                              const CurveId& d) {
  return blow_up_on_edge(config, c, d, fresh_exceptional_id(config));
}

Configuration blow_down(const Configuration& config, const CurveId& e) {
  const Curve& exceptional = config.curve(e);
  if (exceptional.self_int != -1 || exceptional.k_deg != -1 ||
      exceptional.genus != 0)
    throw PreconditionError("curve '" + e +
                            "' is not a contractible (-1)-curve");

  std::vector<std::pair<CurveId, int>> incident;
  for (const auto& [key, w] : config.edges()) {
    if (w <= 0) continue;
    if (key.a == e) incident.emplace_back(key.b, w);
    if (key.b == e) incident.emplace_back(key.a, w);
  }

  Configuration out = config;
  for (const auto& [id, w] : incident) {
    Curve& c = out.curve_mut(id);
    c.self_int += w * w;
    c.k_deg -= w;
  }
  for (std::size_t i = 0; i < incident.size(); ++i)
    for (std::size_t j = i + 1; j < incident.size(); ++j)
      out.add_edge_weight(incident[i].first, incident[j].first,
                          incident[i].second * incident[j].second);
  out.remove_curve(e);
  return out;
}

namespace {

void require_surviving(const SurfaceModel& model, const std::string& label,
                       const CurveId& c) {
  model.fiber(label).index_of(c);
  if (model.is_contracted(label, c))
    throw PreconditionError("curve '" + c +
                            "' lies over a singular point, not a smooth one");
}

}  // namespace

SurfaceModel blow_up_on_curve(const SurfaceModel& model,
                              const std::string& label, const CurveId& c) {
  require_surviving(model, label, c);
  SurfaceModel out = model;
  out.fibers[label] = blow_up_on_curve(model.fiber(label), c);
  return out;
}

SurfaceModel blow_up_on_edge(const SurfaceModel& model,
                             const std::string& label, const CurveId& c,
                             const CurveId& d) {
  require_surviving(model, label, c);
  require_surviving(model, label, d);
  SurfaceModel out = model;
  out.fibers[label] = blow_up_on_edge(model.fiber(label), c, d);
  return out;
}

SurfaceModel elementary_transform(const SurfaceModel& model,
                                  const std::string& label, const CurveId& c) {
  require_surviving(model, label, c);
  const Configuration& cfg = model.fiber(label);
  if (cfg.curve(c).fiber_mult != 2)
    throw PreconditionError(
        "elementary transformation needs a point on the multiplicity-2 "
        "support of a non-reduced fiber");

  Configuration blown = blow_up_on_curve(cfg, c);

  // The strict transform of the old fiber support goes into the singular
  // locus: c itself plus every singular point sitting on c.
  std::vector<CurveId> designated{c};
  std::vector<SingularPoint> untouched;
  for (const SingularPoint& pt : model.points(label)) {
    bool on_c = false;
    for (const CurveId& e : pt.contracted)
      if (cfg.edge_weight(c, e) > 0) on_c = true;
    if (on_c)
      designated.insert(designated.end(), pt.contracted.begin(),
                        pt.contracted.end());
    else
      untouched.push_back(pt);
  }

  auto type = classify_ade(blown, designated);
  if (!type)
    throw PreconditionError(
        "strict transform of the fiber support does not contract to a Du Val "
        "point");

  SurfaceModel out = model;
  out.fibers[label] = blown;
  std::vector<SingularPoint> points;
  for (const SingularPoint& pt : untouched)
    points.push_back(make_singular_point(blown, pt.contracted, pt.type));
  points.push_back(make_singular_point(blown, designated, *type));
  out.contractions[label] = std::move(points);
  return out;
}

}  // namespace morifiber
