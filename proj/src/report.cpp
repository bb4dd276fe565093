#include "morifiber/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace morifiber {

std::string dot_graph(const std::string& label, const Configuration& config,
                      const std::vector<SingularPoint>& points) {
  std::set<CurveId> contracted;
  for (const SingularPoint& pt : points)
    contracted.insert(pt.contracted.begin(), pt.contracted.end());

  std::vector<const Curve*> curves;
  for (const Curve& c : config.curves()) curves.push_back(&c);
  std::sort(curves.begin(), curves.end(),
            [](const Curve* a, const Curve* b) {
              return curve_id_less(a->id, b->id);
            });

  std::ostringstream out;
  out << "graph \"" << label << "\" {\n";
  out << "  node [shape=ellipse];\n";
  for (const Curve* c : curves) {
    out << "  \"" << c->id << "\" [label=\"" << c->id << " [" << c->self_int
        << ", " << c->k_deg << ", " << c->fiber_mult << "]\"";
    if (contracted.count(c->id)) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [key, w] : config.edges()) {
    if (w < 1) continue;
    out << "  \"" << key.a << "\" -- \"" << key.b << "\"";
    if (w > 1) out << " [label=\"" << w << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

void export_dot(const SurfaceModel& model, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const std::string& label : model.marked_points) {
    std::ofstream file(dir / (label + ".dot"));
    if (!file)
      throw Error("cannot write " + (dir / (label + ".dot")).string());
    file << dot_graph(label, model.fiber(label), model.points(label));
  }
}

nlohmann::json curve_record(const Curve& c) {
  return {{"id", c.id},
          {"self", c.self_int},
          {"k", c.k_deg},
          {"genus", c.genus},
          {"mult", c.fiber_mult}};
}

nlohmann::json config_record(const Configuration& config) {
  nlohmann::json curves = nlohmann::json::array();
  for (const Curve& c : config.curves()) curves.push_back(curve_record(c));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [key, w] : config.edges())
    edges.push_back({{"a", key.a}, {"b", key.b}, {"w", w}});
  return {{"base", config.base_label()},
          {"curves", std::move(curves)},
          {"edges", std::move(edges)}};
}

nlohmann::json point_record(const SingularPoint& pt) {
  nlohmann::json attachments = nlohmann::json::object();
  for (const auto& [curve, row] : pt.attachments) {
    nlohmann::json weights = nlohmann::json::object();
    for (const auto& [e, w] : row) weights[e] = w;
    attachments[curve] = std::move(weights);
  }
  return {{"type", to_string(pt.type)},
          {"curves", pt.contracted},
          {"attachments", std::move(attachments)}};
}

nlohmann::json model_record(const SurfaceModel& model) {
  nlohmann::json fibers = nlohmann::json::array();
  for (const std::string& label : model.marked_points) {
    nlohmann::json points = nlohmann::json::array();
    for (const SingularPoint& pt : model.points(label))
      points.push_back(point_record(pt));
    fibers.push_back({{"label", label},
                      {"config", config_record(model.fiber(label))},
                      {"points", std::move(points)}});
  }
  return {{"marked_points", model.marked_points},
          {"fibers", std::move(fibers)}};
}

nlohmann::json mmp_log_record(const std::vector<ContractionStep>& log) {
  nlohmann::json out = nlohmann::json::array();
  for (const ContractionStep& step : log)
    out.push_back({{"fiber", step.fiber},
                   {"curve", step.curve},
                   {"blown_down", step.blown_down}});
  return out;
}

nlohmann::json chain_adjacency_record(const ChainAdjacencyReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const AdjacencyViolation& v : report.violations)
    violations.push_back({{"config", v.config_index},
                          {"curve", v.curve},
                          {"neighbors", v.neighbors}});
  return {{"depth", report.depth},
          {"configs_checked", report.configs_checked},
          {"violations", std::move(violations)}};
}

nlohmann::json fiber_table_record(const FiberTableReport& report) {
  return {{"depth", report.depth},
          {"configs_checked", report.configs_checked},
          {"models_checked", report.models_checked},
          {"reduced", report.reduced_count},
          {"nonreduced_types", report.nonreduced_type_counts},
          {"violations", report.violations},
          {"mumford_violations", report.mumford_violations}};
}

std::string human_summary(const SurfaceModel& model) {
  std::ostringstream out;
  for (const std::string& label : model.marked_points) {
    const Configuration& cfg = model.fiber(label);
    out << "fiber " << label << "\n";
    for (const Curve& c : cfg.curves()) {
      out << "  curve " << c.id << " [" << c.self_int << ", " << c.k_deg
          << ", " << c.fiber_mult << "]";
      if (model.is_contracted(label, c.id)) out << " (contracted)";
      out << "\n";
    }
    for (const auto& [key, w] : cfg.edges()) {
      out << "  edge " << key.a << " -- " << key.b;
      if (w > 1) out << " x" << w;
      out << "\n";
    }
    for (const SingularPoint& pt : model.points(label)) {
      out << "  point " << to_string(pt.type) << " {";
      for (std::size_t i = 0; i < pt.contracted.size(); ++i)
        out << (i ? ", " : "") << pt.contracted[i];
      out << "}\n";
    }
  }
  return out.str();
}

}  // namespace morifiber
