#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "morifiber/config.hpp"
#include "morifiber/mmp.hpp"
#include "morifiber/oracle.hpp"

namespace morifiber {

/// DOT rendering of one fiber. Bit-stable: curves sorted by id, fixed
/// attribute order, contracted curves drawn with a doubled border. Node
/// labels read "id [self, K, mult]".
std::string dot_graph(const std::string& label, const Configuration& config,
                      const std::vector<SingularPoint>& points);

/// Writes one <label>.dot file per fiber into `dir` (created if needed).
void export_dot(const SurfaceModel& model, const std::filesystem::path& dir);

nlohmann::json curve_record(const Curve& c);
nlohmann::json config_record(const Configuration& config);
nlohmann::json point_record(const SingularPoint& pt);
nlohmann::json model_record(const SurfaceModel& model);
nlohmann::json mmp_log_record(const std::vector<ContractionStep>& log);
nlohmann::json chain_adjacency_record(const ChainAdjacencyReport& report);
nlohmann::json fiber_table_record(const FiberTableReport& report);

/// Human-readable per-fiber summary of a model.
std::string human_summary(const SurfaceModel& model);

}  // namespace morifiber
