// Command-line front end: build surfaces from construction scripts, run the
// relative MMP, classify fibers, evaluate pluri-form dimensions, export dual
// graphs and run the exhaustive verification suite.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morifiber/mmp.hpp"
#include "morifiber/oracle.hpp"
#include "morifiber/pluriforms.hpp"
#include "morifiber/report.hpp"
#include "morifiber/script.hpp"
#include "morifiber/singularities.hpp"

namespace {

using namespace morifiber;

constexpr int kExitUsage = 1;      // script or argument errors
constexpr int kExitViolation = 2;  // invariant violations detected

// Human-readable output is dropped when the structured record goes to
// stdout, so that `--json -` emits one clean document.
struct NullBuffer : std::streambuf {
  int overflow(int c) override { return c; }
};
NullBuffer null_buffer;
std::ostream null_stream(&null_buffer);

std::ostream& human_out(const std::string& json_path) {
  return json_path == "-" ? null_stream : std::cout;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SurfaceModel build_from(const std::string& path) {
  return run_script(parse_script(read_file(path)));
}

void emit_json(const std::string& path, const nlohmann::json& doc) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

int cmd_build(const std::string& script, const std::string& json_path) {
  SurfaceModel model = build_from(script);
  human_out(json_path) << human_summary(model);
  nlohmann::json doc = {{"command", "build"}, {"model", model_record(model)}};
  emit_json(json_path, doc);
  return 0;
}

int cmd_mmp(const std::string& script, const std::string& json_path) {
  SurfaceModel model = build_from(script);
  MoriResult mori = to_mori_fiber(model);
  std::ostream& out = human_out(json_path);
  for (const ContractionStep& step : mori.log) {
    out << step.fiber << ": contract " << step.curve << " (blow down";
    for (const CurveId& id : step.blown_down) out << ' ' << id;
    out << ")\n";
  }
  if (mori.log.empty()) out << "already a Mori fiber model\n";
  out << human_summary(mori.model);
  nlohmann::json doc = {{"command", "mmp"},
                        {"log", mmp_log_record(mori.log)},
                        {"model", model_record(mori.model)}};
  emit_json(json_path, doc);
  return 0;
}

int cmd_classify(const std::string& script, const std::string& json_path) {
  SurfaceModel model = build_from(script);
  MoriResult mori = to_mori_fiber(model);
  std::ostream& out = human_out(json_path);

  nlohmann::json fibers = nlohmann::json::array();
  for (const std::string& label : mori.model.marked_points) {
    FiberType type = classify_mori_fiber(mori.model, label);
    out << label << ": " << to_string(type);
    nlohmann::json points = nlohmann::json::array();
    if (!mori.model.points(label).empty()) {
      out << "  [";
      bool first = true;
      for (const SingularPoint& pt : mori.model.points(label)) {
        out << (first ? "" : "; ") << to_string(pt.type) << " at {";
        for (std::size_t i = 0; i < pt.contracted.size(); ++i)
          out << (i ? ", " : "") << pt.contracted[i];
        out << "}";
        first = false;
        points.push_back(point_record(pt));
      }
      out << "]";
    }
    out << "\n";
    fibers.push_back({{"label", label},
                      {"type", to_string(type)},
                      {"points", std::move(points)}});
  }
  nlohmann::json doc = {{"command", "classify"},
                        {"fibers", std::move(fibers)},
                        {"mmp_log", mmp_log_record(mori.log)}};
  emit_json(json_path, doc);
  return 0;
}

int cmd_dims(const std::string& script, const std::vector<long long>& ms,
             const std::string& json_path) {
  SurfaceModel model = build_from(script);
  nlohmann::json dims = nlohmann::json::object();
  std::ostream& out = human_out(json_path);
  for (long long m : ms) {
    long long dim = pluriform_dim_of_model(model, m);
    out << "m=" << m << ": " << dim << "\n";
    dims[std::to_string(m)] = dim;
  }
  emit_json(json_path, {{"command", "dims"}, {"dims", std::move(dims)}});
  return 0;
}

int cmd_verify(int depth, const std::string& json_path) {
  ChainAdjacencyReport chain = verify_chain_adjacency(depth);
  FiberTableReport table = verify_fiber_table(depth);

  std::size_t invalid_configs = 0;
  for (const EnumeratedConfig& rec : enumerate_blowup_sequences(depth)) {
    if (!validate(rec.config).empty() || !is_snc_tree(rec.config))
      ++invalid_configs;
  }

  std::ostream& out = human_out(json_path);
  out << "enumerated " << chain.configs_checked
      << " configurations up to depth " << depth << "\n";
  out << "structural validity: " << invalid_configs << " violations\n";
  out << "(-2)-chain adjacency: " << chain.violations.size()
      << " violations\n";
  out << "fiber table (" << table.models_checked
      << " singular models): " << table.violations.size() << " violations\n";
  out << "support intersection numbers: " << table.mumford_violations.size()
      << " violations\n";
  for (const auto& [type, count] : table.nonreduced_type_counts)
    out << "  " << type << ": " << count << "\n";

  nlohmann::json doc = {{"command", "verify"},
                        {"invalid_configs", invalid_configs},
                        {"chain_adjacency", chain_adjacency_record(chain)},
                        {"fiber_table", fiber_table_record(table)}};
  emit_json(json_path, doc);

  bool clean = chain.violations.empty() && table.violations.empty() &&
               table.mumford_violations.empty() && invalid_configs == 0;
  out << (clean ? "verification clean\n" : "VIOLATIONS FOUND\n");
  return clean ? 0 : kExitViolation;
}

int cmd_export_dot(const std::string& script, const std::string& out_dir) {
  SurfaceModel model = build_from(script);
  export_dot(model, out_dir);
  std::cout << "wrote " << model.marked_points.size() << " graphs to "
            << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact birational geometry of fibered surfaces over the line"};
  app.require_subcommand(1);

  std::string script_path, json_path, out_dir;
  std::vector<long long> ms{1, 2, 3, 4, 5, 6};
  int depth = 5;

  auto add_script = [&](CLI::App* cmd) {
    cmd->add_option("script", script_path, "construction script file")
        ->required();
    cmd->add_option("--json", json_path,
                    "write a structured record ('-' for stdout)");
  };

  CLI::App* build = app.add_subcommand("build", "replay a construction script");
  add_script(build);
  CLI::App* mmp = app.add_subcommand("mmp", "run the relative MMP");
  add_script(mmp);
  CLI::App* classify =
      app.add_subcommand("classify", "classify the fibers of the Mori model");
  add_script(classify);
  CLI::App* dims =
      app.add_subcommand("dims", "pluri-form dimensions of the built surface");
  add_script(dims);
  dims->add_option("--m", ms, "tensor powers to evaluate")->delimiter(',');
  CLI::App* verify =
      app.add_subcommand("verify", "exhaustive verification at bounded depth");
  verify->add_option("--depth", depth, "blow-up depth (max 8)")
      ->check(CLI::Range(0, 8));
  verify->add_option("--json", json_path,
                     "write a structured record ('-' for stdout)");
  CLI::App* exp =
      app.add_subcommand("export-dot", "write one DOT graph per fiber");
  add_script(exp);
  exp->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(script_path, json_path);
    if (mmp->parsed()) return cmd_mmp(script_path, json_path);
    if (classify->parsed()) return cmd_classify(script_path, json_path);
    if (dims->parsed()) return cmd_dims(script_path, ms, json_path);
    if (verify->parsed()) return cmd_verify(depth, json_path);
    if (exp->parsed()) return cmd_export_dot(script_path, out_dir);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
