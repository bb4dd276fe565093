#include "morifiber/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "morifiber/birational.hpp"
#include "morifiber/mmp.hpp"
#include "morifiber/singularities.hpp"

namespace morifiber {

namespace {

// Cheap canonical-ish key: sorted per-curve signatures with neighbor labels.
// Collisions are resolved by full isomorphism inside the bucket.
std::string bucket_key(const Configuration& cfg) {
  std::vector<std::string> parts;
  for (const Curve& c : cfg.curves()) {
    std::ostringstream os;
    os << c.self_int << ',' << c.k_deg << ',' << c.genus << ','
       << c.fiber_mult << '|';
    std::vector<std::string> nbr;
    for (const CurveId& id : cfg.neighbors(c.id)) {
      const Curve& n = cfg.curve(id);
      std::ostringstream no;
      no << cfg.edge_weight(c.id, id) << ':' << n.self_int << ',' << n.k_deg
         << ',' << n.fiber_mult;
      nbr.push_back(no.str());
    }
    std::sort(nbr.begin(), nbr.end());
    for (const std::string& s : nbr) os << s << ';';
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const std::string& p : parts) {
    key += p;
    key += '#';
  }
  return key;
}

}  // namespace

std::vector<EnumeratedConfig> enumerate_blowup_sequences(int depth) {
  if (depth < 0) throw PreconditionError("depth must be non-negative");

  Configuration start("z");
  start.add_curve({"C0", 0, -2, 0, 1});

  std::vector<EnumeratedConfig> out;
  out.push_back({start, {}, 0});
  std::vector<EnumeratedConfig> frontier = out;

  for (int d = 1; d <= depth; ++d) {
    std::vector<EnumeratedConfig> next;
    std::unordered_map<std::string, std::vector<std::size_t>> buckets;

    auto offer = [&](Configuration cfg, std::vector<std::string> log) {
      auto& bucket = buckets[bucket_key(cfg)];
      for (std::size_t idx : bucket)
        if (is_isomorphic(next[idx].config, cfg)) return;
      bucket.push_back(next.size());
      next.push_back({std::move(cfg), std::move(log), d});
    };

    for (const EnumeratedConfig& rec : frontier) {
      for (const Curve& c : rec.config.curves()) {
        auto log = rec.log;
        log.push_back("blowup_curve " + c.id);
        offer(blow_up_on_curve(rec.config, c.id), std::move(log));
      }
      for (const auto& [key, w] : rec.config.edges()) {
        if (w < 1) continue;
        auto log = rec.log;
        log.push_back("blowup_edge " + key.a + " " + key.b);
        offer(blow_up_on_edge(rec.config, key.a, key.b), std::move(log));
      }
    }

    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

ChainAdjacencyReport check_chain_adjacency(
    const std::vector<EnumeratedConfig>& configs, const CurveId& original) {
  ChainAdjacencyReport report;
  report.configs_checked = configs.size();
  for (std::size_t idx = 0; idx < configs.size(); ++idx) {
    const Configuration& cfg = configs[idx].config;
    for (const Curve& c : cfg.curves()) {
      if (c.id == original || c.self_int != -2) continue;
      std::vector<CurveId> bad;
      for (const CurveId& n : cfg.neighbors(c.id)) {
        if (n == original) continue;
        if (cfg.curve(n).self_int == -2) bad.push_back(n);
      }
      if (bad.size() > 2)
        report.violations.push_back({idx, c.id, std::move(bad)});
    }
  }
  return report;
}

ChainAdjacencyReport verify_chain_adjacency(int depth) {
  ChainAdjacencyReport report =
      check_chain_adjacency(enumerate_blowup_sequences(depth), "C0");
  report.depth = depth;
  return report;
}

namespace {

// Connected components of the induced subgraph on `members`.
std::vector<std::vector<CurveId>> components_of(const Configuration& cfg,
                                                const std::set<CurveId>& members) {
  std::vector<std::vector<CurveId>> out;
  std::set<CurveId> unassigned = members;
  while (!unassigned.empty()) {
    std::vector<CurveId> comp{*unassigned.begin()};
    unassigned.erase(unassigned.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const CurveId& n : cfg.neighbors(comp[i]))
        if (unassigned.count(n)) {
          unassigned.erase(n);
          comp.push_back(n);
        }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

FiberTableReport verify_fiber_table(int depth) {
  FiberTableReport report;
  report.depth = depth;

  const auto configs = enumerate_blowup_sequences(depth);
  report.configs_checked = configs.size();

  for (std::size_t idx = 0; idx < configs.size(); ++idx) {
    const Configuration& cfg = configs[idx].config;
    const std::string& label = cfg.base_label();

    for (const Curve& support : cfg.curves()) {
      std::set<CurveId> rest;
      for (const Curve& c : cfg.curves())
        if (c.id != support.id) rest.insert(c.id);

      auto comps = components_of(cfg, rest);
      bool all_ade = true;
      for (const auto& comp : comps)
        if (!classify_ade(cfg, comp)) all_ade = false;
      if (!all_ade) continue;  // not a Du Val designation

      SurfaceModel model;
      model.marked_points = {label};
      model.fibers[label] = cfg;
      for (const auto& comp : comps) model = contract_ade(model, label, comp);
      ++report.models_checked;

      const std::string where =
          "config " + std::to_string(idx) + " support " + support.id;

      if (support.fiber_mult > 2)
        report.violations.push_back(where + ": support multiplicity " +
                                    std::to_string(support.fiber_mult));
      if (comps.size() > 2)
        report.violations.push_back(where + ": " +
                                    std::to_string(comps.size()) +
                                    " singular points on one fiber");

      try {
        FiberType type = classify_mori_fiber(model, label);
        if (type.kind == FiberType::Kind::Reduced)
          ++report.reduced_count;
        else
          ++report.nonreduced_type_counts[to_string(type)];
      } catch (const InvariantViolation& e) {
        report.violations.push_back(where + ": " + e.what());
      }

      if (support.fiber_mult == 1 || support.fiber_mult == 2) {
        Rat self = intersection_on_singular(model, label, support.id,
                                            support.id);
        int k = k_degree_on_singular(model, label, support.id);
        int expected_k = support.fiber_mult == 2 ? -1 : -2;
        if (self != 0)
          report.mumford_violations.push_back(
              where + ": C.C = " + self.str() + " on the singular model");
        if (k != expected_k)
          report.mumford_violations.push_back(
              where + ": K.C = " + std::to_string(k) + ", expected " +
              std::to_string(expected_k));
      }
    }
  }
  return report;
}

bool negative_definite_bruteforce(const Mat& matrix) {
  const std::size_t n = matrix.size();
  if (n > 12) throw PreconditionError("bruteforce oracle is capped at 12x12");
  for (const auto& row : matrix)
    if (row.size() != n) throw PreconditionError("matrix is not square");

  // Leading principal minor of each size, by fraction-free elimination.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = matrix[i][j];

    Int prev = 1;
    int sign = 1;
    bool zero = false;
    for (std::size_t col = 0; col < k && !zero; ++col) {
      std::size_t pivot = col;
      while (pivot < k && a[pivot][col] == 0) ++pivot;
      if (pivot == k) {
        zero = true;
        break;
      }
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        sign = -sign;
      }
      for (std::size_t i = col + 1; i < k; ++i) {
        for (std::size_t j = col + 1; j < k; ++j)
          a[i][j] = (a[col][col] * a[i][j] - a[i][col] * a[col][j]) / prev;
        a[i][col] = 0;
      }
      prev = a[col][col];
    }
    if (zero) return false;  // det_k = 0: not definite
    Int det = sign * a[k - 1][k - 1];
    if (k % 2 == 0 ? det <= 0 : det >= 0) return false;
  }
  return true;
}

}  // namespace morifiber
