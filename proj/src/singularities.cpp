#include "morifiber/singularities.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace morifiber {

namespace {

// det by fraction elimination with partial pivoting; exact over Rat.
Rat rational_det(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

void require_square_symmetric(const Mat& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i])
        throw PreconditionError("matrix is not symmetric");
}

}  // namespace

bool is_negative_definite(const Mat& matrix) {
  require_square_symmetric(matrix);
  const std::size_t n = matrix.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rat>> lead(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = matrix[i][j];
    Rat d = rational_det(std::move(lead));
    if (k % 2 == 0 ? d <= 0 : d >= 0) return false;
  }
  return true;
}

std::optional<AdeType> classify_ade(const Configuration& config,
                                    const std::vector<CurveId>& subset) {
  if (subset.empty()) return std::nullopt;
  std::set<CurveId> members;
  for (const CurveId& id : subset) {
    config.index_of(id);  // throws on unknown
    if (!members.insert(id).second)
      throw PreconditionError("curve '" + id + "' listed twice");
  }

  for (const CurveId& id : subset) {
    const Curve& c = config.curve(id);
    if (c.self_int != -2 || c.k_deg != 0 || c.genus != 0) return std::nullopt;
  }

  const std::size_t n = subset.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edge_count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int w = config.edge_weight(subset[i], subset[j]);
      if (w == 0) continue;
      if (w != 1) return std::nullopt;  // Dynkin diagrams are simply laced
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edge_count;
    }

  if (edge_count != n - 1) return std::nullopt;  // not a tree
  {
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j : adj[i])
        if (!seen[j]) {
          seen[j] = 1;
          ++reached;
          todo.push(j);
        }
    }
    if (reached != n) return std::nullopt;
  }

  std::vector<std::size_t> branch_nodes;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) branch_nodes.push_back(i);
  }

  if (branch_nodes.empty()) return ade_a(static_cast<int>(n));
  if (branch_nodes.size() > 1) return std::nullopt;

  // One degree-3 node: measure the three arm lengths in vertices.
  const std::size_t center = branch_nodes[0];
  std::vector<int> arms;
  for (std::size_t start : adj[center]) {
    int len = 0;
    std::size_t prev = center, cur = start;
    while (true) {
      ++len;
      std::size_t next = n;
      for (std::size_t cand : adj[cur])
        if (cand != prev) next = cand;
      if (next == n) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end(), std::greater<int>());

  if (arms[1] == 1 && arms[2] == 1) return ade_d(arms[0] + 3);
  if (arms[2] == 1 && arms[1] == 2 && arms[0] >= 2 && arms[0] <= 4)
    return ade_e(arms[0] + 4);
  return std::nullopt;
}

SingularPoint make_singular_point(const Configuration& config,
                                  std::vector<CurveId> ids, AdeType type) {
  std::sort(ids.begin(), ids.end(), curve_id_less);
  SingularPoint pt;
  pt.type = type;
  pt.contracted = std::move(ids);
  std::set<CurveId> members(pt.contracted.begin(), pt.contracted.end());
  for (const Curve& c : config.curves()) {
    if (members.count(c.id)) continue;
    std::map<CurveId, int> row;
    for (const CurveId& e : pt.contracted) {
      int w = config.edge_weight(c.id, e);
      if (w > 0) row[e] = w;
    }
    if (!row.empty()) pt.attachments[c.id] = std::move(row);
  }
  return pt;
}

SurfaceModel contract_ade(const SurfaceModel& model, const std::string& label,
                          const std::vector<CurveId>& ids) {
  const Configuration& cfg = model.fiber(label);
  auto type = classify_ade(cfg, ids);
  if (!type)
    throw PreconditionError("subset is not a Du Val (ADE) configuration");

  for (const SingularPoint& pt : model.points(label)) {
    for (const CurveId& id : ids) {
      for (const CurveId& e : pt.contracted) {
        if (e == id)
          throw PreconditionError("curve '" + id +
                                  "' is already contracted on this fiber");
        if (cfg.edge_weight(id, e) > 0)
          throw PreconditionError(
              "curve '" + id + "' touches the existing singular point at '" +
              e + "'");
      }
    }
  }

  SurfaceModel out = model;
  out.contractions[label].push_back(make_singular_point(cfg, ids, *type));
  return out;
}

namespace {

void require_surviving(const SurfaceModel& model, const std::string& label,
                       const CurveId& id) {
  model.fiber(label).index_of(id);
  if (model.is_contracted(label, id))
    throw PreconditionError("curve '" + id +
                            "' is contracted on the singular model");
}

}  // namespace

std::map<CurveId, Rat> mumford_pullback(const SurfaceModel& model,
                                        const std::string& label,
                                        const CurveId& a) {
  require_surviving(model, label, a);
  const Configuration& cfg = model.fiber(label);

  std::vector<CurveId> contracted;
  for (const SingularPoint& pt : model.points(label))
    contracted.insert(contracted.end(), pt.contracted.begin(),
                      pt.contracted.end());
  std::sort(contracted.begin(), contracted.end(), curve_id_less);
  if (contracted.empty()) return {};

  // Solve M lambda = rhs with rhs_k = -(a.E_k); M is negative definite,
  // hence invertible, and the solution is exact over rationals.
  const std::size_t k = contracted.size();
  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = i == j ? cfg.curve(contracted[i]).self_int
                       : cfg.edge_weight(contracted[i], contracted[j]);
    m[i][k] = -cfg.edge_weight(a, contracted[i]);
  }

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k)
      throw InvariantViolation("contracted intersection matrix is singular");
    std::swap(m[pivot], m[col]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[col][j];
    }
  }

  std::map<CurveId, Rat> out;
  for (std::size_t i = 0; i < k; ++i)
    out[contracted[i]] = m[i][k] / m[i][i];
  return out;
}

Rat intersection_on_singular(const SurfaceModel& model,
                             const std::string& label, const CurveId& a,
                             const CurveId& b) {
  require_surviving(model, label, a);
  require_surviving(model, label, b);
  const Configuration& cfg = model.fiber(label);

  Rat result = a == b ? cfg.curve(a).self_int : cfg.edge_weight(a, b);
  for (const auto& [e, lambda] : mumford_pullback(model, label, a))
    result += lambda * cfg.edge_weight(b, e);
  return result;
}

int k_degree_on_singular(const SurfaceModel& model, const std::string& label,
                         const CurveId& a) {
  require_surviving(model, label, a);
  return model.fiber(label).curve(a).k_deg;
}

const Configuration& resolve(const SurfaceModel& model,
                             const std::string& label) {
  return model.fiber(label);
}

}  // namespace morifiber
