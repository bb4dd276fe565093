#include "morifiber/config.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "morifiber/singularities.hpp"

namespace morifiber {

bool Configuration::has_curve(const CurveId& id) const {
  for (const Curve& c : curves_)
    if (c.id == id) return true;
  return false;
}

std::size_t Configuration::index_of(const CurveId& id) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].id == id) return i;
  throw PreconditionError("unknown curve '" + id + "'");
}

const Curve& Configuration::curve(const CurveId& id) const {
  return curves_[index_of(id)];
}

Curve& Configuration::curve_mut(const CurveId& id) {
  return curves_[index_of(id)];
}

int Configuration::edge_weight(const CurveId& x, const CurveId& y) const {
  if (x == y) return 0;
  auto it = edges_.find(EdgeKey(x, y));
  return it == edges_.end() ? 0 : it->second;
}

std::vector<CurveId> Configuration::neighbors(const CurveId& id) const {
  std::vector<CurveId> out;
  for (const auto& [key, w] : edges_) {
    if (w <= 0) continue;
    if (key.a == id) out.push_back(key.b);
    if (key.b == id) out.push_back(key.a);
  }
  std::sort(out.begin(), out.end(), curve_id_less);
  return out;
}

void Configuration::add_curve(Curve c) {
  if (has_curve(c.id))
    throw PreconditionError("curve '" + c.id + "' already exists");
  curves_.push_back(std::move(c));
}

void Configuration::set_edge(const CurveId& x, const CurveId& y, int weight) {
  if (x == y) throw PreconditionError("self-intersections live on the curve");
  if (weight < 0) throw PreconditionError("negative edge weight");
  index_of(x);
  index_of(y);
  EdgeKey key(x, y);
  if (weight == 0)
    edges_.erase(key);
  else
    edges_[key] = weight;
}

void Configuration::add_edge_weight(const CurveId& x, const CurveId& y,
                                    int delta) {
  set_edge(x, y, edge_weight(x, y) + delta);
}

void Configuration::remove_curve(const CurveId& id) {
  std::size_t i = index_of(id);
  curves_.erase(curves_.begin() + static_cast<std::ptrdiff_t>(i));
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->first.a == id || it->first.b == id)
      it = edges_.erase(it);
    else
      ++it;
  }
}

std::vector<long long> fiber_cycle(const Configuration& config) {
  std::vector<long long> cycle;
  cycle.reserve(config.size());
  for (const Curve& c : config.curves()) cycle.push_back(c.fiber_mult);
  return cycle;
}

Mat intersection_matrix(const Configuration& config) {
  const std::size_t n = config.size();
  Mat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = config.curves()[i].self_int;
  for (const auto& [key, w] : config.edges()) {
    std::size_t i = config.index_of(key.a);
    std::size_t j = config.index_of(key.b);
    m[i][j] = w;
    m[j][i] = w;
  }
  return m;
}

namespace {

using VertexLabel = std::tuple<int, int, int, int>;

VertexLabel label_of(const Curve& c) {
  return {c.self_int, c.k_deg, c.genus, c.fiber_mult};
}

std::vector<std::vector<int>> adjacency(const Configuration& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const auto& [key, w] : c.edges()) {
    std::size_t i = c.index_of(key.a);
    std::size_t j = c.index_of(key.b);
    m[i][j] = w;
    m[j][i] = w;
  }
  return m;
}

// Vertex label refined by the multiset of (edge weight, neighbor label).
using Signature = std::pair<VertexLabel, std::vector<std::pair<int, VertexLabel>>>;

std::vector<Signature> signatures(const Configuration& c,
                                  const std::vector<std::vector<int>>& adj) {
  const std::size_t n = c.size();
  std::vector<VertexLabel> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = label_of(c.curves()[i]);
  std::vector<Signature> sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig[i].first = labels[i];
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j] > 0) sig[i].second.emplace_back(adj[i][j], labels[j]);
    std::sort(sig[i].second.begin(), sig[i].second.end());
  }
  return sig;
}

bool extend_mapping(const std::vector<std::vector<int>>& ma,
                    const std::vector<std::vector<int>>& mb,
                    const std::vector<std::vector<std::size_t>>& cand,
                    const std::vector<std::size_t>& order, std::size_t pos,
                    std::vector<std::size_t>& map_ab,
                    std::vector<char>& used) {
  if (pos == order.size()) return true;
  const std::size_t i = order[pos];
  for (std::size_t j : cand[i]) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t q = 0; q < pos; ++q) {
      const std::size_t i2 = order[q];
      if (ma[i][i2] != mb[j][map_ab[i2]]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map_ab[i] = j;
    used[j] = 1;
    if (extend_mapping(ma, mb, cand, order, pos + 1, map_ab, used)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Configuration& a, const Configuration& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  if (n == 0) return true;

  const auto ma = adjacency(a);
  const auto mb = adjacency(b);
  const auto sa = signatures(a, ma);
  const auto sb = signatures(b, mb);

  {
    auto xs = sa, ys = sb;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (xs != ys) return false;
  }

  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sa[i] == sb[j]) cand[i].push_back(j);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return cand[x].size() < cand[y].size();
  });

  std::vector<std::size_t> map_ab(n, n);
  std::vector<char> used(n, 0);
  return extend_mapping(ma, mb, cand, order, 0, map_ab, used);
}

bool is_snc_tree(const Configuration& config) {
  const std::size_t n = config.size();
  if (n == 0) return false;
  std::size_t edge_count = 0;
  for (const auto& [key, w] : config.edges()) {
    (void)key;
    if (w != 1) return false;
    ++edge_count;
  }
  if (edge_count != n - 1) return false;

  // connected + n-1 edges => tree
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  const auto adj = adjacency(config);
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j] > 0 && !seen[j]) {
        seen[j] = 1;
        ++reached;
        todo.push(j);
      }
  }
  return reached == n;
}

namespace {

// Rank of an integer matrix, by Gaussian elimination over exact rationals.
std::size_t rational_rank(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 0;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Violation> validate(const Configuration& config) {
  std::vector<Violation> out;
  const auto& curves = config.curves();
  const std::size_t n = curves.size();

  bool mults_positive = true;
  for (const Curve& c : curves) {
    if (c.fiber_mult < 1) {
      mults_positive = false;
      out.push_back({ViolationCode::BadMultiplicity,
                     "fiber multiplicity must be positive", {c.id}});
    }
    if (c.genus != 0)
      out.push_back(
          {ViolationCode::BadGenus, "fiber components must be rational", {c.id}});
    if (2 * c.genus - 2 != c.self_int + c.k_deg)
      out.push_back({ViolationCode::Adjunction,
                     "adjunction 2g-2 = C.C + K.C fails", {c.id}});
  }

  long long k_dot_f = 0;
  for (const Curve& c : curves)
    k_dot_f += static_cast<long long>(c.fiber_mult) * c.k_deg;
  if (k_dot_f != -2)
    out.push_back({ViolationCode::CanonicalFiberDegree,
                   "K.F = " + std::to_string(k_dot_f) + ", expected -2", {}});

  const Mat m = intersection_matrix(config);
  const auto cycle = fiber_cycle(config);
  bool orthogonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    long long fc = 0;
    for (std::size_t j = 0; j < n; ++j) fc += cycle[j] * m[i][j];
    if (fc != 0) {
      orthogonal = false;
      out.push_back({ViolationCode::FiberNotOrthogonal,
                     "F." + curves[i].id + " = " + std::to_string(fc) +
                         ", expected 0",
                     {curves[i].id}});
    }
  }

  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j] > 0 && i != j && !seen[j]) {
          seen[j] = 1;
          ++reached;
          todo.push(j);
        }
    }
    if (reached != n) {
      std::vector<CurveId> missing;
      for (std::size_t i = 0; i < n; ++i)
        if (!seen[i]) missing.push_back(curves[i].id);
      out.push_back({ViolationCode::Disconnected,
                     "dual graph is not connected", missing});
    }
  }

  // Zariski property. Once F.C_i = 0 holds with strictly positive
  // multiplicities, the pairing is negative semidefinite with radical
  // spanned by the fiber cycle iff its restriction to the complement of any
  // one component is negative definite.
  if (n > 1 && orthogonal && mults_positive) {
    Mat rest(n - 1, std::vector<long long>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) rest[i - 1][j - 1] = m[i][j];
    if (!is_negative_definite(rest)) {
      if (rational_rank(m) < n - 1)
        out.push_back({ViolationCode::RadicalNotFiberCycle,
                       "radical of the intersection form is larger than the "
                       "fiber cycle line",
                       {}});
      else
        out.push_back({ViolationCode::NotNegativeSemidefinite,
                       "intersection form is not negative semidefinite", {}});
    }
  }

  return out;
}

std::string to_string(const AdeType& t) {
  switch (t.series) {
    case AdeType::Series::A:
      return "A" + std::to_string(t.rank);
    case AdeType::Series::D:
      return "D" + std::to_string(t.rank);
    case AdeType::Series::E:
      return "E" + std::to_string(t.rank);
  }
  return "?";
}

std::string to_string(const FiberType& t) {
  switch (t.kind) {
    case FiberType::Kind::Reduced:
      return "Reduced";
    case FiberType::Kind::A1A1:
      return "A1+A1";
    case FiberType::Kind::D:
      return "D" + std::to_string(t.rank);
  }
  return "?";
}

const Configuration& SurfaceModel::fiber(const std::string& label) const {
  auto it = fibers.find(label);
  if (it == fibers.end())
    throw PreconditionError("unknown marked point '" + label + "'");
  return it->second;
}

const std::vector<SingularPoint>& SurfaceModel::points(
    const std::string& label) const {
  static const std::vector<SingularPoint> none;
  auto it = contractions.find(label);
  return it == contractions.end() ? none : it->second;
}

bool SurfaceModel::is_contracted(const std::string& label,
                                 const CurveId& id) const {
  for (const SingularPoint& pt : points(label))
    for (const CurveId& c : pt.contracted)
      if (c == id) return true;
  return false;
}

std::vector<CurveId> SurfaceModel::surviving(const std::string& label) const {
  std::vector<CurveId> out;
  for (const Curve& c : fiber(label).curves())
    if (!is_contracted(label, c.id)) out.push_back(c.id);
  std::sort(out.begin(), out.end(), curve_id_less);
  return out;
}

}  // namespace morifiber
