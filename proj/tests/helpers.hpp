#pragma once

#include <random>
#include <tuple>
#include <vector>

#include "morifiber/birational.hpp"
#include "morifiber/config.hpp"

namespace morifiber::testing {

inline Configuration make_config(
    const std::string& base, const std::vector<Curve>& curves,
    const std::vector<std::tuple<CurveId, CurveId, int>>& edges = {}) {
  Configuration cfg(base);
  for (const Curve& c : curves) cfg.add_curve(c);
  for (const auto& [a, b, w] : edges) cfg.set_edge(a, b, w);
  return cfg;
}

inline Configuration generic_fiber(const std::string& base = "z") {
  return make_config(base, {{"C0", 0, -2, 0, 1}});
}

/// Example construction, step (ii): two disjoint (-2)-curves and one
/// (-1)-curve of multiplicity two.
inline Configuration a1a1_resolution() {
  return make_config("z",
                     {{"C0", -2, 0, 0, 1}, {"E1", -2, 0, 0, 1},
                      {"E2", -1, -1, 0, 2}},
                     {{"C0", "E2", 1}, {"E1", "E2", 1}});
}

/// One random blow-up (generic point or intersection point), uniformly over
/// the available choices.
inline Configuration random_blowup(std::mt19937& rng,
                                   const Configuration& cfg) {
  std::vector<std::pair<CurveId, CurveId>> choices;
  for (const Curve& c : cfg.curves()) choices.emplace_back(c.id, "");
  for (const auto& [key, w] : cfg.edges())
    if (w >= 1) choices.emplace_back(key.a, key.b);
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  const auto& [a, b] = choices[pick(rng)];
  return b.empty() ? blow_up_on_curve(cfg, a) : blow_up_on_edge(cfg, a, b);
}

inline Configuration random_blowup_config(std::mt19937& rng, int steps) {
  Configuration cfg = generic_fiber();
  for (int i = 0; i < steps; ++i) cfg = random_blowup(rng, cfg);
  return cfg;
}

/// Negated Cartan matrix of an A_n chain.
inline Mat chain_matrix(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = -2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

/// Negated Cartan matrix of D_n (n >= 4): chain of n-1 nodes with one extra
/// leaf attached to the second-to-last node.
inline Mat d_matrix(int n) {
  Mat m = chain_matrix(n);
  m[n - 1][n - 2] = m[n - 2][n - 1] = 0;
  m[n - 1][n - 3] = m[n - 3][n - 1] = 1;
  return m;
}

/// Negated Cartan matrix of E_n (n = 6, 7, 8): chain of n-1 nodes plus a
/// leaf attached to the third node.
inline Mat e_matrix(int n) {
  Mat m = chain_matrix(n);
  m[n - 1][n - 2] = m[n - 2][n - 1] = 0;
  m[n - 1][2] = m[2][n - 1] = 1;
  return m;
}

}  // namespace morifiber::testing
