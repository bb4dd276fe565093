#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "morifiber/config.hpp"

namespace morifiber {

struct EnumeratedConfig {
  Configuration config;
  std::vector<std::string> log;  ///< blow-up moves that produced it
  int depth = 0;                 ///< number of blow-ups from the generic fiber
};

/// Breadth-first generation of every configuration reachable from the
/// generic ruled fiber {0, -2, 1} by at most `depth` blow-ups, where each
/// step picks any curve (generic point) or any edge (intersection point).
/// Deduplicated per level by labeled-graph isomorphism; one representative
/// operation log per class. The starting curve is always named C0.
std::vector<EnumeratedConfig> enumerate_blowup_sequences(int depth);

struct AdjacencyViolation {
  std::size_t config_index;
  CurveId curve;
  std::vector<CurveId> neighbors;  ///< offending (-2)-neighbors
};

struct ChainAdjacencyReport {
  int depth = 0;
  std::size_t configs_checked = 0;
  std::vector<AdjacencyViolation> violations;
};

/// Checks, over the given configurations, that every exceptional (-2)-curve
/// (everything except `original`) meets at most 2 other exceptional
/// (-2)-curves. Exposed separately so tests can inject negative controls.
ChainAdjacencyReport check_chain_adjacency(
    const std::vector<EnumeratedConfig>& configs, const CurveId& original);

/// check_chain_adjacency over enumerate_blowup_sequences(depth).
ChainAdjacencyReport verify_chain_adjacency(int depth);

struct FiberTableReport {
  int depth = 0;
  std::size_t configs_checked = 0;
  /// Valid single-support Du Val designations materialized as models.
  std::size_t models_checked = 0;
  std::size_t reduced_count = 0;
  /// Non-reduced Mori fiber types seen, keyed by printed form ("A1+A1",
  /// "D3", ...).
  std::map<std::string, std::size_t> nonreduced_type_counts;
  std::vector<std::string> violations;
  /// Support intersection numbers on the singular model that disagree with
  /// the values forced by F = 2C, F.F = 0, K.F = -2.
  std::vector<std::string> mumford_violations;
};

/// Sweeps every enumerated configuration and every way of contracting ADE
/// subsets that leaves an irreducible fiber, then checks each resulting
/// model against the classification table: support multiplicity <= 2, at
/// most 2 singular points, two points => both A1, one point => A3 or D_i,
/// and exact support intersection numbers via the Mumford pullback.
FiberTableReport verify_fiber_table(int depth);

/// Independent negative-definiteness oracle: leading principal minors by
/// integer fraction-free (Bareiss) elimination, implemented apart from
/// is_negative_definite. Size is capped at 12.
bool negative_definite_bruteforce(const Mat& matrix);

}  // namespace morifiber
