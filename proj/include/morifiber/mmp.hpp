#pragma once

#include <string>
#include <vector>

#include "morifiber/config.hpp"

namespace morifiber {

struct SmoothMmpResult {
  Configuration final;
  std::vector<CurveId> log;  ///< contracted curves, in order
};

/// Relative MMP on the smooth model of one fiber: repeatedly contracts the
/// lowest-id (-1)-curve with K.C = -1 until a single curve remains, which
/// must be the generic fiber {0, -2, mult 1}. Throws MmpStuckError when no
/// such curve exists with more than one component left, i.e. when the input
/// is not an iterated blow-up of a ruled fiber.
SmoothMmpResult relative_mmp_smooth(const Configuration& config);

/// One divisorial contraction of the singular model, centered at the
/// surviving curve `c` with negative K-degree.
///
/// On a fiber with several surviving curves this is an extremal MMP step:
/// the Mumford self-intersection of `c` must be negative and the union of
/// c's strict transform with the singular points sitting on it must be
/// exhausted by iterated (-1)-contractions on the resolution (the image
/// point is then smooth). On an irreducible non-reduced fiber the only
/// K-negative divisor inside the fiber is half the fiber itself; the step
/// contracts the support's strict transform on the resolution and
/// re-designates the remaining exceptional curves, walking the fiber one
/// step down the ladder D(i) -> D(i-1) -> ... -> A1+A1.
SurfaceModel extremal_contraction_singular(const SurfaceModel& model,
                                           const std::string& label,
                                           const CurveId& c);

struct ContractionStep {
  std::string fiber;
  CurveId curve;                   ///< surviving curve contracted downstairs
  std::vector<CurveId> blown_down; ///< resolution curves removed, in order
};

struct MoriResult {
  SurfaceModel model;
  std::vector<ContractionStep> log;
};

/// Runs extremal contractions fiber by fiber (marked points in order,
/// candidate curves by lowest id) until every fiber is irreducible on the
/// singular model: a Mori fiber model.
MoriResult to_mori_fiber(const SurfaceModel& model);

/// Classifies an irreducible fiber of a Mori fiber model against the table
/// of non-reduced fibers: Reduced, A1+A1 (two A1 points) or D(i) (one point
/// whose lattice is A3 for i = 3 and D_i for i >= 4). Any other shape throws
/// InvariantViolation - such a model is unreachable through the engine.
FiberType classify_mori_fiber(const SurfaceModel& model,
                              const std::string& label);

/// Number of non-reduced fibers of a Mori fiber model.
int count_nonreduced(const SurfaceModel& model);

}  // namespace morifiber
