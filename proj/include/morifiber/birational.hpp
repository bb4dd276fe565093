#pragma once

#include <string>

#include "morifiber/config.hpp"

namespace morifiber {

/// First unused id of the form E1, E2, ... in the configuration.
CurveId fresh_exceptional_id(const Configuration& config);

/// Blow-up at a generic point of curve `c`. The exceptional curve gets
/// self -1, K -1 and the multiplicity of `c`; the host drops by one in
/// self-intersection and gains one in K-degree.
Configuration blow_up_on_curve(const Configuration& config, const CurveId& c,
                               const CurveId& new_id);
Configuration blow_up_on_curve(const Configuration& config, const CurveId& c);

/// Blow-up at an intersection point of curves `c` and `d` (edge weight must
/// be >= 1). The exceptional curve carries the sum of the two multiplicities
/// and separates one crossing: the edge weight drops by one.
Configuration blow_up_on_edge(const Configuration& config, const CurveId& c,
                              const CurveId& d, const CurveId& new_id);
Configuration blow_up_on_edge(const Configuration& config, const CurveId& c,
                              const CurveId& d);

/// Castelnuovo contraction of a (-1)-curve with K.e = -1 and genus 0.
/// Exact inverse of blowing up when `e` is the curve the blow-up created.
Configuration blow_down(const Configuration& config, const CurveId& e);

/// Blow-up of the singular model at a generic (hence smooth) point of the
/// surviving curve `c`; realized on the minimal resolution.
SurfaceModel blow_up_on_curve(const SurfaceModel& model,
                              const std::string& label, const CurveId& c);

/// Blow-up of the singular model at the intersection point of two surviving
/// curves, which is a smooth point of the surface.
SurfaceModel blow_up_on_edge(const SurfaceModel& model,
                             const std::string& label, const CurveId& c,
                             const CurveId& d);

/// Elementary transformation of a non-reduced fiber: blow up a generic point
/// of the multiplicity-2 curve `c`, then send the strict transform of the old
/// fiber support into the singular locus. The designated set (old singular
/// points attached to `c`, together with `c` itself) must contract to a
/// single Du Val point; the fiber classifies one step higher on the D-ladder.
SurfaceModel elementary_transform(const SurfaceModel& model,
                                  const std::string& label, const CurveId& c);

}  // namespace morifiber
