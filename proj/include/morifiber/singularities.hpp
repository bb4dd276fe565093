#pragma once

#include <map>
#include <optional>
#include <vector>

#include "morifiber/config.hpp"

namespace morifiber {

/// Exact Sylvester test: M is negative definite iff (-1)^k det M_k > 0 for
/// every leading principal minor M_k. Determinants are computed by Gaussian
/// elimination over rationals. Throws PreconditionError unless the matrix is
/// square and symmetric. The empty matrix counts as definite.
bool is_negative_definite(const Mat& matrix);

/// Recognizes a Du Val configuration: every curve of `subset` must be a
/// (-2)-curve with K.C = 0 and genus 0, and the induced dual graph must be
/// connected with all weights 1 and isomorphic to a Dynkin diagram of type
/// A, D or E. Returns std::nullopt otherwise. Unknown or repeated ids throw.
std::optional<AdeType> classify_ade(const Configuration& config,
                                    const std::vector<CurveId>& subset);

/// Builds the contraction record for `ids`, including the attachment table
/// of intersection numbers with the surviving curves.
SingularPoint make_singular_point(const Configuration& config,
                                  std::vector<CurveId> ids, AdeType type);

/// Designates `ids` for contraction to one Du Val point. The subset must
/// classify as ADE and must neither overlap nor touch an existing singular
/// point of the fiber. Surviving curves keep their smooth-model numbers:
/// the contraction is crepant.
SurfaceModel contract_ade(const SurfaceModel& model, const std::string& label,
                          const std::vector<CurveId>& ids);

/// The unique rational coefficients (lambda_j) on the contracted curves E_j
/// of the fiber with (A + sum lambda_j E_j).E_k = 0 for every k, solved
/// exactly. Empty when nothing is contracted.
std::map<CurveId, Rat> mumford_pullback(const SurfaceModel& model,
                                        const std::string& label,
                                        const CurveId& a);

/// Intersection number of two surviving curves on the singular model,
/// computed through the Mumford pullback.
Rat intersection_on_singular(const SurfaceModel& model,
                             const std::string& label, const CurveId& a,
                             const CurveId& b);

/// K-degree of a surviving curve on the singular model. Du Val contractions
/// are crepant, so this equals the smooth-model k_deg.
int k_degree_on_singular(const SurfaceModel& model, const std::string& label,
                         const CurveId& a);

/// The minimal resolution of the fiber: the stored smooth configuration.
const Configuration& resolve(const SurfaceModel& model,
                             const std::string& label);

}  // namespace morifiber
