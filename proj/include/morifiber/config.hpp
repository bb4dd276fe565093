#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "morifiber/errors.hpp"
#include "morifiber/rational.hpp"

namespace morifiber {

using CurveId = std::string;

/// Deterministic "lowest id" order used by every tie-break in the engine:
/// shorter ids first, then lexicographic, so that E2 < E10 and C0 < E1.
inline bool curve_id_less(const CurveId& a, const CurveId& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// One irreducible rational curve in a fiber of the smooth model.
struct Curve {
  CurveId id;
  int self_int = 0;    ///< C.C
  int k_deg = 0;       ///< K.C
  int genus = 0;       ///< always 0 for curves produced by the engine
  int fiber_mult = 1;  ///< coefficient of C in the fiber cycle

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// Unordered pair of curve ids, normalized so that a precedes b.
struct EdgeKey {
  CurveId a, b;

  EdgeKey(CurveId x, CurveId y) {
    if (curve_id_less(y, x)) std::swap(x, y);
    a = std::move(x);
    b = std::move(y);
  }

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend bool operator<(const EdgeKey& l, const EdgeKey& r) {
    if (l.a != r.a) return curve_id_less(l.a, r.a);
    return curve_id_less(l.b, r.b);
  }
};

/// The dual graph of a fiber on a smooth surface model: curves plus a
/// symmetric non-negative intersection pairing between distinct curves.
///
/// Configurations behave as values: every birational operation takes one by
/// const reference and returns a new one, so instances may be shared across
/// threads freely.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::string base_label)
      : base_label_(std::move(base_label)) {}

  const std::string& base_label() const { return base_label_; }
  void set_base_label(std::string label) { base_label_ = std::move(label); }

  const std::vector<Curve>& curves() const { return curves_; }
  const std::map<EdgeKey, int>& edges() const { return edges_; }
  std::size_t size() const { return curves_.size(); }
  bool empty() const { return curves_.empty(); }

  bool has_curve(const CurveId& id) const;
  std::size_t index_of(const CurveId& id) const;
  const Curve& curve(const CurveId& id) const;

  /// Intersection number of two distinct curves; 0 when no edge is stored.
  int edge_weight(const CurveId& x, const CurveId& y) const;
  /// Curves meeting `id`, sorted by curve_id_less.
  std::vector<CurveId> neighbors(const CurveId& id) const;

  // Construction / transform plumbing. Operations copy a configuration and
  // rebuild it through these; weight 0 erases the edge so that equal graphs
  // compare equal field for field.
  void add_curve(Curve c);
  void set_edge(const CurveId& x, const CurveId& y, int weight);
  void add_edge_weight(const CurveId& x, const CurveId& y, int delta);
  void remove_curve(const CurveId& id);
  Curve& curve_mut(const CurveId& id);

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::string base_label_;
  std::vector<Curve> curves_;
  std::map<EdgeKey, int> edges_;
};

/// Multiplicity vector (m_i) in the order of `curves()`.
std::vector<long long> fiber_cycle(const Configuration& config);

/// Symmetric intersection matrix in the order of `curves()`.
Mat intersection_matrix(const Configuration& config);

/// Labeled graph isomorphism: a bijection of curves preserving self_int,
/// k_deg, genus, fiber_mult and every edge weight. Exact backtracking with
/// signature pruning; fiber graphs stay small.
bool is_isomorphic(const Configuration& a, const Configuration& b);

/// True iff the dual graph is connected, acyclic and every edge weight is 1.
bool is_snc_tree(const Configuration& config);

enum class ViolationCode {
  BadMultiplicity,       // fiber_mult < 1
  BadGenus,              // genus != 0
  Adjunction,            // 2g - 2 != C.C + K.C
  FiberNotOrthogonal,    // F.C != 0 for some component C
  CanonicalFiberDegree,  // K.F != -2
  Disconnected,
  NotNegativeSemidefinite,
  RadicalNotFiberCycle,
};

struct Violation {
  ViolationCode code;
  std::string message;
  std::vector<CurveId> curves;
};

/// Checks every invariant of a configuration representing a full fiber.
/// Violations are data, not errors; an empty result means valid.
std::vector<Violation> validate(const Configuration& config);

/// Du Val singularity type. Ranks follow the honest lattice: A(n >= 1),
/// D(n >= 4), E(6|7|8). A rank-3 chain is an A(3) lattice; the "D3" fiber
/// label of the classification table is reconciled in the mmp layer.
struct AdeType {
  enum class Series { A, D, E };
  Series series = Series::A;
  int rank = 1;

  friend bool operator==(const AdeType&, const AdeType&) = default;
  friend auto operator<=>(const AdeType&, const AdeType&) = default;
};

std::string to_string(const AdeType& t);

inline AdeType ade_a(int n) { return {AdeType::Series::A, n}; }
inline AdeType ade_d(int n) { return {AdeType::Series::D, n}; }
inline AdeType ade_e(int n) { return {AdeType::Series::E, n}; }

/// A contracted ADE configuration attached to the surviving curves. The
/// contracted curves always form a subset of the fiber's smooth-model
/// configuration, which is the minimal resolution of the singular point.
struct SingularPoint {
  AdeType type;
  std::vector<CurveId> contracted;  ///< sorted by curve_id_less
  /// surviving curve id -> contracted curve id -> intersection number;
  /// only non-zero rows are stored.
  std::map<CurveId, std::map<CurveId, int>> attachments;

  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// A fibered surface over the line, described fiber by fiber: the smooth
/// minimal-resolution configuration over each marked point plus the records
/// of which curves are contracted on the singular model. Du Val contraction
/// is crepant, so the smooth-model numbers of surviving curves are also
/// their K-numbers downstairs.
struct SurfaceModel {
  std::vector<std::string> marked_points;
  std::map<std::string, Configuration> fibers;
  std::map<std::string, std::vector<SingularPoint>> contractions;

  const Configuration& fiber(const std::string& label) const;
  /// Singular points on the fiber; empty when none were designated.
  const std::vector<SingularPoint>& points(const std::string& label) const;
  bool is_contracted(const std::string& label, const CurveId& id) const;
  /// Curves of the fiber that survive on the singular model, sorted.
  std::vector<CurveId> surviving(const std::string& label) const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Classification labels for fibers of a Mori fiber model.
struct FiberType {
  enum class Kind { Reduced, A1A1, D };
  Kind kind = Kind::Reduced;
  int rank = 0;  ///< set for Kind::D

  friend bool operator==(const FiberType&, const FiberType&) = default;
  friend auto operator<=>(const FiberType&, const FiberType&) = default;
};

std::string to_string(const FiberType& t);

inline FiberType fiber_reduced() { return {FiberType::Kind::Reduced, 0}; }
inline FiberType fiber_a1a1() { return {FiberType::Kind::A1A1, 0}; }
inline FiberType fiber_d(int rank) { return {FiberType::Kind::D, rank}; }

}  // namespace morifiber
