#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "morifiber/config.hpp"

namespace morifiber {

// One operation per script line. `ruled` initializes the construction and
// must appear exactly once, first; `mark` declares marked points on the base
// line; the rest replay through the birational and singularity modules.
struct OpRuled {
  friend bool operator==(const OpRuled&, const OpRuled&) = default;
};
struct OpMark {
  std::vector<std::string> points;
  friend bool operator==(const OpMark&, const OpMark&) = default;
};
struct OpMakeNonreduced {  // Example construction steps (i)-(iii) as a macro
  std::string point;
  friend bool operator==(const OpMakeNonreduced&,
                         const OpMakeNonreduced&) = default;
};
struct OpElemTransform {
  std::string point;
  CurveId curve;
  friend bool operator==(const OpElemTransform&,
                         const OpElemTransform&) = default;
};
struct OpBlowupCurve {
  std::string point;
  CurveId curve;
  friend bool operator==(const OpBlowupCurve&, const OpBlowupCurve&) = default;
};
struct OpBlowupEdge {
  std::string point;
  CurveId c, d;
  friend bool operator==(const OpBlowupEdge&, const OpBlowupEdge&) = default;
};
struct OpContract {
  std::string point;
  std::vector<CurveId> curves;
  friend bool operator==(const OpContract&, const OpContract&) = default;
};

using ScriptOp = std::variant<OpRuled, OpMark, OpMakeNonreduced,
                              OpElemTransform, OpBlowupCurve, OpBlowupEdge,
                              OpContract>;

/// A replayable sequence of birational operations. `lines` carries the
/// source line of each op for replay diagnostics; it does not take part in
/// equality, so parse(render(s)) == s holds.
struct ConstructionScript {
  std::vector<ScriptOp> ops;
  std::vector<int> lines;

  friend bool operator==(const ConstructionScript& a,
                         const ConstructionScript& b) {
    return a.ops == b.ops;
  }
};

/// Line-oriented grammar, one operation per line, `#` starts a comment.
/// Throws ScriptError with line and column on malformed input. Identifier
/// resolution is deferred to replay time.
ConstructionScript parse_script(std::string_view text);

/// Canonical textual form, one op per line.
std::string render_script(const ConstructionScript& script);

/// Replays the script into a surface model. Module errors are rethrown as
/// ScriptError carrying the offending line.
SurfaceModel run_script(const ConstructionScript& script);

}  // namespace morifiber
