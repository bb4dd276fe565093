#include "morifiber/script.hpp"

#include <algorithm>
#include <sstream>

#include "morifiber/birational.hpp"
#include "morifiber/singularities.hpp"

namespace morifiber {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace

ConstructionScript parse_script(std::string_view text) {
  ConstructionScript script;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& op = tokens[0].text;
    auto arity = [&](std::size_t n, const char* usage) {
      if (tokens.size() != n + 1)
        throw ScriptError(lineno, tokens[0].column,
                          "'" + op + "' expects " + usage);
    };
    auto at_least = [&](std::size_t n, const char* usage) {
      if (tokens.size() < n + 1)
        throw ScriptError(lineno, tokens[0].column,
                          "'" + op + "' expects " + usage);
    };

    if (script.ops.empty() && op != "ruled")
      throw ScriptError(lineno, tokens[0].column,
                        "script must start with 'ruled'");

    if (op == "ruled") {
      if (!script.ops.empty())
        throw ScriptError(lineno, tokens[0].column,
                          "'ruled' must appear exactly once, first");
      arity(0, "no arguments");
      script.ops.emplace_back(OpRuled{});
    } else if (op == "mark") {
      at_least(1, "at least one point");
      OpMark mark;
      for (std::size_t i = 1; i < tokens.size(); ++i)
        mark.points.push_back(tokens[i].text);
      script.ops.emplace_back(std::move(mark));
    } else if (op == "make_nonreduced") {
      arity(1, "a point");
      script.ops.emplace_back(OpMakeNonreduced{tokens[1].text});
    } else if (op == "elem_transform") {
      arity(2, "a point and a curve");
      script.ops.emplace_back(OpElemTransform{tokens[1].text, tokens[2].text});
    } else if (op == "blowup_curve") {
      arity(2, "a point and a curve");
      script.ops.emplace_back(OpBlowupCurve{tokens[1].text, tokens[2].text});
    } else if (op == "blowup_edge") {
      arity(3, "a point and two curves");
      script.ops.emplace_back(
          OpBlowupEdge{tokens[1].text, tokens[2].text, tokens[3].text});
    } else if (op == "contract") {
      at_least(2, "a point and at least one curve");
      OpContract contract;
      contract.point = tokens[1].text;
      for (std::size_t i = 2; i < tokens.size(); ++i)
        contract.curves.push_back(tokens[i].text);
      script.ops.emplace_back(std::move(contract));
    } else {
      throw ScriptError(lineno, tokens[0].column,
                        "unknown operation '" + op + "'");
    }
    script.lines.push_back(lineno);
  }

  if (script.ops.empty())
    throw ScriptError(lineno ? lineno : 1, 1, "empty script: expected 'ruled'");
  return script;
}

std::string render_script(const ConstructionScript& script) {
  std::ostringstream out;
  for (const ScriptOp& op : script.ops) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, OpRuled>) {
            out << "ruled";
          } else if constexpr (std::is_same_v<T, OpMark>) {
            out << "mark";
            for (const std::string& p : o.points) out << ' ' << p;
          } else if constexpr (std::is_same_v<T, OpMakeNonreduced>) {
            out << "make_nonreduced " << o.point;
          } else if constexpr (std::is_same_v<T, OpElemTransform>) {
            out << "elem_transform " << o.point << ' ' << o.curve;
          } else if constexpr (std::is_same_v<T, OpBlowupCurve>) {
            out << "blowup_curve " << o.point << ' ' << o.curve;
          } else if constexpr (std::is_same_v<T, OpBlowupEdge>) {
            out << "blowup_edge " << o.point << ' ' << o.c << ' ' << o.d;
          } else if constexpr (std::is_same_v<T, OpContract>) {
            out << "contract " << o.point;
            for (const CurveId& c : o.curves) out << ' ' << c;
          }
        },
        op);
    out << '\n';
  }
  return out.str();
}

namespace {

Configuration generic_fiber(const std::string& label) {
  Configuration cfg(label);
  cfg.add_curve({"C0", 0, -2, 0, 1});
  return cfg;
}

struct Replayer {
  SurfaceModel model;

  void operator()(const OpRuled&) {}

  void operator()(const OpMark& op) {
    for (const std::string& p : op.points) {
      if (model.fibers.count(p))
        throw PreconditionError("point '" + p + "' is already marked");
      model.marked_points.push_back(p);
      model.fibers.emplace(p, generic_fiber(p));
    }
  }

  void operator()(const OpMakeNonreduced& op) {
    const Configuration& cfg = model.fiber(op.point);
    if (cfg.size() != 1 || !model.points(op.point).empty())
      throw PreconditionError("fiber over '" + op.point +
                              "' has already been transformed");
    const CurveId host = cfg.curves()[0].id;
    model = blow_up_on_curve(model, op.point, host);
    const CurveId first = model.fiber(op.point).curves().back().id;
    model = blow_up_on_edge(model, op.point, host, first);
    model = contract_ade(model, op.point, {host});
    model = contract_ade(model, op.point, {first});
  }

  void operator()(const OpElemTransform& op) {
    model = elementary_transform(model, op.point, op.curve);
  }

  void operator()(const OpBlowupCurve& op) {
    model = blow_up_on_curve(model, op.point, op.curve);
  }

  void operator()(const OpBlowupEdge& op) {
    model = blow_up_on_edge(model, op.point, op.c, op.d);
  }

  void operator()(const OpContract& op) {
    model = contract_ade(model, op.point, op.curves);
  }
};

}  // namespace

SurfaceModel run_script(const ConstructionScript& script) {
  Replayer replayer;
  for (std::size_t i = 0; i < script.ops.size(); ++i) {
    try {
      std::visit(replayer, script.ops[i]);
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& e) {
      int line = i < script.lines.size() ? script.lines[i]
                                         : static_cast<int>(i) + 1;
      throw ScriptError(line, 1, e.what());
    }
  }
  return replayer.model;
}

}  // namespace morifiber
