#include "hyperbolic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyperbolic/developing.hpp"
#include "hyperbolic/equations.hpp"
#include "hyperbolic/error.hpp"
#include "hyperbolic/holonomy.hpp"
#include "hyperbolic/report.hpp"
#include "hyperbolic/solver.hpp"
#include "hyperbolic/triangulation.hpp"
#include "hyperbolic/wirtinger.hpp"

namespace hyperbolic {

namespace {

// Tags errors with the file they came from.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename F>
auto parse_file(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

const std::string& require(const std::optional<std::string>& path, const char* flag,
                           const std::string& subcommand) {
  if (!path) throw InputError(subcommand + " requires " + flag);
  return *path;
}

Presentation presentation_from(const Invocation& inv, const std::string& path,
                               std::optional<Presentation>* reduced) {
  const CrossingList cl = parse_file(path, [](const std::string& s) { return parse_link(s); });
  Presentation p = wirtinger_presentation(cl);
  if (!inv.eliminate.empty()) {
    Presentation q = p;
    for (const std::string& rule : inv.eliminate) {
      const auto eq = rule.find('=');
      if (eq == std::string::npos || eq == 0)
        throw InputError("--eliminate expects <generator>=<word>, got '" + rule + "'");
      q = eliminate_generator(q, rule.substr(0, eq), GroupWord::parse(rule.substr(eq + 1)));
    }
    *reduced = std::move(q);
  }
  return p;
}

int run_checked(const Invocation& inv, std::ostream& out) {
  const std::string& cmd = inv.subcommand;
  PipelineReport report;

  if (cmd == "wirtinger") {
    report.presentation = presentation_from(inv, inv.input, &report.reduced);
    out << render(report, inv.precision);
    return kExitOk;
  }

  static const std::vector<std::string> kTriangulationCommands{"validate", "solve",  "develop",
                                                               "holonomy", "volume", "report"};
  if (std::find(kTriangulationCommands.begin(), kTriangulationCommands.end(), cmd) ==
      kTriangulationCommands.end())
    throw InputError("unknown subcommand '" + cmd + "'");

  const Triangulation t =
      parse_file(inv.input, [](const std::string& s) { return parse_triangulation(s); });
  report.summary = summarize(t);

  std::vector<CuspCurve> curves;
  if (inv.curves)
    curves = parse_file(*inv.curves, [&](const std::string& s) { return parse_cusp_curves(s, t); });
  if (cmd == "validate") {
    if (inv.curves) build_system(t, curves);
    out << render(report, inv.precision);
    return kExitOk;
  }

  require(inv.curves, "--curves", cmd);
  const EquationSystem sys = build_system(t, curves);
  SolverConfig cfg;
  cfg.tol = inv.tol;
  cfg.max_iters = inv.max_iters;
  if (inv.seed) cfg.initial = ShapeAssignment::uniform(t.size(), *inv.seed);
  const SolveReport solved = solve(sys, cfg);
  const ShapeAssignment& shapes = solved.shapes;

  const bool all = cmd == "report";
  if (cmd == "solve" || all) {
    report.solve = solved;
    report.equations = check_equations(sys, shapes);
  }
  if (cmd == "volume" || all) report.volume = total_volume(shapes);

  if (cmd == "develop" || cmd == "holonomy" || all) {
    if (inv.anchor < 0 || inv.anchor >= t.size())
      throw InputError("--anchor " + std::to_string(inv.anchor) + " is out of range");
    const DevelopingMap dm = develop(t, shapes, inv.anchor);
    if (cmd == "develop" || all) {
      report.developing = dm;
      if (inv.compare_table) {
        const CoordinateTable table = parse_file(
            *inv.compare_table, [](const std::string& s) { return parse_coordinate_table(s); });
        report.table = compare_table(table, dm, shapes);
      }
    }
    if (cmd == "holonomy" || (all && inv.words)) {
      const std::string& path = require(inv.words, "--words", cmd);
      const HolonomyWords words =
          parse_file(path, [&](const std::string& s) { return parse_holonomy_words(s, t); });
      report.holonomy = holonomy(t, dm, words);
    }
  }
  if (all && inv.link) report.presentation = presentation_from(inv, *inv.link, &report.reduced);

  out << render(report, inv.precision);
  return kExitOk;
}

}  // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(inv, out);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace hyperbolic
