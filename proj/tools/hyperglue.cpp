// hyperglue: hyperbolic structures on ideal triangulations.

#include <iostream>

#include <CLI11.hpp>

#include "hyperbolic/cli.hpp"
#include "hyperbolic/error.hpp"
#include "hyperbolic/report.hpp"

int main(int argc, char** argv) {
  using hyperbolic::Invocation;

  CLI::App app{"Complete hyperbolic structures on ideal triangulations"};
  app.require_subcommand(1);

  Invocation inv;
  std::string seed;

  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--tol", inv.tol, "residual norm tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", inv.max_iters, "Newton iteration limit")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "uniform initial shape, e.g. 0.5+0.8i");
  };

  struct Command {
    const char* name;
    const char* help;
    bool curves, solver, anchor, words, table, link;
  };
  const Command commands[] = {
      {"validate", "check a triangulation and print edge and cusp counts", true, false, false, false, false, false},
      {"solve", "solve the gluing equations", true, true, false, false, false, false},
      {"develop", "solve and develop into upper half-space", true, true, true, false, true, false},
      {"holonomy", "solve, develop and evaluate face-pairing words", true, true, true, true, false, false},
      {"volume", "solve and report the total volume", true, true, false, false, false, false},
      {"report", "run the full pipeline", true, true, true, true, true, true},
  };

  std::string curves, words, link, table;
  for (const Command& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("triangulation", inv.input, "triangulation file")->required();
    if (s.curves) sub->add_option("--curves", curves, "cusp curve file");
    if (s.solver) add_solver_flags(sub);
    if (s.anchor) sub->add_option("--anchor", inv.anchor, "anchor tetrahedron");
    if (s.words) sub->add_option("--words", words, "face-pairing word file");
    if (s.table) sub->add_option("--compare-table", table, "reference coordinate table");
    if (s.link) {
      sub->add_option("--link", link, "link crossing file");
      sub->add_option("--eliminate", inv.eliminate, "eliminate a generator, g=<word>")->allow_extra_args(false);
    }
    sub->add_option("--precision", inv.precision, "decimal digits")->check(CLI::Range(0, 17));
    sub->callback([&inv, sub] { inv.subcommand = sub->get_name(); });
  }
  CLI::App* wirt = app.add_subcommand("wirtinger", "Wirtinger presentation of a link");
  wirt->add_option("link", inv.input, "link crossing file")->required();
  wirt->add_option("--eliminate", inv.eliminate, "eliminate a generator, g=<word>")->allow_extra_args(false);
  wirt->add_option("--precision", inv.precision, "decimal digits")->check(CLI::Range(0, 17));
  wirt->callback([&inv] { inv.subcommand = "wirtinger"; });

  CLI11_PARSE(app, argc, argv);

  if (!curves.empty()) inv.curves = curves;
  if (!words.empty()) inv.words = words;
  if (!link.empty()) inv.link = link;
  if (!table.empty()) inv.compare_table = table;
  if (!seed.empty()) {
    try {
      inv.seed = hyperbolic::parse_complex(seed);
    } catch (const hyperbolic::ParseError& e) {
      std::cerr << "error: --seed: " << e.message() << '\n';
      return hyperbolic::kExitInvalid;
    }
  }
  return hyperbolic::run(inv, std::cout, std::cerr);
}
