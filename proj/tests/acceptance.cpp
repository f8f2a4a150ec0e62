// Acceptance runner: one PASS/FAIL line per criterion. Takes the path of the
// hyperglue binary as its only argument (for the determinism check).

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <numbers>

#include "hyperbolic/developing.hpp"
#include "hyperbolic/holonomy.hpp"
#include "hyperbolic/report.hpp"
#include "hyperbolic/wirtinger.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace hyperbolic;
using testing::cd;

namespace {

constexpr double kTol = 1e-9;
constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int n, bool ok, const std::string& text) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << text << "\n";
  if (!ok) ++failures;
}

// Runs one criterion; an exception counts as a failure with its message.
template <typename F>
void criterion(int n, F&& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(n, ok, detail);
}

// Lobachevsky function by composite Simpson on the smooth integrand
// log(sin t / t), independent of the library series.
double lobachevsky_oracle(double theta) {
  const int n = 20000;
  const double h = theta / n;
  auto f = [](double t) { return t == 0.0 ? 0.0 : std::log(std::sin(t) / t); };
  double sum = f(0.0) + f(theta);
  for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(k * h);
  return -sum * h / 3.0 - (theta * std::log(2 * theta) - theta);
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
  const auto bor = testing::load("borromean");
  const auto ref = testing::borromean::solution();
  const auto ref_shapes = testing::borromean::solution_assignment();

  criterion(1, [&](std::string& d) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = solve(bor.sys);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double err = 0.0;
    for (int t = 0; t < 8; ++t) err = std::max(err, std::abs(r.shapes.z(t) - ref[t]));
    d = "Borromean solve: " + std::to_string(r.iterations) + " iterations, max shape error " +
        sci(err) + ", " + sci(secs) + " s";
    return r.iterations < 50 && err <= kTol && secs < 1.0;
  });

  criterion(2, [&](std::string& d) {
    const auto r = solve(bor.sys);
    int edges = 0, cusps = 0;
    bool ok = true;
    for (const auto& eq : bor.sys.equations) {
      const bool prod_ok = std::abs(holonomy_invariant(eq, r.shapes) - 1.0) <= kTol;
      const bool arg_ok = eq.kind == EquationKind::cusp ||
                          std::abs(argument_sum(eq, r.shapes) - 2 * pi) <= kTol;
      ok = ok && prod_ok && arg_ok;
      (eq.kind == EquationKind::edge ? edges : cusps) += 1;
    }
    // The reference cusp list includes z4 / v5 as the first curve.
    ok = ok && bor.sys.equations[8].exponents == testing::corner_product("z4 / v5", 8);
    d = std::to_string(edges) + " edge and " + std::to_string(cusps) + " cusp equations at the solution";
    return ok && edges == 8 && cusps == 6;
  });

  criterion(3, [&](std::string& d) {
    const auto dm = develop(bor.t, ref_shapes, 3);
    double coord = 0.0, shape = 0.0;
    bool inf_ok = true;
    for (const auto& row : testing::borromean::table()) {
      for (int v = 0; v < 4; ++v) {
        const Point& got = dm.tetrahedra[row.tet].coords[v];
        const Point& want = row.coords[v];
        if (want.is_infinite() || got.is_infinite()) {
          inf_ok = inf_ok && want.is_infinite() && got.is_infinite();
          continue;
        }
        coord = std::max(coord, std::abs(got.value() - want.value()));
      }
      shape = std::max(shape, std::abs(tetra_shape_from_vertices(row.coords) - ref[row.tet]));
    }
    d = "anchor 3 table: max coordinate deviation " + sci(coord) + ", max shape deviation " +
        sci(shape);
    return inf_ok && coord <= kTol && shape <= kTol;
  });

  criterion(4, [&](std::string& d) {
    const auto dm = develop(bor.t, ref_shapes, 3);
    double worst = 0.0;
    bool labels = true;
    for (const auto& p : testing::borromean::pairings()) {
      const auto fp = face_pairing(bor.t, dm, p.tet, p.face);
      labels = labels && fp.label() == p.label;
      worst = std::max(worst, psl_distance(fp.map, Moebius(p.matrix)));
    }
    const auto g16 = face_pairing(bor.t, dm, 1, 3).map;
    const auto g27 = face_pairing(bor.t, dm, 2, 3).map;
    const auto g05 = face_pairing(bor.t, dm, 0, 2).map;
    const double product = psl_distance(g16 * g27.inverse(), g05.inverse());
    d = "seven pairings max deviation " + sci(worst) + ", g16 g27^-1 vs g05^-1 " +
        sci(product);
    return labels && worst <= kTol && product <= kTol;
  });

  criterion(5, [&](std::string& d) {
    const auto dm = develop(bor.t, ref_shapes, 3);
    const auto words = parse_holonomy_words(testing::read_fixture("borromean.words"), bor.t);
    const auto rep = holonomy(bor.t, dm, words);
    double worst = 0.0;
    for (std::size_t k = 0; k < 2; ++k) worst = std::max(worst, rep.relations.at(k).residual);
    d = "commutator relations max distance from +-I " + sci(worst);
    return worst <= kTol;
  });

  criterion(6, [&](std::string& d) {
    const double bor_oracle = 8 * (2 * lobachevsky_oracle(pi / 4) + lobachevsky_oracle(pi / 2));
    const double fig_oracle = 2 * 3 * lobachevsky_oracle(pi / 3);
    const double bor_vol = total_volume(solve(bor.sys).shapes);
    const auto fig = testing::load("figure8");
    const double fig_vol = total_volume(solve(fig.sys).shapes);
    d = "Borromean " + format_real(bor_vol, 12) + " (oracle " + format_real(bor_oracle, 12) +
        "), figure-eight " + format_real(fig_vol, 12) + " (oracle " + format_real(fig_oracle, 12) + ")";
    return std::abs(bor_vol - bor_oracle) <= kTol && std::abs(bor_vol - 7.327724753418) <= kTol &&
           std::abs(fig_vol - fig_oracle) <= kTol && std::abs(fig_vol - 2.029883212819) <= kTol;
  });

  criterion(7, [&](std::string& d) {
    const auto fig = testing::load("figure8");
    const auto r = solve(fig.sys);
    double err = 0.0;
    for (int t = 0; t < 2; ++t) err = std::max(err, std::abs(r.shapes.z(t) - std::polar(1.0, pi / 3)));
    d = "figure-eight shapes max deviation from exp(i pi/3) " + sci(err);
    return err <= kTol;
  });

  criterion(8, [&](std::string& d) {
    auto w = [](const char* s) { return GroupWord::parse(s); };
    auto p = wirtinger_presentation(parse_link(testing::read_fixture("borromean.link")));
    // Reference relators; the first is compared as a cyclic word, the fourth
    // in its corrected form.
    const std::vector<GroupWord> six{w("d^-1 b a b^-1"), w("f d c^-1 d^-1"), w("e f b^-1 f^-1"),
                                     w("f a c^-1 a^-1"), w("e c b^-1 c^-1"), w("d e a^-1 e^-1")};
    bool ok = p.relators.size() == 6;
    for (std::size_t k = 0; ok && k < 6; ++k) ok = cyclically_equivalent(p.relators[k], six[k], false);
    const bool relators_ok = ok;
    p = eliminate_generator(p, "d", w("b a b^-1"));
    p = eliminate_generator(p, "f", w("a c a^-1"));
    p = eliminate_generator(p, "e", w("c b c^-1"));
    const bool reduced_shape = p.relators.size() == 3;
    const bool r6 = reduced_shape && words_equal(p.relators[2], (p.relators[1] * p.relators[0]).inverse());
    const bool commutators = reduced_shape && cyclically_equivalent(p.relators[0], w("[c^-1,[b^-1,a]]")) &&
                             cyclically_equivalent(p.relators[1], w("[b,[c,a^-1]]"));
    d = std::string("six relators ") + (relators_ok ? "match" : "differ") + ", R6 = (R3 R2)^-1 " +
        (r6 ? "holds" : "fails") + ", nested commutators " + (commutators ? "match" : "differ");
    return relators_ok && r6 && commutators;
  });

  criterion(9, [&](std::string& d) {
    const auto shapes = testing::shape_identity_errors(1000, 101);
    const double jac = testing::jacobian_fd_error(100, 102);
    const double moeb = testing::moebius_homomorphism_error(1000, 103);
    const bool confluent = testing::reduction_confluent(1000, 104);
    const bool abel = testing::abelianization_invariant(200, 105);
    d = "zvw " + sci(shapes.product) + ", angles " + sci(shapes.angle_sum) +
        ", jacobian " + sci(jac) + ", moebius " + sci(moeb) + ", confluence " +
        (confluent ? "ok" : "broken") + ", abelianization " + (abel ? "ok" : "broken");
    return shapes.product <= 1e-12 && shapes.angle_sum <= 1e-12 && jac <= 1e-5 && moeb <= 1e-9 && confluent &&
           abel;
  });

  criterion(10, [&](std::string& d) {
    if (argc < 2) {
      d = "no hyperglue path given";
      return false;
    }
    const std::string stem = testing::fixture_path("borromean");
    const std::string cmd = quote(argv[1]) + " report " + quote(stem + ".tri") + " --curves " +
                            quote(stem + ".curves") + " --words " + quote(stem + ".words") + " --link " +
                            quote(stem + ".link") + " --anchor 3 2>&1";
    int s1 = 0, s2 = 0;
    const std::string a = run_capture(cmd, s1);
    const std::string b = run_capture(cmd, s2);
    d = "two report runs, " + std::to_string(a.size()) + " bytes each, " + (a == b ? "identical" : "different");
    return s1 == 0 && s2 == 0 && !a.empty() && a == b;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
