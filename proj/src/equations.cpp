#include "hyperbolic/equations.hpp"

#include <numbers>

#include "hyperbolic/error.hpp"

namespace hyperbolic {

namespace {

void require_geometric(const EquationSystem& sys, const ShapeAssignment& s) {
  if (s.size() != sys.n_tets)
    throw GeometryError("shape count " + std::to_string(s.size()) + " does not match " +
                        std::to_string(sys.n_tets) + " tetrahedra");
  for (Eigen::Index t = 0; t < s.size(); ++t)
    if (!(s.z(t).imag() > 0.0))
      throw GeometryError("shape of tet " + std::to_string(t) + " is not in the upper half-plane");
}

}  // namespace

GluingEquation edge_equation(const EdgeClass& cls, int n_tets, std::string source) {
  GluingEquation eq{EquationKind::edge, Eigen::MatrixX3i::Zero(n_tets, 3), 2 * std::numbers::pi,
                    std::move(source)};
  for (const EdgeMember& m : cls.members) eq.exponents(m.tet, static_cast<int>(m.corner)) += 1;
  return eq;
}

GluingEquation cusp_equation(const CuspCurve& curve, int n_tets) {
  GluingEquation eq{EquationKind::cusp, Eigen::MatrixX3i::Zero(n_tets, 3), 0.0,
                    "cusp " + std::to_string(curve.cusp) + " " + curve.name};
  for (const CurveStep& step : curve.steps)
    eq.exponents(step.tet, static_cast<int>(step.corner)) += step.sign;
  return eq;
}

EquationSystem build_system(const Triangulation& t, std::span<const CuspCurve> curves) {
  EquationSystem sys;
  sys.n_tets = t.size();
  const auto classes = edge_classes(t);
  for (std::size_t k = 0; k < classes.size(); ++k)
    sys.equations.push_back(edge_equation(classes[k], t.size(), "edge " + std::to_string(k)));

  const auto n_cusps = cusp_classes(t).size();
  std::vector<int> per_cusp(n_cusps, 0);
  for (const CuspCurve& c : curves) {
    if (c.cusp < 0 || c.cusp >= static_cast<int>(n_cusps))
      throw ValidationError("curve '" + c.name + "' names missing cusp " + std::to_string(c.cusp));
    ++per_cusp[c.cusp];
  }
  for (std::size_t c = 0; c < n_cusps; ++c)
    if (per_cusp[c] != 2)
      throw ValidationError("cusp " + std::to_string(c) + " needs 2 curves, found " +
                            std::to_string(per_cusp[c]));
  for (const CuspCurve& c : curves) sys.equations.push_back(cusp_equation(c, t.size()));
  return sys;
}

std::complex<double> holonomy_invariant(const GluingEquation& eq, const ShapeAssignment& s) {
  std::complex<double> product(1.0);
  for (Eigen::Index t = 0; t < eq.exponents.rows(); ++t) {
    if (eq.exponents.row(t).isZero()) continue;
    const auto triple = s[t];
    for (int k = 0; k < 3; ++k)
      product *= std::pow(triple[static_cast<Corner>(k)], eq.exponents(t, k));
  }
  return product;
}

double argument_sum(const GluingEquation& eq, const ShapeAssignment& s) {
  double sum = 0.0;
  for (Eigen::Index t = 0; t < eq.exponents.rows(); ++t) {
    if (eq.exponents.row(t).isZero()) continue;
    const auto triple = s[t];
    for (int k = 0; k < 3; ++k) sum += eq.exponents(t, k) * std::arg(triple[static_cast<Corner>(k)]);
  }
  return sum;
}

Eigen::VectorXcd residuals(const EquationSystem& sys, const ShapeAssignment& s) {
  require_geometric(sys, s);
  Eigen::MatrixX3cd logs(sys.n_tets, 3);
  for (Eigen::Index t = 0; t < sys.n_tets; ++t) {
    const auto triple = s[t];
    logs.row(t) << std::log(triple.z), std::log(triple.v), std::log(triple.w);
  }
  Eigen::VectorXcd r(sys.rows());
  for (Eigen::Index i = 0; i < sys.rows(); ++i) {
    const GluingEquation& eq = sys.equations[i];
    r(i) = (eq.exponents.cast<std::complex<double>>().cwiseProduct(logs)).sum() -
           std::complex<double>(0.0, eq.target_arg);
  }
  return r;
}

Eigen::MatrixXcd jacobian(const EquationSystem& sys, const ShapeAssignment& s) {
  require_geometric(sys, s);
  // d log z = 1/z, d log v = 1/(1-z), d log w = 1/(z(z-1)).
  Eigen::MatrixX3cd dlogs(sys.n_tets, 3);
  for (Eigen::Index t = 0; t < sys.n_tets; ++t) {
    const std::complex<double> z = s.z(t);
    dlogs.row(t) << 1.0 / z, 1.0 / (1.0 - z), 1.0 / (z * (z - 1.0));
  }
  Eigen::MatrixXcd J(sys.rows(), sys.n_tets);
  for (Eigen::Index i = 0; i < sys.rows(); ++i)
    J.row(i) = (sys.equations[i].exponents.cast<std::complex<double>>().cwiseProduct(dlogs))
                   .rowwise()
                   .sum()
                   .transpose();
  return J;
}

}  // namespace hyperbolic
