#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hyperbolic/shapes.hpp"
#include "hyperbolic/triangulation.hpp"

namespace hyperbolic {

enum class EquationKind { edge, cusp };

/// prod_t z_t^a v_t^b w_t^c = 1, with the argument sum pinned to target_arg.
struct GluingEquation {
  EquationKind kind;
  Eigen::MatrixX3i exponents;  // row t = (a, b, c) for tetrahedron t
  double target_arg;           // 2 pi for edges, 0 for cusps
  std::string source;          // "edge 3" or "cusp 0 meridian"
};

struct EquationSystem {
  int n_tets = 0;
  std::vector<GluingEquation> equations;

  Eigen::Index rows() const { return static_cast<Eigen::Index>(equations.size()); }
};

/// One equation per edge class, then one per curve in input order. Each cusp
/// needs exactly two curves.
EquationSystem build_system(const Triangulation& t, std::span<const CuspCurve> curves);

GluingEquation edge_equation(const EdgeClass& cls, int n_tets, std::string source = {});
GluingEquation cusp_equation(const CuspCurve& curve, int n_tets);

/// Literal product of corner values raised to their exponents.
std::complex<double> holonomy_invariant(const GluingEquation& eq, const ShapeAssignment& s);

/// Sum of exponent-weighted principal arguments of the corners.
double argument_sum(const GluingEquation& eq, const ShapeAssignment& s);

/// Per equation: sum(a log z + b log v + c log w) - i target_arg.
/// Throws GeometryError if any shape is not in the open upper half-plane.
Eigen::VectorXcd residuals(const EquationSystem& sys, const ShapeAssignment& s);

/// Complex derivative of the residuals with respect to each z.
Eigen::MatrixXcd jacobian(const EquationSystem& sys, const ShapeAssignment& s);

}  // namespace hyperbolic
