#include "hyperbolic/solver.hpp"

#include <Eigen/QR>

namespace hyperbolic {

SolveReport solve(const EquationSystem& sys, const SolverConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw ValidationError("solver tolerance must be positive");
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0))
    throw ValidationError("solver damping must lie in (0, 1)");
  if (cfg.max_iters < 0 || cfg.max_halvings < 0)
    throw ValidationError("solver iteration limits must be non-negative");

  Eigen::VectorXcd z = cfg.initial ? cfg.initial->parameters()
                                   : Eigen::VectorXcd::Constant(sys.n_tets, {0.0, 1.0});
  if (z.size() != sys.n_tets) throw ValidationError("seed size does not match tetrahedron count");
  if (!ShapeAssignment(z).geometric()) throw ValidationError("seed must lie in the upper half-plane");

  SolveReport report;
  double norm = residuals(sys, ShapeAssignment(z)).norm();
  int iter = 0;
  while (norm > cfg.tol) {
    if (iter == cfg.max_iters)
      throw SolverError("no convergence after " + std::to_string(iter) +
                        " iterations (residual " + std::to_string(norm) + ")");
    const ShapeAssignment current(z);
    const Eigen::VectorXcd r = residuals(sys, current);
    const Eigen::MatrixXcd J = jacobian(sys, current);
    const Eigen::VectorXcd step = J.completeOrthogonalDecomposition().solve(-r);

    double scale = 1.0;
    bool accepted = false;
    for (int h = 0; h <= cfg.max_halvings; ++h, scale *= cfg.damping) {
      const Eigen::VectorXcd trial = z + scale * step;
      if (!(trial.imag().array() > 0.0).all()) continue;
      const double trial_norm = residuals(sys, ShapeAssignment(trial)).norm();
      if (trial_norm < norm) {
        z = trial;
        norm = trial_norm;
        accepted = true;
        break;
      }
    }
    ++iter;
    if (!accepted)
      throw SolverError("step collapse at iteration " + std::to_string(iter) + " (residual " +
                        std::to_string(norm) + ")");
  }

  report.shapes = ShapeAssignment(z);
  report.iterations = iter;
  report.final_residual = norm;
  report.geometric = report.shapes.geometric();
  return report;
}

}  // namespace hyperbolic
