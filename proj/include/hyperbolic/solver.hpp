#pragma once

#include <complex>
#include <optional>

#include "hyperbolic/equations.hpp"
#include "hyperbolic/error.hpp"
#include "hyperbolic/shapes.hpp"

namespace hyperbolic {

/// Newton iteration stopped without reaching the tolerance.
class SolverError : public Error {
 public:
  using Error::Error;
};

struct SolverConfig {
  int max_iters = 100;
  double tol = 1e-12;
  double damping = 0.5;
  int max_halvings = 30;
  /// Per-tetrahedron seed; all i when empty.
  std::optional<ShapeAssignment> initial;
};

struct SolveReport {
  ShapeAssignment shapes;
  int iterations = 0;
  double final_residual = 0.0;
  bool geometric = false;
};

/// Damped Newton least squares on the log-form residuals. Each step is the
/// minimum-norm solution of J d = -r; steps are halved until they stay in the
/// upper half-plane and decrease the residual norm.
///
/// Throws SolverError on non-convergence or when every backtrack fails,
/// ValidationError on a bad config.
SolveReport solve(const EquationSystem& sys, const SolverConfig& cfg = {});

}  // namespace hyperbolic
