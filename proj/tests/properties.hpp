#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// runner. Each returns the worst observed error, or a pass flag.

#include <cstdint>

namespace testing {

struct ShapeIdentityErrors {
  double product;    // max |z v w + 1|
  double angle_sum;  // max |arg z + arg v + arg w - pi|
};

ShapeIdentityErrors shape_identity_errors(int samples, std::uint64_t seed);

/// Max |analytic - central difference| over random systems and shapes.
double jacobian_fd_error(int systems, std::uint64_t seed, double step = 1e-6);

/// Max distance between apply(m1 m2, z) and apply(m1, apply(m2, z)).
double moebius_homomorphism_error(int samples, std::uint64_t seed);

/// Max |shape(M(p)) - shape(p)| for random Moebius maps M and point sets p.
double cross_ratio_invariance_error(int samples, std::uint64_t seed);

/// Reduction by random cancellation orders agrees with free_reduce.
bool reduction_confluent(int words, std::uint64_t seed);

/// Abelian invariants survive generator elimination on random presentations
/// extended by a defined generator.
bool abelianization_invariant(int presentations, std::uint64_t seed);

}  // namespace testing
