#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "hyperbolic/error.hpp"
#include "hyperbolic/extended_complex.hpp"

namespace hyperbolic {

/// Which of the three edge invariants of an ideal tetrahedron sits on an edge.
/// z on edges 01 and 23, v on 02 and 13, w on 03 and 12.
enum class Corner : std::uint8_t { z = 0, v = 1, w = 2 };

inline char corner_tag(Corner c) { return "zvw"[static_cast<int>(c)]; }

/// Corner invariant carried by the tetrahedron edge between vertices a and b.
constexpr Corner corner_of_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  if ((a == 0 && b == 1) || (a == 2 && b == 3)) return Corner::z;
  if ((a == 0 && b == 2) || (a == 1 && b == 3)) return Corner::v;
  return Corner::w;
}

template <typename Real>
struct ShapeTriple {
  std::complex<Real> z, v, w;

  const std::complex<Real>& operator[](Corner c) const {
    switch (c) {
      case Corner::z: return z;
      case Corner::v: return v;
      default: return w;
    }
  }

  bool geometric() const { return z.imag() > Real(0); }
};

/// Builds (z, 1/(1-z), 1-1/z). Throws GeometryError for z in {0, 1} or a
/// non-finite z.
template <typename Real>
ShapeTriple<Real> shape_triple(std::complex<Real> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw GeometryError("degenerate shape: non-finite parameter");
  if (z == std::complex<Real>(0) || z == std::complex<Real>(1))
    throw GeometryError("degenerate shape: parameter is 0 or 1");
  const std::complex<Real> one(1);
  return {z, one / (one - z), one - one / z};
}

namespace detail {

// zeta(2n) for n >= 1: direct sum to K plus an Euler-Maclaurin tail.
template <typename Real>
Real even_zeta(int n) {
  if (n == 1) return std::numbers::pi_v<Real> * std::numbers::pi_v<Real> / Real(6);
  constexpr int K = 64;
  const Real s = Real(2 * n);
  Real sum = 0;
  for (int k = K; k >= 1; --k) sum += std::pow(Real(k), -s);
  const Real Kr = K;
  sum += std::pow(Kr, Real(1) - s) / (s - Real(1)) - std::pow(Kr, -s) / Real(2) +
         s * std::pow(Kr, -s - Real(1)) / Real(12) -
         s * (s + 1) * (s + 2) * std::pow(Kr, -s - Real(3)) / Real(720);
  return sum;
}

template <typename Real>
const std::array<Real, 48>& even_zeta_table() {
  static const std::array<Real, 48> table = [] {
    std::array<Real, 48> t{};
    for (int n = 1; n <= 48; ++n) t[n - 1] = even_zeta<Real>(n);
    return t;
  }();
  return table;
}

}  // namespace detail

/// Lobachevsky function, -integral_0^theta log|2 sin t| dt.
///
/// Reduced to (-pi/2, pi/2] by periodicity and oddness, then summed as
///   t (1 - log 2t) + sum_n zeta(2n) t^(2n+1) / (n (2n+1) pi^(2n)),
/// whose ratio is at most 1/4 on the reduced range.
template <typename Real>
Real lobachevsky(Real theta) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  theta -= pi * std::round(theta / pi);
  if (theta == Real(0)) return Real(0);
  const Real sign = theta < 0 ? Real(-1) : Real(1);
  const Real t = std::abs(theta);
  const Real ratio2 = (t / pi) * (t / pi);
  const auto& zeta = detail::even_zeta_table<Real>();
  Real result = t * (Real(1) - std::log(Real(2) * t));
  Real power = t;
  for (int n = 1; n <= static_cast<int>(zeta.size()); ++n) {
    power *= ratio2;
    const Real term = zeta[n - 1] * power / Real(n * (2 * n + 1));
    result += term;
    if (term < std::numeric_limits<Real>::epsilon() * Real(1e-3) * t) break;
  }
  return sign * result;
}

/// Hyperbolic volume of the ideal tetrahedron with shape s.
template <typename Real>
Real tet_volume(const ShapeTriple<Real>& s) {
  if (!s.geometric()) throw GeometryError("volume of a non-geometric shape (Im z <= 0)");
  return lobachevsky(std::arg(s.z)) + lobachevsky(std::arg(s.v)) + lobachevsky(std::arg(s.w));
}

/// Edge-(0,1) invariant of the ideal tetrahedron with the given vertices:
/// ((p2-p0)(p3-p1)) / ((p3-p0)(p2-p1)). Factors involving a vertex at infinity
/// cancel between numerator and denominator and are dropped.
template <typename Real>
std::complex<Real> tetra_shape_from_vertices(const std::array<ExtendedComplex<Real>, 4>& p) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] == p[j]) throw GeometryError("repeated tetrahedron vertices");
  auto diff = [&](int a, int b) -> std::complex<Real> {
    if (p[a].is_infinite() || p[b].is_infinite()) return Real(1);
    return p[a].value() - p[b].value();
  };
  const std::complex<Real> num = diff(2, 0) * diff(3, 1);
  const std::complex<Real> den = diff(3, 0) * diff(2, 1);
  if (num == std::complex<Real>(0) || den == std::complex<Real>(0))
    throw GeometryError("repeated tetrahedron vertices");
  return num / den;
}

/// One shape parameter per tetrahedron.
class ShapeAssignment {
 public:
  ShapeAssignment() = default;
  explicit ShapeAssignment(Eigen::VectorXcd z) : z_(std::move(z)) {}

  static ShapeAssignment uniform(Eigen::Index n, std::complex<double> z) {
    return ShapeAssignment(Eigen::VectorXcd::Constant(n, z));
  }

  Eigen::Index size() const { return z_.size(); }
  const Eigen::VectorXcd& parameters() const { return z_; }
  std::complex<double> z(Eigen::Index tet) const { return z_(tet); }
  ShapeTriple<double> operator[](Eigen::Index tet) const { return shape_triple(z_(tet)); }

  /// All tetrahedra positively oriented.
  bool geometric() const { return (z_.imag().array() > 0.0).all(); }

 private:
  Eigen::VectorXcd z_;
};

}  // namespace hyperbolic
