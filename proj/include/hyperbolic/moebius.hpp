#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Core>
#include <Eigen/LU>

#include "hyperbolic/error.hpp"
#include "hyperbolic/extended_complex.hpp"

namespace hyperbolic {

/// Element of PSL(2,C): z -> (az+b)/(cz+d), stored with determinant 1.
/// The sign of the representative is arbitrary; compare with psl_distance.
template <typename Real>
class MoebiusMap {
 public:
  using Complex = std::complex<Real>;
  using Matrix = Eigen::Matrix<Complex, 2, 2>;
  using Point = ExtendedComplex<Real>;

  MoebiusMap() : m_(Matrix::Identity()) {}

  /// Rescales m to determinant 1. Throws GeometryError if m is singular.
  explicit MoebiusMap(const Matrix& m) : m_(m) {
    const Complex det = m_.determinant();
    if (det == Complex(0) || !std::isfinite(std::abs(det)))
      throw GeometryError("singular Moebius matrix");
    m_ /= std::sqrt(det);
  }

  MoebiusMap(Complex a, Complex b, Complex c, Complex d) : MoebiusMap(make(a, b, c, d)) {}

  static MoebiusMap identity() { return MoebiusMap(); }

  const Matrix& matrix() const { return m_; }
  Complex a() const { return m_(0, 0); }
  Complex b() const { return m_(0, 1); }
  Complex c() const { return m_(1, 0); }
  Complex d() const { return m_(1, 1); }

  MoebiusMap inverse() const { return MoebiusMap(make(d(), -b(), -c(), a())); }

  // Renormalized on every product so rounding drift stays out of long words.
  friend MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs) {
    return MoebiusMap(lhs.m_ * rhs.m_);
  }

  /// Total on the sphere. An image whose denominator is below
  /// infinity_tolerance() times its numerator is infinity: composed maps
  /// leave cancellation residue well above machine epsilon, and with
  /// determinant 1 numerator and denominator never vanish together.
  static constexpr Real infinity_tolerance() {
    return Real(0.01) * newton_sqrt(std::numeric_limits<Real>::epsilon());
  }

  Point operator()(const Point& p) const {
    const Real tol = infinity_tolerance();
    if (p.is_infinite()) {
      if (std::abs(c()) <= tol * std::abs(a())) return Point::infinity();
      return a() / c();
    }
    const Complex z = p.value();
    const Complex num = a() * z + b();
    const Complex den = c() * z + d();
    if (std::abs(den) <= tol * std::abs(num)) return Point::infinity();
    return num / den;
  }

 private:
  static constexpr Real newton_sqrt(Real x) {
    Real r = x > Real(1) ? x : Real(1);
    for (int k = 0; k < 64; ++k) r = Real(0.5) * (r + x / r);
    return r;
  }

  static Matrix make(Complex a, Complex b, Complex c, Complex d) {
    Matrix m;
    m << a, b, c, d;
    return m;
  }

  Matrix m_;
};

using Moebius = MoebiusMap<double>;

template <typename Real>
typename MoebiusMap<Real>::Point mobius_apply(const MoebiusMap<Real>& m,
                                              const typename MoebiusMap<Real>::Point& p) {
  return m(p);
}

/// Max-abs entry distance in PSL(2,C): the smaller of |A-B| and |A+B|.
template <typename Real>
Real psl_distance(const MoebiusMap<Real>& x, const MoebiusMap<Real>& y) {
  const Real minus = (x.matrix() - y.matrix()).cwiseAbs().maxCoeff();
  const Real plus = (x.matrix() + y.matrix()).cwiseAbs().maxCoeff();
  return std::min(minus, plus);
}

template <typename Real>
Real distance_from_identity(const MoebiusMap<Real>& m) {
  return psl_distance(m, MoebiusMap<Real>::identity());
}

template <typename Real>
bool psl_equal(const MoebiusMap<Real>& x, const MoebiusMap<Real>& y, Real tol) {
  return psl_distance(x, y) <= tol;
}

/// The unique map sending p -> infinity, q -> 0, r -> 1.
template <typename Real>
MoebiusMap<Real> triple_to_normal(const ExtendedComplex<Real>& p, const ExtendedComplex<Real>& q,
                                  const ExtendedComplex<Real>& r) {
  using Complex = std::complex<Real>;
  if (p == q || q == r || p == r) throw GeometryError("repeated points in Moebius triple");
  const Complex one(1), zero(0);
  if (p.is_infinite()) return {one, -q.value(), zero, r.value() - q.value()};
  if (q.is_infinite()) return {zero, r.value() - p.value(), one, -p.value()};
  if (r.is_infinite()) return {one, -q.value(), one, -p.value()};
  const Complex rp = r.value() - p.value();
  const Complex rq = r.value() - q.value();
  return {rp, -q.value() * rp, rq, -p.value() * rq};
}

/// g2^-1 g1, where g1 and g2 normalize src and dst to (infinity, 0, 1).
/// Sends src[k] to dst[k] for each k.
template <typename Real>
MoebiusMap<Real> face_pairing(const std::array<ExtendedComplex<Real>, 3>& src,
                              const std::array<ExtendedComplex<Real>, 3>& dst) {
  const auto g1 = triple_to_normal(src[0], src[1], src[2]);
  const auto g2 = triple_to_normal(dst[0], dst[1], dst[2]);
  return g2.inverse() * g1;
}

}  // namespace hyperbolic
