#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

namespace hyperbolic {

/// A point of the Riemann sphere: a finite complex number or the single
/// point at infinity. Infinity is a distinct state, never a large number.
template <typename Real>
class ExtendedComplex {
 public:
  using Scalar = Real;
  using Complex = std::complex<Real>;

  constexpr ExtendedComplex() = default;
  constexpr ExtendedComplex(Complex z) : value_(z) {}  // NOLINT(implicit)
  constexpr ExtendedComplex(Real x) : value_(x, Real(0)) {}  // NOLINT(implicit)

  static constexpr ExtendedComplex infinity() {
    ExtendedComplex p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // Meaningless (zero) at infinity; check is_infinite() first.
  constexpr Complex value() const { return value_; }

  friend constexpr bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedComplex& p) {
    if (p.infinite_) return os << "inf";
    return os << p.value_;
  }

 private:
  Complex value_{};
  bool infinite_ = false;
};

/// Infinity matches only infinity. Finite points match when their distance is
/// within tol scaled by max(1, |a|, |b|).
template <typename Real>
bool approx_equal(const ExtendedComplex<Real>& a, const ExtendedComplex<Real>& b, Real tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  const Real scale = std::max({Real(1), std::abs(a.value()), std::abs(b.value())});
  return std::abs(a.value() - b.value()) <= tol * scale;
}

using Point = ExtendedComplex<double>;

}  // namespace hyperbolic
