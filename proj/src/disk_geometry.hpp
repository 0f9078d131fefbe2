#pragma once

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace blochcomp::geom {

using Complex = std::complex<double>;

// Points with |z| >= 1 - kBoundaryMargin are rejected: every formula in this
// library divides by powers of 1 - |z|^2.
inline constexpr double kBoundaryMargin = 1e-15;

/// A point of the open unit disk. Construction enforces |z| < 1.
class DiskPoint {
public:
  DiskPoint(double re, double im) : DiskPoint(Complex{re, im}) {}
  explicit DiskPoint(Complex z) : z_(z) {
    if (!(std::abs(z) < 1.0 - kBoundaryMargin))
      throw std::domain_error("DiskPoint: modulus must be < 1");
  }

  static std::optional<DiskPoint> try_make(Complex z) {
    if (std::abs(z) < 1.0 - kBoundaryMargin) return DiskPoint(z);
    return std::nullopt;
  }

  Complex value() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  double abs() const { return std::abs(z_); }

private:
  Complex z_;
};

/// Disk automorphism psi_a(z) = (a - z) / (1 - conj(a) z).
Complex moebius(DiskPoint a, DiskPoint z);

/// psi_a'(z) = (|a|^2 - 1) / (1 - conj(a) z)^2.
Complex moebius_deriv(DiskPoint a, DiskPoint z);

/// rho(z, w) = |psi_z(w)|, in [0, 1).
double pseudo_hyperbolic(DiskPoint z, DiskPoint w);

/// arctanh rho(z, w), evaluated in a log1p form that stays accurate as rho -> 1.
double hyperbolic(DiskPoint z, DiskPoint w);

/// True iff all pairwise pseudohyperbolic distances exceed R. R must lie in (0,1).
bool is_r_separated(std::span<const DiskPoint> points, double R);

/// Deterministic quasi-uniform lattice covering {|z| <= r_max}: every point of
/// that set lies within pseudohyperbolic distance `step` of the returned set.
/// Concentric circles spaced step/2 apart in rho, with angular counts growing
/// like the hyperbolic circumference.
std::vector<DiskPoint> hyperbolic_lattice(double r_max, double step);

}  // namespace blochcomp::geom
