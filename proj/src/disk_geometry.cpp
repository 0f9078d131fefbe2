#include "disk_geometry.hpp"

#include <cmath>
#include <numbers>

namespace blochcomp::geom {

Complex moebius(DiskPoint a, DiskPoint z) {
  return (a.value() - z.value()) / (1.0 - std::conj(a.value()) * z.value());
}

Complex moebius_deriv(DiskPoint a, DiskPoint z) {
  const Complex d = 1.0 - std::conj(a.value()) * z.value();
  return (std::norm(a.value()) - 1.0) / (d * d);
}

double pseudo_hyperbolic(DiskPoint z, DiskPoint w) {
  return std::abs(moebius(z, w));
}

double hyperbolic(DiskPoint z, DiskPoint w) {
  const double rho = pseudo_hyperbolic(z, w);
  // arctanh(rho) = log1p(2 rho / (1 - rho)) / 2
  return 0.5 * std::log1p(2.0 * rho / (1.0 - rho));
}

bool is_r_separated(std::span<const DiskPoint> points, double R) {
  if (!(R > 0.0 && R < 1.0))
    throw std::invalid_argument("is_r_separated: R must lie in (0,1)");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (pseudo_hyperbolic(points[i], points[j]) <= R) return false;
  return true;
}

std::vector<DiskPoint> hyperbolic_lattice(double r_max, double step) {
  if (!(r_max > 0.0 && r_max < 1.0))
    throw std::invalid_argument("hyperbolic_lattice: r_max must lie in (0,1)");
  if (!(step > 0.0))
    throw std::invalid_argument("hyperbolic_lattice: step must be positive");

  const double half = std::min(step, 1.0) / 2.0;
  std::vector<DiskPoint> pts;
  pts.emplace_back(0.0, 0.0);

  double r = 0.0;
  while (r < r_max) {
    // Next circle at rho-distance `half` along a ray.
    r = (r + half) / (1.0 + half * r);
    if (r >= 1.0 - kBoundaryMargin) break;
    const double circle = std::min(r, r_max);
    // Adjacent angular samples at rho-distance <= half: rho ~ r dtheta / (1-r^2).
    const long n = std::max<long>(
        6, static_cast<long>(std::ceil(2.0 * std::numbers::pi * circle /
                                       ((1.0 - circle * circle) * half))));
    for (long j = 0; j < n; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
      pts.emplace_back(circle * std::cos(theta), circle * std::sin(theta));
    }
    if (circle >= r_max) break;
  }
  return pts;
}

}  // namespace blochcomp::geom
