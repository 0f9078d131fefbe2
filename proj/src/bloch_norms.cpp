#include "bloch_norms.hpp"

#include <cmath>

namespace blochcomp::norms {

double local_intensity(const HarmonicMap& f, Alpha alpha, DiskPoint z) {
  const auto w = f.wirtinger(z);
  const double weight = std::pow(1.0 - std::norm(z.value()), alpha.value);
  return weight * (std::abs(w.fz) + std::abs(w.fzbar));
}

sup::SupEstimate seminorm(const HarmonicMap& f, Alpha alpha,
                          const sup::SupBudget& budget) {
  const double a = alpha.value;
  return sup::adaptive_sup(
      [&f, a](Complex z) {
        const double weight = std::pow(1.0 - std::norm(z), a);
        return weight * (std::abs(f.h.deriv(z)) + std::abs(f.g.deriv(z)));
      },
      budget);
}

NormResult norm(const HarmonicMap& f, Alpha alpha, const sup::SupBudget& budget) {
  NormResult out;
  out.f0 = f.eval(DiskPoint{0.0, 0.0});
  out.sup = seminorm(f, alpha, budget);
  out.value = std::abs(out.f0) + out.sup.value;
  return out;
}

sup::DecayProfile little_bloch_profile(const HarmonicMap& f, Alpha alpha,
                                       const std::vector<double>& radii) {
  const double a = alpha.value;
  return sup::profile_circle_max(
      [&f, a](Complex z) {
        const double weight = std::pow(1.0 - std::norm(z), a);
        return weight * (std::abs(f.h.deriv(z)) + std::abs(f.g.deriv(z)));
      },
      radii);
}

double growth_integral(double alpha, double s) {
  if (!(s >= 0.0 && s < 1.0))
    throw std::invalid_argument("growth_integral: s must lie in [0,1)");
  if (s == 0.0) return 1.0;
  if (std::abs(alpha - 1.0) < 1e-14) return -std::log1p(-s) / s;
  return (std::pow(1.0 - s, 1.0 - alpha) - 1.0) / ((alpha - 1.0) * s);
}

double growth_bound(double seminorm_value, double alpha, double abs_z) {
  if (seminorm_value < 0.0)
    throw std::invalid_argument("growth_bound: seminorm must be >= 0");
  return abs_z * seminorm_value * growth_integral(alpha, abs_z);
}

PairCheckResult extremal_pair_check(const AnalyticMap& h, const AnalyticMap& g,
                                    Alpha alpha, std::span<const DiskPoint> grid) {
  if (grid.empty())
    throw std::invalid_argument("extremal_pair_check: grid must be nonempty");
  PairCheckResult out;
  bool first = true;
  for (const DiskPoint& z : grid) {
    const double scale = std::pow(1.0 - z.abs(), alpha.value);
    const double ratio = scale * (std::abs(h.deriv(z)) + std::abs(g.deriv(z)));
    if (first || ratio < out.min_ratio) {
      out.min_ratio = ratio;
      out.witness = z;
      first = false;
    }
  }
  return out;
}

}  // namespace blochcomp::norms
