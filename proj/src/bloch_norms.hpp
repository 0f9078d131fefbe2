#pragma once

#include <span>

#include "analytic_map.hpp"
#include "sup_search.hpp"

namespace blochcomp::norms {

using fn::AnalyticMap;
using fn::HarmonicMap;
using geom::Complex;
using geom::DiskPoint;

/// Bloch exponent, > 0.
struct Alpha {
  double value;
  explicit Alpha(double v) : value(v) {
    if (!(v > 0.0)) throw std::invalid_argument("Alpha: value must be > 0");
  }
};

/// (1 - |z|^2)^alpha (|f_z(z)| + |f_zbar(z)|), the integrand of the seminorm sup.
double local_intensity(const HarmonicMap& f, Alpha alpha, DiskPoint z);

/// Adaptive estimate of sup_D local_intensity.
sup::SupEstimate seminorm(const HarmonicMap& f, Alpha alpha,
                          const sup::SupBudget& budget = {});

struct NormResult {
  double value = 0.0;  // |f(0)| + seminorm estimate
  Complex f0{0.0, 0.0};
  sup::SupEstimate sup;  // status inherited from the seminorm search
};

NormResult norm(const HarmonicMap& f, Alpha alpha, const sup::SupBudget& budget = {});

/// Boundary-decay diagnostic for membership in the little Bloch space: circle
/// maxima of the intensity over the given radii.
sup::DecayProfile little_bloch_profile(const HarmonicMap& f, Alpha alpha,
                                       const std::vector<double>& radii);

/// I_alpha(s) = integral_0^1 (1 - s t)^(-alpha) dt, with I_alpha(0) = 1.
double growth_integral(double alpha, double s);

/// Bound on |f(z) - f(0)|: |z| * seminorm * I_alpha(|z|). Monotone increasing
/// in |z| and in the seminorm.
double growth_bound(double seminorm_value, double alpha, double abs_z);

struct PairCheckResult {
  double min_ratio = 0.0;
  DiskPoint witness{0.0, 0.0};
};

/// Numerical check of the lower bound |h'(z)| + |g'(z)| >= (1 - |z|)^(-alpha)
/// for a user-supplied candidate pair: min over the grid of
/// (|h'| + |g'|) (1 - |z|)^alpha. The pair passes when the min stays near 1.
PairCheckResult extremal_pair_check(const AnalyticMap& h, const AnalyticMap& g,
                                    Alpha alpha, std::span<const DiskPoint> grid);

}  // namespace blochcomp::norms
