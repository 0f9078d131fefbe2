#include "sup_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parallel.hpp"

namespace blochcomp::sup {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Sample {
  double value;
  double r;
  double theta;
};

double eval_polar(const std::function<double(Complex)>& f, double r, double theta) {
  return f(Complex{r * std::cos(theta), r * std::sin(theta)});
}

// Compass search over (r, theta), r clamped to [0, r_bound].
Sample polish(const std::function<double(Complex)>& f, Sample seed, double hr,
              double htheta, double r_bound, int iters) {
  Sample best = seed;
  for (int it = 0; it < iters; ++it) {
    bool moved = false;
    const double candidates[4][2] = {{best.r + hr, best.theta},
                                     {best.r - hr, best.theta},
                                     {best.r, best.theta + htheta},
                                     {best.r, best.theta - htheta}};
    for (const auto& c : candidates) {
      const double r = std::clamp(c[0], 0.0, r_bound);
      const double v = eval_polar(f, r, c[1]);
      if (v > best.value) {
        best = {v, r, c[1]};
        moved = true;
      }
    }
    if (!moved) {
      hr *= 0.5;
      htheta *= 0.5;
      if (hr < 1e-12 && htheta < 1e-12) break;
    }
  }
  return best;
}

}  // namespace

SupEstimate adaptive_sup(const std::function<double(Complex)>& f,
                         const SupBudget& budget) {
  SupEstimate out;
  Sample best{f(Complex{0.0, 0.0}), 0.0, 0.0};
  long total_points = 1;

  for (int k = 1; k <= budget.k_max; ++k) {
    const double r = 1.0 - std::pow(2.0, -k);
    long n = static_cast<long>(
        std::ceil(kTwoPi / ((1.0 - r) * budget.angular_quality)));
    n = std::min(n, budget.max_points_per_level);

    std::vector<double> values(static_cast<std::size_t>(n));
    par::parallel_for(n, [&](long begin, long end) {
      for (long j = begin; j < end; ++j)
        values[static_cast<std::size_t>(j)] =
            eval_polar(f, r, kTwoPi * static_cast<double>(j) / n);
    });
    total_points += n;

    // Deterministic top-seed selection in index order.
    std::vector<long> top;
    for (long j = 0; j < n; ++j) {
      const double v = values[static_cast<std::size_t>(j)];
      auto pos = std::find_if(top.begin(), top.end(), [&](long t) {
        return v > values[static_cast<std::size_t>(t)];
      });
      if (pos != top.end() || top.size() < static_cast<std::size_t>(budget.top_seeds))
        top.insert(pos, j);
      if (top.size() > static_cast<std::size_t>(budget.top_seeds)) top.pop_back();
    }

    const double hr = std::pow(2.0, -k);  // level-to-level radial spacing
    const double htheta = kTwoPi / static_cast<double>(n) * 2.0;
    for (long j : top) {
      const Sample seed{values[static_cast<std::size_t>(j)], r,
                        kTwoPi * static_cast<double>(j) / n};
      const Sample polished = polish(f, seed, hr, htheta, r, budget.polish_iters);
      if (polished.value > best.value) best = polished;
    }
    // Re-polish the running best inside the enlarged region.
    best = std::max(best, polish(f, best, hr, htheta, r, budget.polish_iters),
                    [](const Sample& a, const Sample& b) { return a.value < b.value; });

    out.trace.push_back({r, best.value});

    const std::size_t m = out.trace.size();
    // Divergence needs sustained growth: transient ratios above the factor are
    // normal while the search region has not yet engulfed an interior peak.
    if (m >= 4) {
      bool sustained = true;
      for (std::size_t i = m - 3; i < m; ++i) {
        const double prev = out.trace[i - 1].level_sup;
        if (!(prev > 0.0 &&
              out.trace[i].level_sup / prev > budget.growth_factor))
          sustained = false;
      }
      if (sustained) {
        out.status = SupStatus::Diverging;
        break;
      }
    }
    if (m >= 3) {
      const double s0 = out.trace[m - 3].level_sup;
      const double s1 = out.trace[m - 2].level_sup;
      const double s2 = out.trace[m - 1].level_sup;
      const double hi = std::max({s0, s1, s2});
      const double lo = std::min({s0, s1, s2});
      if (hi - lo <= budget.rel_tol * std::max(hi, 1e-12)) {
        out.status = SupStatus::Converged;
        break;
      }
    }
    if (total_points >= budget.max_total_points) break;
  }

  out.value = best.value;
  out.witness = DiskPoint(Complex{best.r * std::cos(best.theta),
                                  best.r * std::sin(best.theta)});
  return out;
}

double circle_max(const std::function<double(Complex)>& f, double r, long n) {
  n = std::max<long>(n, 16);
  double best = -1.0;
  long best_j = 0;
  std::vector<double> values(static_cast<std::size_t>(n));
  par::parallel_for(n, [&](long begin, long end) {
    for (long j = begin; j < end; ++j)
      values[static_cast<std::size_t>(j)] =
          eval_polar(f, r, kTwoPi * static_cast<double>(j) / n);
  });
  for (long j = 0; j < n; ++j) {
    if (values[static_cast<std::size_t>(j)] > best) {
      best = values[static_cast<std::size_t>(j)];
      best_j = j;
    }
  }

  // Golden-section polish in theta around the best sample.
  const double span = kTwoPi / static_cast<double>(n);
  double a = span * (static_cast<double>(best_j) - 1.0);
  double b = span * (static_cast<double>(best_j) + 1.0);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = eval_polar(f, r, x1);
  double f2 = eval_polar(f, r, x2);
  for (int it = 0; it < 60 && (b - a) > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval_polar(f, r, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval_polar(f, r, x1);
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

DecayVerdict classify_decay(const std::vector<double>& values, double decay_tol) {
  const std::size_t n = values.size();
  if (n < 3) return DecayVerdict::Inconclusive;
  const double v0 = values[n - 3];
  const double v1 = values[n - 2];
  const double v2 = values[n - 1];
  if (v2 < decay_tol && v2 <= v1 && v1 <= v0) return DecayVerdict::DecaysToZero;
  if (v0 > 0.0 && v1 / v0 > 1.5 && v2 / v1 > 1.5) return DecayVerdict::Grows;
  const double hi = std::max({v0, v1, v2});
  const double lo = std::min({v0, v1, v2});
  if (v2 >= decay_tol && hi - lo <= 0.02 * hi) return DecayVerdict::Stabilizes;
  return DecayVerdict::Inconclusive;
}

std::vector<double> default_profile_radii(int k_max) {
  std::vector<double> radii;
  for (int k = 1; k <= k_max; ++k) radii.push_back(1.0 - std::pow(2.0, -k));
  return radii;
}

DecayProfile profile_circle_max(const std::function<double(Complex)>& f,
                                const std::vector<double>& radii,
                                double angular_quality,
                                long max_points_per_circle) {
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (!(radii[i] > 0.0 && radii[i] < 1.0) || (i > 0 && radii[i] <= radii[i - 1]))
      throw std::invalid_argument(
          "profile_circle_max: radii must be strictly increasing in (0,1)");
  DecayProfile out;
  out.radii = radii;
  for (double r : radii) {
    long n = static_cast<long>(std::ceil(kTwoPi / ((1.0 - r) * angular_quality)));
    n = std::min(n, max_points_per_circle);
    out.values.push_back(circle_max(f, r, n));
  }
  out.verdict = classify_decay(out.values);
  return out;
}

const char* to_string(SupStatus s) {
  switch (s) {
    case SupStatus::Converged: return "Converged";
    case SupStatus::Diverging: return "Diverging";
    default: return "Inconclusive";
  }
}

const char* to_string(DecayVerdict v) {
  switch (v) {
    case DecayVerdict::DecaysToZero: return "DecaysToZero";
    case DecayVerdict::Stabilizes: return "Stabilizes";
    case DecayVerdict::Grows: return "Grows";
    default: return "Inconclusive";
  }
}

}  // namespace blochcomp::sup
