#include "closed_range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "parallel.hpp"

namespace blochcomp::range {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> grid_radii(const GridSpec& spec) {
  std::vector<double> radii;
  radii.push_back(0.0);
  for (double r = spec.linear_dr; r <= spec.linear_r_max + 1e-12; r += spec.linear_dr)
    radii.push_back(r);
  for (int k = spec.dyadic_k_min; k <= spec.dyadic_k_max; ++k) {
    const double r = 1.0 - std::pow(2.0, -k);
    if (r > radii.back() + 1e-12) radii.push_back(r);
  }
  return radii;
}

long angular_count(const GridSpec& spec, double r) {
  if (r <= 0.0) return 1;
  const long n = static_cast<long>(
      std::ceil(kTwoPi / ((1.0 - r) * spec.angular_quality)));
  return std::clamp<long>(n, 16, spec.max_points_per_circle);
}

}  // namespace

TauGrid evaluate_tau_grid(const TauParams& p, const GridSpec& spec) {
  TauGrid grid;
  const auto radii = grid_radii(spec);
  const double a = p.alpha.value;
  for (double r : radii) {
    const long n = angular_count(spec, r);
    const std::size_t base = grid.points.size();
    grid.points.resize(base + static_cast<std::size_t>(n));
    par::parallel_for(n, [&](long begin, long end) {
      for (long j = begin; j < end; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / n;
        const Complex z{r * std::cos(theta), r * std::sin(theta)};
        const double weight = std::pow(1.0 - std::norm(z), a);
        const Complex w = p.phi.eval(z);
        const double tau_value =
            weight * std::abs(p.phi.deriv(z)) / std::pow(1.0 - std::norm(w), a);
        grid.points[base + static_cast<std::size_t>(j)] = {z, tau_value};
      }
    });
  }
  std::ostringstream os;
  os << "polar grid: linear dr=" << spec.linear_dr << " to r=" << spec.linear_r_max
     << ", dyadic k=" << spec.dyadic_k_min << ".." << spec.dyadic_k_max << ", "
     << grid.points.size() << " points";
  grid.descriptor = os.str();
  return grid;
}

LevelSetSample omega_sample(const TauParams& p, double c, const TauGrid& grid) {
  if (!(c > 0.0)) throw std::invalid_argument("omega_sample: c must be > 0");
  (void)p;
  LevelSetSample out;
  out.c = c;
  out.grid_descriptor = grid.descriptor;
  for (const GridPoint& gp : grid.points)
    if (gp.tau >= c) out.points.push_back(gp);
  return out;
}

LevelSetSample omega_sample(const TauParams& p, double c, const GridSpec& spec) {
  return omega_sample(p, c, evaluate_tau_grid(p, spec));
}

ImageSetSample g_sample(const TauParams& p, const LevelSetSample& omega) {
  ImageSetSample out;
  out.points.reserve(omega.points.size());
  for (const GridPoint& gp : omega.points)
    out.points.push_back({p.phi.eval(gp.z), gp.z});
  return out;
}

NetCheckResult net_check(const ImageSetSample& g, double r,
                         std::span<const DiskPoint> probes) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("net_check: r must lie in (0,1)");
  if (probes.empty())
    throw std::invalid_argument("net_check: probes must be nonempty");

  NetCheckResult out;
  out.r = r;
  out.probes_total = static_cast<long>(probes.size());
  if (g.points.empty()) {
    out.worst_probe = probes[0].value();
    return out;  // sentinel worst_gap = 1, zero covered
  }

  std::vector<double> gaps(probes.size());
  par::parallel_for(static_cast<long>(probes.size()), [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const Complex a = probes[static_cast<std::size_t>(i)].value();
      double min_sq = 1.0;
      for (const ImagePoint& ip : g.points) {
        const Complex num = a - ip.w;
        const Complex den = 1.0 - std::conj(a) * ip.w;
        min_sq = std::min(min_sq, std::norm(num) / std::norm(den));
      }
      gaps[static_cast<std::size_t>(i)] = std::sqrt(min_sq);
    }
  });

  out.worst_gap = 0.0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < r) ++out.probes_covered;
    if (gaps[i] > out.worst_gap) {
      out.worst_gap = gaps[i];
      out.worst_probe = probes[i].value();
    }
  }
  return out;
}

namespace {

enum class ProbeOutcome { Accepted, Counterevidence, Unresolved };

// Damped Newton solve of phi(z) = w from one seed. Iterates may wander
// slightly outside D so that roots without disk preimages are still detected;
// nodes that cannot evaluate there surface as DomainError and kill the seed.
struct RootResult {
  bool converged = false;
  Complex root{0.0, 0.0};
};

RootResult newton_solve(const AnalyticMap& phi, Complex w, Complex z0, int iters) {
  Complex z = z0;
  try {
    for (int i = 0; i < iters; ++i) {
      const Complex fz = phi.eval(z) - w;
      if (std::abs(fz) < 1e-11) return {true, z};
      const Complex d = phi.deriv(z);
      if (std::abs(d) < 1e-14) return {};
      const Complex step = fz / d;
      double lambda = 1.0;
      bool moved = false;
      while (lambda >= 1.0 / 64.0) {
        const Complex trial = z - lambda * step;
        if (std::abs(trial) <= 2.0) {
          bool better = false;
          try {
            better = std::abs(phi.eval(trial) - w) < std::abs(fz);
          } catch (const fn::DomainError&) {
            better = false;
          }
          if (better) {
            z = trial;
            moved = true;
            break;
          }
        }
        lambda *= 0.5;
      }
      if (!moved) return {};
    }
    if (std::abs(phi.eval(z) - w) < 1e-9) return {true, z};
  } catch (const fn::DomainError&) {
    return {};
  }
  return {};
}

ProbeOutcome resolve_probe(const TauParams& p, double c, Complex w,
                           const AnnulusBudget& budget) {
  const int deg = std::max(1, p.phi.degree_hint());
  const double seed_r = std::min(std::pow(std::abs(w), 1.0 / deg), 0.999);
  const double base_arg = std::arg(w) / deg;
  bool counterevidence = false;
  for (int s = 0; s < 8; ++s) {
    const double theta = base_arg + kTwoPi * static_cast<double>(s) / 8.0;
    const Complex z0{seed_r * std::cos(theta), seed_r * std::sin(theta)};
    const RootResult root = newton_solve(p.phi, w, z0, budget.max_newton_iters);
    if (!root.converged) continue;
    const auto dp = DiskPoint::try_make(root.root);
    if (!dp) {
      counterevidence = true;  // preimage exists but not inside D
      continue;
    }
    if (op::tau(p, *dp) >= c * (1.0 - 1e-9)) return ProbeOutcome::Accepted;
    counterevidence = true;  // preimage found, but below the level threshold
  }
  return counterevidence ? ProbeOutcome::Counterevidence : ProbeOutcome::Unresolved;
}

}  // namespace

AnnulusCheckResult annulus_check(const TauParams& p, double c, double r0,
                                 const AnnulusBudget& budget) {
  if (!(r0 > 0.0 && r0 < 1.0))
    throw std::invalid_argument("annulus_check: r0 must lie in (0,1)");
  if (!(budget.r_max > r0 && budget.r_max < 1.0))
    throw std::invalid_argument("annulus_check: need r0 < r_max < 1");

  AnnulusCheckResult out;
  for (int ring = 0; ring < budget.rings; ++ring) {
    const double radius =
        r0 + (budget.r_max - r0) * static_cast<double>(ring + 1) / budget.rings;
    for (int j = 0; j < budget.probes_per_ring; ++j) {
      const double theta = kTwoPi * (static_cast<double>(j) +
                                     0.5 * static_cast<double>(ring % 2)) /
                           budget.probes_per_ring;
      const Complex w{radius * std::cos(theta), radius * std::sin(theta)};
      ++out.probes;
      switch (resolve_probe(p, c, w, budget)) {
        case ProbeOutcome::Accepted: ++out.accepted; break;
        case ProbeOutcome::Counterevidence: out.failures.push_back(w); break;
        case ProbeOutcome::Unresolved: ++out.unresolved; break;
      }
    }
  }
  if (out.accepted == out.probes)
    out.verdict = AnnulusVerdict::Holds;
  else if (!out.failures.empty())
    out.verdict = AnnulusVerdict::Fails;
  else
    out.verdict = AnnulusVerdict::Inconclusive;
  return out;
}

SamplingEstimate sampling_constant_estimate(const ImageSetSample& g, Alpha alpha,
                                            const std::vector<HarmonicMap>& family,
                                            const sup::SupBudget& budget) {
  if (family.empty())
    throw std::invalid_argument("sampling_constant_estimate: empty family");
  SamplingEstimate out;
  out.family_size = static_cast<int>(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto sn = norms::seminorm(family[i], alpha, budget);
    if (sn.status != sup::SupStatus::Converged || sn.value <= 1e-12) {
      ++out.skipped;
      out.ratios.push_back(-1.0);
      continue;
    }
    double sup_g = 0.0;
    for (const ImagePoint& ip : g.points) {
      const auto w = DiskPoint::try_make(ip.w);
      if (!w) continue;
      sup_g = std::max(sup_g, norms::local_intensity(family[i], alpha, *w));
    }
    const double ratio = sup_g / sn.value;
    out.ratios.push_back(ratio);
    if (out.minimizer_index < 0 || ratio < out.S_est) {
      out.S_est = ratio;
      out.minimizer_index = static_cast<int>(i);
    }
  }
  return out;
}

BoundedBelowEstimate bounded_below_estimate(const TauParams& p,
                                            const std::vector<HarmonicMap>& family,
                                            const sup::SupBudget& budget) {
  if (family.empty())
    throw std::invalid_argument("bounded_below_estimate: empty family");
  BoundedBelowEstimate out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto nf = norms::norm(family[i], p.alpha, budget);
    if (nf.sup.status != sup::SupStatus::Converged || nf.value <= 1e-12) {
      ++out.skipped;
      out.ratios.push_back(-1.0);
      continue;
    }
    const auto pulled = op::pullback(p.phi, family[i]);
    const auto np = norms::norm(pulled, p.alpha, budget);
    const double ratio = np.value / nf.value;
    out.ratios.push_back(ratio);
    if (out.minimizer_index < 0 || ratio < out.eps_est) {
      out.eps_est = ratio;
      out.minimizer_index = static_cast<int>(i);
    }
  }
  return out;
}

std::vector<HarmonicMap> default_test_family(double alpha) {
  std::vector<HarmonicMap> family;
  auto add_extremal = [&](DiskPoint a) {
    AnalyticMap phi_a = AnalyticMap::extremal(a, alpha);
    family.push_back(HarmonicMap{phi_a, phi_a});  // phi_a + conj(phi_a)
  };
  for (const DiskPoint& a : geom::hyperbolic_lattice(0.8, 0.7)) add_extremal(a);
  for (int j = 0; j < 8; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / 8.0;
    add_extremal(DiskPoint{0.99 * std::cos(theta), 0.99 * std::sin(theta)});
  }
  for (int n = 1; n <= 8; ++n) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    coeffs.back() = Complex{1.0, 0.0};
    family.push_back(
        HarmonicMap{AnalyticMap::polynomial(coeffs), AnalyticMap::constant({0, 0})});
  }
  return family;
}

const char* to_string(AnnulusVerdict v) {
  switch (v) {
    case AnnulusVerdict::Holds: return "Holds";
    case AnnulusVerdict::Fails: return "Fails";
    default: return "Inconclusive";
  }
}

const char* to_string(RangeVerdict v) {
  switch (v) {
    case RangeVerdict::EvidenceFor: return "EvidenceFor";
    case RangeVerdict::EvidenceAgainst: return "EvidenceAgainst";
    default: return "Inconclusive";
  }
}

ClosedRangeReport closed_range_report(const TauParams& p,
                                      const std::vector<double>& c_grid,
                                      const ClosedRangeBudget& budget) {
  if (c_grid.empty())
    throw std::invalid_argument("closed_range_report: empty c grid");

  ClosedRangeReport rep;
  rep.tau_sup = op::tau_sup(p, budget.sup);
  const double K = std::max(rep.tau_sup.value, 1e-12);

  const auto family = default_test_family(p.alpha.value);
  const auto grid = evaluate_tau_grid(p, budget.grid);
  auto probe_points =
      geom::hyperbolic_lattice(budget.probe_r_max, budget.probe_step);
  for (int j = 0; j < budget.sentinel_count; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / budget.sentinel_count;
    probe_points.push_back(DiskPoint{budget.sentinel_radius * std::cos(theta),
                                     budget.sentinel_radius * std::sin(theta)});
  }

  rep.bounded_below = bounded_below_estimate(p, family, budget.sup);

  bool any_annulus_holds = false;
  bool all_nets_fail = true;
  bool first_c = true;
  for (double c : c_grid) {
    PerLevelEvidence ev;
    ev.c = c;
    const auto omega = omega_sample(p, c, grid);
    const auto g = g_sample(p, omega);
    ev.omega_count = omega.points.size();
    for (const GridPoint& gp : omega.points)
      ev.omega_min_radius = std::min(ev.omega_min_radius, std::abs(gp.z));
    for (const ImagePoint& ip : g.points)
      ev.g_min_radius = std::min(ev.g_min_radius, std::abs(ip.w));

    // Constructive net radius from the closed-range argument, with the
    // bounded-below estimate standing in for the unknown epsilon.
    const double eps = std::max(rep.bounded_below.eps_est, 1e-12);
    const double inner =
        std::pow(std::min(eps / (2.0 * K), 1.0), 1.0 / p.alpha.value);
    ev.derived_r = std::clamp(std::sqrt(std::max(1.0 - inner, 0.0)), 0.1, 0.99);
    ev.net = net_check(g, ev.derived_r, probe_points);
    if (ev.net.full_coverage()) all_nets_fail = false;

    for (double r0 : budget.annulus_r0_sweep) {
      if (!(r0 < budget.annulus.r_max)) continue;
      const auto ac = annulus_check(p, c, r0, budget.annulus);
      ev.annulus_sweep.emplace_back(r0, ac.verdict);
      if (ac.verdict == AnnulusVerdict::Holds) any_annulus_holds = true;
    }

    if (first_c) {
      rep.sampling = sampling_constant_estimate(g, p.alpha, family, budget.sup);
      first_c = false;
    }
    rep.per_c.push_back(std::move(ev));
  }

  if (any_annulus_holds)
    rep.verdict = RangeVerdict::EvidenceFor;
  else if (rep.bounded_below.eps_est < budget.eps_threshold && all_nets_fail)
    rep.verdict = RangeVerdict::EvidenceAgainst;
  else
    rep.verdict = RangeVerdict::Inconclusive;
  return rep;
}

}  // namespace blochcomp::range
