#include "comp_operator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "parallel.hpp"

namespace blochcomp::op {

namespace {

double tau_at(const AnalyticMap& phi, double alpha, Complex z) {
  const Complex w = phi.eval(z);
  const double wn = std::norm(w);
  if (!(wn < 1.0)) {
    std::ostringstream os;
    os << "tau: |phi(z)| >= 1 at z = " << z.real() << (z.imag() < 0 ? "" : "+")
       << z.imag() << "i";
    throw fn::DomainError(os.str(), z);
  }
  const double num = std::pow(1.0 - std::norm(z), alpha) * std::abs(phi.deriv(z));
  return num / std::pow(1.0 - wn, alpha);
}

}  // namespace

TauParams::TauParams(AnalyticMap phi_, Alpha alpha_)
    : phi(std::move(phi_)), alpha(alpha_), validation(fn::validate_self_map(phi)) {
  if (validation.status == fn::SelfMapStatus::Violated) {
    std::ostringstream os;
    os << "phi is not a self-map of the disk: |phi| = " << validation.max_modulus_seen
       << " at z = " << validation.witness.real()
       << (validation.witness.imag() < 0 ? "" : "+") << validation.witness.imag()
       << "i";
    throw fn::DomainError(os.str(), validation.witness);
  }
}

double tau(const TauParams& p, DiskPoint z) {
  return tau_at(p.phi, p.alpha.value, z.value());
}

sup::SupEstimate tau_sup(const TauParams& p, const sup::SupBudget& budget) {
  const double a = p.alpha.value;
  const AnalyticMap& phi = p.phi;
  return sup::adaptive_sup([&phi, a](Complex z) { return tau_at(phi, a, z); },
                           budget);
}

sup::DecayProfile boundary_profile_by_base(const TauParams& p,
                                           const std::vector<double>& radii) {
  const double a = p.alpha.value;
  const AnalyticMap& phi = p.phi;
  return sup::profile_circle_max(
      [&phi, a](Complex z) { return tau_at(phi, a, z); }, radii);
}

sup::DecayProfile boundary_profile_by_image(const TauParams& p,
                                            const std::vector<double>& deltas,
                                            int grid_k_max) {
  for (std::size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] < deltas[i - 1]))
      throw std::invalid_argument(
          "boundary_profile_by_image: deltas must be decreasing");
  for (double d : deltas)
    if (!(d > 0.0 && d < 1.0))
      throw std::invalid_argument(
          "boundary_profile_by_image: deltas must lie in (0,1)");

  // Filter the same polar grids used by the sup search instead of inverting
  // phi.
  struct Entry {
    double abs_w;
    double tau;
  };
  std::vector<Entry> entries;
  const double a = p.alpha.value;
  for (int k = 1; k <= grid_k_max; ++k) {
    const double r = 1.0 - std::pow(2.0, -k);
    long n = static_cast<long>(
        std::ceil(2.0 * std::numbers::pi / ((1.0 - r) * 0.25)));
    n = std::min(n, 1L << 16);
    const std::size_t base = entries.size();
    entries.resize(base + static_cast<std::size_t>(n));
    par::parallel_for(n, [&](long begin, long end) {
      for (long j = begin; j < end; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
        const Complex z{r * std::cos(theta), r * std::sin(theta)};
        entries[base + static_cast<std::size_t>(j)] = {std::abs(p.phi.eval(z)),
                                                       tau_at(p.phi, a, z)};
      }
    });
  }

  sup::DecayProfile out;
  bool any_nonempty = false;
  for (double delta : deltas) {
    double level = 0.0;
    bool nonempty = false;
    for (const Entry& e : entries) {
      if (e.abs_w > 1.0 - delta) {
        nonempty = true;
        level = std::max(level, e.tau);
      }
    }
    any_nonempty = any_nonempty || nonempty;
    out.radii.push_back(1.0 - delta);
    out.values.push_back(nonempty ? level : 0.0);
  }
  if (!any_nonempty) {
    // phi(D) relatively compact: the limit condition quantifies over an empty
    // approach region.
    out.verdict = sup::DecayVerdict::DecaysToZero;
    out.vacuous = true;
    return out;
  }
  out.verdict = sup::classify_decay(out.values);
  return out;
}

sup::DecayProfile phi_little_bloch_profile(const TauParams& p,
                                           const std::vector<double>& radii) {
  const double a = p.alpha.value;
  const AnalyticMap& phi = p.phi;
  return sup::profile_circle_max(
      [&phi, a](Complex z) {
        return std::pow(1.0 - std::norm(z), a) * std::abs(phi.deriv(z));
      },
      radii);
}

HarmonicMap pullback(const AnalyticMap& phi, const HarmonicMap& f) {
  return HarmonicMap{AnalyticMap::compose(f.h, phi), AnalyticMap::compose(f.g, phi)};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    default: return "Inconclusive";
  }
}

bool ClassificationReport::any_definite() const {
  for (const auto& [name, v] : verdicts)
    if (v != Verdict::Inconclusive) return true;
  return false;
}

namespace {

Verdict from_sup(const sup::SupEstimate& s) {
  switch (s.status) {
    case sup::SupStatus::Converged: return Verdict::Yes;
    case sup::SupStatus::Diverging: return Verdict::No;
    default: return Verdict::Inconclusive;
  }
}

Verdict from_decay(const sup::DecayProfile& p) {
  switch (p.verdict) {
    case sup::DecayVerdict::DecaysToZero: return Verdict::Yes;
    case sup::DecayVerdict::Stabilizes:
    case sup::DecayVerdict::Grows: return Verdict::No;
    default: return Verdict::Inconclusive;
  }
}

// Any Inconclusive input makes the conjunction Inconclusive; a definite No is
// issued only when both inputs are definite.
Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive)
    return Verdict::Inconclusive;
  return (a == Verdict::Yes && b == Verdict::Yes) ? Verdict::Yes : Verdict::No;
}

}  // namespace

ClassificationReport classify(const TauParams& p, const sup::SupBudget& budget,
                              int profile_k_max) {
  ClassificationReport rep;
  rep.tau_sup = tau_sup(p, budget);
  const auto radii = sup::default_profile_radii(profile_k_max);
  rep.boundary_by_base = boundary_profile_by_base(p, radii);
  std::vector<double> deltas;
  for (int k = 1; k <= std::min(profile_k_max - 4, 8); ++k)
    deltas.push_back(std::pow(2.0, -k));
  if (deltas.empty()) deltas = {0.5, 0.25, 0.125};
  rep.boundary_by_image =
      boundary_profile_by_image(p, deltas, std::min(profile_k_max, 13));
  rep.phi_little_bloch = phi_little_bloch_profile(p, radii);

  const Verdict sup_v = from_sup(rep.tau_sup);
  const Verdict base_v = from_decay(rep.boundary_by_base);
  const Verdict image_v = from_decay(rep.boundary_by_image);
  const Verdict phi_lb_v = from_decay(rep.phi_little_bloch);

  rep.verdicts["bounded_HB_to_HB"] = sup_v;
  rep.verdicts["bounded_HB0_to_HB"] = sup_v;
  rep.verdicts["bounded_HB_to_HB0"] = base_v;
  rep.verdicts["compact_HB0_variants"] = base_v;
  rep.verdicts["bounded_HB0_to_HB0"] = both(phi_lb_v, sup_v);
  rep.verdicts["compact_HB_to_HB"] = both(image_v, sup_v);
  return rep;
}

}  // namespace blochcomp::op
