#include "runner.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "closed_range.hpp"

namespace blochcomp::run {

using fn::AnalyticMap;
using fn::HarmonicMap;
using geom::Complex;
using norms::Alpha;
using op::TauParams;

namespace {

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string point(Complex z) {
  std::ostringstream os;
  os << "(" << sci(z.real()) << ", " << sci(z.imag()) << ")";
  return os.str();
}

struct Budgets {
  sup::SupBudget sup;
  int profile_k_max = 14;
};

Budgets resolve_budgets(const spec::MapSpecDocument& doc, const Options& options) {
  Budgets b;
  if (doc.budget.k_max) b.sup.k_max = *doc.budget.k_max;
  if (doc.budget.rel_tol) b.sup.rel_tol = *doc.budget.rel_tol;
  if (doc.budget.profile_k_max) b.profile_k_max = *doc.budget.profile_k_max;
  if (options.k_max) {
    b.sup.k_max = *options.k_max;
    if (!doc.budget.profile_k_max) b.profile_k_max = *options.k_max;
  }
  if (b.sup.k_max < 3) b.sup.k_max = 3;
  if (b.profile_k_max < 3) b.profile_k_max = 3;
  return b;
}

double resolve_alpha(const spec::MapSpecDocument& doc, const Options& options) {
  const double a = options.alpha.value_or(doc.alpha);
  if (!(a > 0.0)) throw InputError("alpha must be > 0");
  return a;
}

TauParams make_params(const spec::MapSpecDocument& doc, double alpha) {
  if (!doc.map) throw InputError("this command needs a \"map\" in the document");
  try {
    return TauParams(*doc.map, Alpha(alpha));
  } catch (const fn::DomainError& e) {
    throw InputError(e.what());
  }
}

void header(std::ostringstream& os, const spec::MapSpecDocument& doc,
            const std::string& command, const Budgets& b, double alpha) {
  os << "command: " << command << "\n";
  os << "input-digest: " << spec::digest(doc.source_text) << "\n";
  os << "alpha: " << alpha << "\n";
  os << "budget: kmax=" << b.sup.k_max << " rel_tol=" << b.sup.rel_tol
     << " profile_kmax=" << b.profile_k_max << "\n";
}

void describe_profile(std::ostringstream& os, const char* name,
                      const sup::DecayProfile& p) {
  os << name << ": " << sup::to_string(p.verdict);
  if (p.vacuous) os << " (vacuous: empty approach region)";
  os << " tail=[";
  const std::size_t n = p.values.size();
  for (std::size_t i = n >= 3 ? n - 3 : 0; i < n; ++i) {
    if (i > (n >= 3 ? n - 3 : 0)) os << ", ";
    os << sci(p.values[i]);
  }
  os << "]\n";
}

Outcome cmd_classify(const spec::MapSpecDocument& doc, const Options& options) {
  const double alpha = resolve_alpha(doc, options);
  const Budgets b = resolve_budgets(doc, options);
  const TauParams params = make_params(doc, alpha);
  const auto report = op::classify(params, b.sup, b.profile_k_max);

  Outcome out;
  std::ostringstream os;
  header(os, doc, "classify", b, alpha);
  os << "map: " << params.phi.describe() << "\n";
  os << "self-map check: Verified"
     << (params.validation.boundary_contact ? " (boundary contact)" : "")
     << " max_modulus=" << sci(params.validation.max_modulus_seen) << "\n";
  os << "tau_sup: " << sci(report.tau_sup.value)
     << " status=" << sup::to_string(report.tau_sup.status)
     << " witness=" << point(report.tau_sup.witness.value()) << "\n";
  describe_profile(os, "profile_base", report.boundary_by_base);
  describe_profile(os, "profile_image", report.boundary_by_image);
  describe_profile(os, "profile_phi_little_bloch", report.phi_little_bloch);
  for (const auto& name : op::criterion_names())
    os << name << ": " << op::to_string(report.verdicts.at(name)) << "\n";
  out.text = os.str();
  out.exit_code = report.any_definite() ? 0 : 2;
  return out;
}

Outcome cmd_tau_profile(const spec::MapSpecDocument& doc, const Options& options) {
  const double alpha = resolve_alpha(doc, options);
  const Budgets b = resolve_budgets(doc, options);
  const TauParams params = make_params(doc, alpha);

  const int k_max = std::min(b.profile_k_max, 12);
  const int rays = 16;
  std::ostringstream csv;
  csv << "r,theta,tau\n";
  for (int k = 1; k <= k_max; ++k) {
    const double r = 1.0 - std::pow(2.0, -k);
    for (int i = 0; i < rays; ++i) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / rays;
      const geom::DiskPoint z{r * std::cos(theta), r * std::sin(theta)};
      csv << sci(r) << "," << sci(theta) << "," << sci(op::tau(params, z)) << "\n";
    }
  }

  Outcome out;
  out.text = csv.str();
  out.artifacts.push_back({"tau_profile.csv", csv.str()});
  return out;
}

std::string omega_csv(const range::LevelSetSample& omega) {
  std::ostringstream csv;
  csv << "re,im,tau\n";
  for (const auto& gp : omega.points)
    csv << sci(gp.z.real()) << "," << sci(gp.z.imag()) << "," << sci(gp.tau) << "\n";
  return csv.str();
}

std::string gset_csv(const range::ImageSetSample& g) {
  std::ostringstream csv;
  csv << "re,im,preimage_re,preimage_im\n";
  for (const auto& ip : g.points)
    csv << sci(ip.w.real()) << "," << sci(ip.w.imag()) << ","
        << sci(ip.preimage.real()) << "," << sci(ip.preimage.imag()) << "\n";
  return csv.str();
}

Outcome cmd_omega(const spec::MapSpecDocument& doc, const Options& options) {
  const double alpha = resolve_alpha(doc, options);
  const Budgets b = resolve_budgets(doc, options);
  const TauParams params = make_params(doc, alpha);
  const double c = options.c.value_or(0.5);
  if (!(c > 0.0)) throw InputError("--c must be > 0");

  const auto omega = range::omega_sample(params, c, range::GridSpec{});
  const auto g = range::g_sample(params, omega);

  Outcome out;
  std::ostringstream os;
  header(os, doc, "omega", b, alpha);
  os << "map: " << params.phi.describe() << "\n";
  os << "c: " << c << "\n";
  os << "grid: " << omega.grid_descriptor << "\n";
  os << "omega points: " << omega.points.size() << "\n";
  double min_z = 1.0, min_w = 1.0;
  for (const auto& gp : omega.points) min_z = std::min(min_z, std::abs(gp.z));
  for (const auto& ip : g.points) min_w = std::min(min_w, std::abs(ip.w));
  if (!omega.points.empty()) {
    os << "omega min radius: " << sci(min_z) << "\n";
    os << "g min radius: " << sci(min_w) << "\n";
  }
  out.text = os.str();
  out.artifacts.push_back({"omega.csv", omega_csv(omega)});
  out.artifacts.push_back({"gset.csv", gset_csv(g)});
  return out;
}

Outcome cmd_closed_range(const spec::MapSpecDocument& doc, const Options& options) {
  const double alpha = resolve_alpha(doc, options);
  const Budgets b = resolve_budgets(doc, options);
  const TauParams params = make_params(doc, alpha);

  // The closed-range theorems presuppose a bounded operator.
  const auto sup_est = op::tau_sup(params, b.sup);
  if (sup_est.status == sup::SupStatus::Diverging)
    throw InputError("closed-range analysis requires a bounded operator; "
                     "tau_sup is diverging");

  range::ClosedRangeBudget budget;
  budget.sup = b.sup;
  if (options.r0) budget.annulus_r0_sweep = {*options.r0};
  std::vector<double> c_grid = {0.1, 0.3, 0.5, 0.7};
  if (options.c) c_grid = {*options.c};

  const auto report = range::closed_range_report(params, c_grid, budget);

  Outcome out;
  std::ostringstream os;
  header(os, doc, "closed-range", b, alpha);
  os << "map: " << params.phi.describe() << "\n";
  os << "tau_sup (K): " << sci(report.tau_sup.value)
     << " status=" << sup::to_string(report.tau_sup.status) << "\n";
  os << "bounded_below eps_est: " << sci(report.bounded_below.eps_est)
     << " minimizer=" << report.bounded_below.minimizer_index << "\n";
  os << "sampling S_est: " << sci(report.sampling.S_est)
     << " minimizer=" << report.sampling.minimizer_index
     << " family_size=" << report.sampling.family_size << "\n";
  double chosen_c = c_grid.front();
  bool chosen = false;
  for (const auto& ev : report.per_c) {
    os << "c=" << ev.c << ": omega_points=" << ev.omega_count
       << " net_r=" << sci(ev.derived_r) << " net_covered=" << ev.net.probes_covered
       << "/" << ev.net.probes_total << " worst_gap=" << sci(ev.net.worst_gap);
    for (const auto& [r0, v] : ev.annulus_sweep) {
      os << " annulus(r0=" << r0 << ")=" << range::to_string(v);
      if (!chosen && v == range::AnnulusVerdict::Holds) {
        chosen_c = ev.c;
        chosen = true;
      }
    }
    os << "\n";
  }
  os << "verdict: " << range::to_string(report.verdict) << "\n";
  out.text = os.str();

  const auto omega = range::omega_sample(params, chosen_c, budget.grid);
  const auto g = range::g_sample(params, omega);
  out.artifacts.push_back({"omega.csv", omega_csv(omega)});
  out.artifacts.push_back({"gset.csv", gset_csv(g)});
  out.exit_code = report.verdict == range::RangeVerdict::Inconclusive ? 2 : 0;
  return out;
}

Outcome cmd_seminorm(const spec::MapSpecDocument& doc, const Options& options) {
  const double alpha = resolve_alpha(doc, options);
  const Budgets b = resolve_budgets(doc, options);

  HarmonicMap f{AnalyticMap::constant({0, 0}), AnalyticMap::constant({0, 0})};
  if (doc.h || doc.g) {
    f = HarmonicMap{doc.h.value_or(AnalyticMap::constant({0, 0})),
                    doc.g.value_or(AnalyticMap::constant({0, 0}))};
  } else if (doc.map && doc.map_is_extremal) {
    f = HarmonicMap{*doc.map, *doc.map};  // phi_a + conj(phi_a)
  } else {
    throw InputError("seminorm needs \"h\"/\"g\" components or an extremal map");
  }

  const auto result = norms::norm(f, Alpha(alpha), b.sup);

  Outcome out;
  std::ostringstream os;
  header(os, doc, "seminorm", b, alpha);
  os << "seminorm: " << sci(result.sup.value) << "\n";
  os << "norm: " << sci(result.value) << "\n";
  os << "f(0): " << point(result.f0) << "\n";
  os << "status: " << sup::to_string(result.sup.status) << "\n";
  os << "witness: " << point(result.sup.witness.value()) << "\n";
  out.text = os.str();
  out.exit_code = result.sup.status == sup::SupStatus::Inconclusive ? 2 : 0;
  return out;
}

Outcome cmd_net_check(const spec::MapSpecDocument& doc, const Options& options) {
  const double alpha = resolve_alpha(doc, options);
  const Budgets b = resolve_budgets(doc, options);
  const TauParams params = make_params(doc, alpha);
  const double c = options.c.value_or(0.5);
  const double r = options.r.value_or(0.5);
  if (!(c > 0.0)) throw InputError("--c must be > 0");
  if (!(r > 0.0 && r < 1.0)) throw InputError("--r must lie in (0,1)");

  const auto omega = range::omega_sample(params, c, range::GridSpec{});
  const auto g = range::g_sample(params, omega);
  const auto probes = geom::hyperbolic_lattice(0.995, 0.2);
  const auto result = range::net_check(g, r, probes);

  Outcome out;
  std::ostringstream os;
  header(os, doc, "net-check", b, alpha);
  os << "map: " << params.phi.describe() << "\n";
  os << "c: " << c << "  r: " << r << "\n";
  os << "g points: " << g.points.size() << "\n";
  os << "probes covered: " << result.probes_covered << "/" << result.probes_total
     << "\n";
  os << "worst gap: " << sci(result.worst_gap) << " at "
     << point(result.worst_probe) << "\n";
  os << "r-net: " << (result.full_coverage() ? "yes" : "no") << "\n";
  out.text = os.str();
  return out;
}

}  // namespace

Outcome run_command(const spec::MapSpecDocument& doc, const std::string& command,
                    const Options& options) {
  if (command == "classify") return cmd_classify(doc, options);
  if (command == "tau-profile") return cmd_tau_profile(doc, options);
  if (command == "omega") return cmd_omega(doc, options);
  if (command == "closed-range") return cmd_closed_range(doc, options);
  if (command == "seminorm") return cmd_seminorm(doc, options);
  if (command == "net-check") return cmd_net_check(doc, options);
  throw InputError("unknown command: " + command);
}

}  // namespace blochcomp::run
