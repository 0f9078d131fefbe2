// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Criteria 1-8 drive the library directly; criterion 9 drives the
// installed CLI binary.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "closed_range.hpp"

using namespace blochcomp;
using fn::AnalyticMap;
using fn::HarmonicMap;
using geom::Complex;
using geom::DiskPoint;
using norms::Alpha;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

DiskPoint random_point(std::mt19937& rng, double r_max = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = r_max * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return DiskPoint{r * std::cos(t), r * std::sin(t)};
}

AnalyticMap random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> pd(1, max_deg);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> coeffs(static_cast<std::size_t>(pd(rng)) + 1);
  for (auto& c : coeffs) c = Complex{u(rng), u(rng)};
  return AnalyticMap::polynomial(std::move(coeffs));
}

void criterion_1_geometry() {
  std::mt19937 rng(101);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint a = random_point(rng);
    const DiskPoint z = random_point(rng);
    const DiskPoint w = random_point(rng);

    worst = std::max(worst, std::abs(geom::moebius(a, DiskPoint(geom::moebius(a, z))) -
                                     z.value()));
    const DiskPoint pz{geom::moebius(a, z)};
    const DiskPoint pw{geom::moebius(a, w)};
    worst = std::max(worst, std::abs(geom::pseudo_hyperbolic(pz, pw) -
                                     geom::pseudo_hyperbolic(z, w)));
    const double rho = geom::pseudo_hyperbolic(z, w);
    worst = std::max(worst,
                     std::abs((1.0 - rho * rho) -
                              (1.0 - std::norm(z.value())) *
                                  std::abs(geom::moebius_deriv(w, z))));
  }
  report(1, "geometry identities on 10^3 random triples", worst < 1e-10,
         "max error " + std::to_string(worst));
}

void criterion_2_automorphism_weight() {
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const DiskPoint a = random_point(rng, 0.93);
    const double theta = ut(rng);
    const op::TauParams p(
        AnalyticMap::moebius(a, Complex{std::cos(theta), std::sin(theta)}),
        Alpha{1.0});
    worst = std::max(worst, std::abs(op::tau(p, random_point(rng, 0.97)) - 1.0));
  }
  report(2, "automorphism weight is identically one", worst < 1e-9,
         "max |tau - 1| = " + std::to_string(worst));
}

void criterion_3_extremal_seminorm() {
  const double phase = std::numbers::pi / 3.0;
  const std::vector<DiskPoint> centers = {
      DiskPoint{0.1, 0.0}, DiskPoint{0.5, 0.0},
      DiskPoint{0.9 * std::cos(phase), 0.9 * std::sin(phase)}};
  bool ok = true;
  std::string detail;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (const DiskPoint& a : centers) {
      const auto start = std::chrono::steady_clock::now();
      const AnalyticMap phi_a = AnalyticMap::extremal(a, alpha);
      const auto est = norms::seminorm({phi_a, phi_a}, Alpha{alpha});
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      const bool case_ok = est.status == sup::SupStatus::Converged &&
                           std::abs(est.value - 2.0) < 1e-3 &&
                           geom::pseudo_hyperbolic(est.witness, a) < 0.05 &&
                           secs < 1.0;
      if (!case_ok && ok) {
        ok = false;
        detail = "alpha=" + std::to_string(alpha) + " |a|=" +
                 std::to_string(a.abs()) + " value=" + std::to_string(est.value) +
                 " secs=" + std::to_string(secs);
      }
    }
  }
  report(3, "extremal seminorm equals 2 with witness at a", ok, detail);
}

void criterion_4_pullback_identity() {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::vector<AnalyticMap> phis = {
      AnalyticMap::scale(AnalyticMap::identity(), Complex{0.5, 0.0}),
      AnalyticMap::polynomial({{0, 0}, {0, 0}, {1, 0}}),
      AnalyticMap::moebius(DiskPoint{0.4, 0.2}),
      AnalyticMap::blaschke({DiskPoint{0.5, 0.0}, DiskPoint{0.0, -0.3}})};
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const AnalyticMap& phi = phis[static_cast<std::size_t>(i) % phis.size()];
    const HarmonicMap f{random_poly(rng, 4), random_poly(rng, 4)};
    const double alpha = (i % 2) ? 1.0 : 1.6;
    const op::TauParams p(phi, Alpha{alpha});
    const DiskPoint z = random_point(rng);

    const double lhs =
        norms::local_intensity(op::pullback(phi, f), Alpha{alpha}, z);
    const DiskPoint w{phi.eval(z)};
    const auto dw = f.wirtinger(w);
    const double rhs = op::tau(p, z) *
                       std::pow(1.0 - std::norm(w.value()), alpha) *
                       (std::abs(dw.fz) + std::abs(dw.fzbar));
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::max(lhs, rhs)));
  }
  report(4, "pullback chain-rule intensity identity", worst < 1e-10,
         "max relative error " + std::to_string(worst));
}

void criterion_5_classification_table() {
  using op::Verdict;
  bool ok = true;
  std::string detail;
  auto expect = [&](const op::ClassificationReport& rep, const char* which,
                    const std::string& name, Verdict v) {
    if (rep.verdicts.at(name) != v && ok) {
      ok = false;
      detail = std::string(which) + " " + name + " = " +
               op::to_string(rep.verdicts.at(name));
    }
  };
  auto no_inconclusive = [&](const op::ClassificationReport& rep, const char* which) {
    for (const auto& [name, v] : rep.verdicts)
      if (v == Verdict::Inconclusive && ok) {
        ok = false;
        detail = std::string(which) + " " + name + " inconclusive";
      }
  };

  const auto id_rep = op::classify(op::TauParams(AnalyticMap::identity(), Alpha{1.0}));
  expect(id_rep, "identity", "bounded_HB_to_HB", Verdict::Yes);
  expect(id_rep, "identity", "compact_HB_to_HB", Verdict::No);
  no_inconclusive(id_rep, "identity");

  const auto half_rep = op::classify(op::TauParams(
      AnalyticMap::scale(AnalyticMap::identity(), Complex{0.5, 0.0}), Alpha{1.0}));
  expect(half_rep, "scale", "compact_HB_to_HB", Verdict::Yes);
  expect(half_rep, "scale", "bounded_HB_to_HB0", Verdict::Yes);
  no_inconclusive(half_rep, "scale");

  const auto sq_rep = op::classify(
      op::TauParams(AnalyticMap::polynomial({{0, 0}, {0, 0}, {1, 0}}), Alpha{1.0}));
  expect(sq_rep, "square", "bounded_HB_to_HB", Verdict::Yes);
  expect(sq_rep, "square", "compact_HB_to_HB", Verdict::No);
  expect(sq_rep, "square", "bounded_HB_to_HB0", Verdict::No);
  no_inconclusive(sq_rep, "square");
  if (std::abs(sq_rep.tau_sup.value - 1.0) >= 1e-3 && ok) {
    ok = false;
    detail = "square tau_sup " + std::to_string(sq_rep.tau_sup.value);
  }

  const auto psi_rep = op::classify(
      op::TauParams(AnalyticMap::moebius(DiskPoint{0.5, 0.0}), Alpha{1.0}));
  expect(psi_rep, "automorphism", "bounded_HB_to_HB", Verdict::Yes);
  expect(psi_rep, "automorphism", "compact_HB_to_HB", Verdict::No);
  no_inconclusive(psi_rep, "automorphism");
  if (std::abs(psi_rep.tau_sup.value - 1.0) >= 1e-9 && ok) {
    ok = false;
    detail = "automorphism tau_sup " + std::to_string(psi_rep.tau_sup.value);
  }

  report(5, "classification matches analytic ground truth", ok, detail);
}

void criterion_6_closed_range() {
  bool ok = true;
  std::string detail;
  auto flag = [&](bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  };

  const op::TauParams sq(AnalyticMap::polynomial({{0, 0}, {0, 0}, {1, 0}}),
                         Alpha{1.0});
  const auto sq_rep = range::closed_range_report(sq, {0.9});
  flag(!sq_rep.per_c.empty(), "square report empty");
  if (!sq_rep.per_c.empty()) {
    const auto& ev = sq_rep.per_c.front();
    flag(std::abs(ev.omega_min_radius - 0.6268) < 0.005,
         "omega threshold radius " + std::to_string(ev.omega_min_radius));
    flag(std::abs(ev.g_min_radius - 0.3929) < 0.01,
         "G inner radius " + std::to_string(ev.g_min_radius));
    bool annulus_045 = false;
    for (const auto& [r0, verdict] : ev.annulus_sweep)
      if (std::abs(r0 - 0.45) < 1e-9 && verdict == range::AnnulusVerdict::Holds)
        annulus_045 = true;
    flag(annulus_045, "square annulus r0=0.45 does not hold");
  }

  const auto half_rep = range::closed_range_report(
      op::TauParams(AnalyticMap::scale(AnalyticMap::identity(), Complex{0.5, 0.0}),
                    Alpha{1.0}),
      {0.1, 0.3, 0.5, 0.7});
  flag(half_rep.verdict == range::RangeVerdict::EvidenceAgainst,
       std::string("scale verdict ") + range::to_string(half_rep.verdict));

  const auto id_rep = range::closed_range_report(
      op::TauParams(AnalyticMap::identity(), Alpha{1.0}), {0.5});
  flag(id_rep.verdict == range::RangeVerdict::EvidenceFor,
       std::string("identity verdict ") + range::to_string(id_rep.verdict));

  report(6, "closed-range evidence", ok, detail);
}

void criterion_7_growth_bound() {
  std::mt19937 rng(707);
  int violations = 0;
  int tested = 0;
  for (int i = 0; i < 1000; ++i) {
    const HarmonicMap f{random_poly(rng, 6), random_poly(rng, 6)};
    const auto sn = norms::seminorm(f, Alpha{1.0});
    if (sn.status != sup::SupStatus::Converged) continue;
    ++tested;
    const DiskPoint z = random_point(rng, 0.97);
    const double lhs = std::abs(f.eval(z) - f.eval(DiskPoint{0.0, 0.0}));
    if (lhs > norms::growth_bound(sn.value, 1.0, z.abs()) * (1.0 + 1e-9))
      ++violations;
  }
  const double ln2_factor = norms::growth_bound(1.0, 1.0, 0.5);
  const bool factor_ok = std::abs(ln2_factor - std::log(2.0)) < 1e-12;
  report(7, "growth bound", violations == 0 && tested > 900 && factor_ok,
         std::to_string(violations) + " violations in " + std::to_string(tested) +
             " trials");
}

void criterion_8_seminorm_oracle() {
  std::mt19937 rng(808);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const HarmonicMap f{random_poly(rng, 6), random_poly(rng, 6)};
    const auto est = norms::seminorm(f, Alpha{1.0});

    double oracle = norms::local_intensity(f, Alpha{1.0}, DiskPoint{0.0, 0.0});
    const int n_r = 700, n_t = 1450;  // ~10^6 points, radii to 1 - 1e-4
    for (int i = 1; i <= n_r; ++i) {
      const double r = (1.0 - 1e-4) * i / n_r;
      for (int j = 0; j < n_t; ++j) {
        const double t = 2.0 * std::numbers::pi * j / n_t;
        oracle = std::max(
            oracle, norms::local_intensity(
                        f, Alpha{1.0}, DiskPoint{r * std::cos(t), r * std::sin(t)}));
      }
    }
    worst = std::max(worst, std::abs(est.value - oracle) / oracle);
  }
  report(8, "adaptive seminorm matches dense-grid oracle", worst < 1e-3,
         "max relative deviation " + std::to_string(worst));
}

// --- criterion 9: the CLI itself ---

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  CliRun run;
  const std::string cmd = std::string(BLOCHCOMP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    run.output.append(buffer, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) run.exit_code = WEXITSTATUS(status);
  return run;
}

void criterion_9_cli_contract() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "blochcomp_acceptance";
  fs::create_directories(dir);
  auto write = [&](const char* name, const char* text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };

  const std::string sq =
      write("square.json", R"({"map":{"type":"poly","coeffs":[[0,0],[0,0],[1,0]]}})");
  const std::string bad = write("bad.json", R"({"map":{"type":"poly"}})");
  const std::string borderline =
      write("borderline.json", R"({"map":{"type":"poly","coeffs":[0.5,0.5]}})");

  bool ok = true;
  std::string detail;

  const CliRun first = run_cli("tau-profile --spec " + sq);
  const CliRun second = run_cli("tau-profile --spec " + sq);
  if (first.exit_code != 0 || first.output.empty() ||
      first.output != second.output) {
    ok = false;
    detail = "tau-profile not deterministic (exit " +
             std::to_string(first.exit_code) + ")";
  }

  const CliRun invalid = run_cli("classify --spec " + bad);
  if (ok && invalid.exit_code != 1) {
    ok = false;
    detail = "invalid spec exit " + std::to_string(invalid.exit_code);
  }

  const CliRun inconclusive =
      run_cli("classify --spec " + borderline + " --kmax 4");
  if (ok && inconclusive.exit_code != 2) {
    ok = false;
    detail = "tiny-budget exit " + std::to_string(inconclusive.exit_code);
  }

  const CliRun definite = run_cli("classify --spec " + sq);
  if (ok && definite.exit_code != 0) {
    ok = false;
    detail = "definite classify exit " + std::to_string(definite.exit_code);
  }

  report(9, "CLI determinism and exit-code contract", ok, detail);
}

}  // namespace

int main() {
  criterion_1_geometry();
  criterion_2_automorphism_weight();
  criterion_3_extremal_seminorm();
  criterion_4_pullback_identity();
  criterion_5_classification_table();
  criterion_6_closed_range();
  criterion_7_growth_bound();
  criterion_8_seminorm_oracle();
  criterion_9_cli_contract();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
