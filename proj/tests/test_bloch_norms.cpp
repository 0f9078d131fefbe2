#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bloch_norms.hpp"

using namespace blochcomp;
using namespace blochcomp::norms;
using fn::AnalyticMap;
using fn::HarmonicMap;
using geom::Complex;
using geom::DiskPoint;

namespace {

const AnalyticMap kId = AnalyticMap::identity();
const AnalyticMap kZero = AnalyticMap::constant({0, 0});

DiskPoint random_point(std::mt19937& rng, double r_max = 0.9) {
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

// Brute-force dense polar grid sup of the intensity, about 10^6 points.
double dense_grid_seminorm(const HarmonicMap& f, Alpha alpha) {
  double best = local_intensity(f, alpha, DiskPoint{0.0, 0.0});
  const int n_r = 700;
  for (int i = 1; i <= n_r; ++i) {
    const double r = (1.0 - 1e-4) * i / n_r;
    const int n_t = 1500;
    for (int j = 0; j < n_t; ++j) {
      const double t = 2.0 * std::numbers::pi * j / n_t;
      best = std::max(best, local_intensity(
                                f, alpha,
                                DiskPoint{r * std::cos(t), r * std::sin(t)}));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("alpha must be positive") {
  CHECK_THROWS_AS(Alpha{0.0}, std::invalid_argument);
  CHECK_THROWS_AS(Alpha{-1.0}, std::invalid_argument);
  CHECK(Alpha{2.5}.value == 2.5);
}

TEST_CASE("local intensity fixed values") {
  CHECK(local_intensity({kId, kZero}, Alpha{1.0}, DiskPoint{0.0, 0.0}) == 1.0);
  CHECK(local_intensity({kId, kId}, Alpha{1.0}, DiskPoint{0.0, 0.0}) == 2.0);

  // Extremal pair: intensity(z) = 2 (1 - |psi_a(z)|^2)^alpha.
  std::mt19937 rng(11);
  for (double alpha : {0.7, 1.0, 2.0}) {
    const DiskPoint a = random_point(rng, 0.8);
    const AnalyticMap phi_a = AnalyticMap::extremal(a, alpha);
    const HarmonicMap f{phi_a, phi_a};
    for (int i = 0; i < 60; ++i) {
      const DiskPoint z = random_point(rng);
      const double rho = geom::pseudo_hyperbolic(a, z);
      const double expect = 2.0 * std::pow(1.0 - rho * rho, alpha);
      CHECK(local_intensity(f, Alpha{alpha}, z) ==
            doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("seminorm fixed cases") {
  const auto id_est = seminorm({kId, kZero}, Alpha{1.0});
  CHECK(id_est.status == sup::SupStatus::Converged);
  CHECK(id_est.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(id_est.witness.abs() < 1e-6);

  const AnalyticMap phi_a = AnalyticMap::extremal(DiskPoint{0.5, 0.0}, 1.0);
  const auto ext_est = seminorm({phi_a, phi_a}, Alpha{1.0});
  CHECK(ext_est.status == sup::SupStatus::Converged);
  CHECK(ext_est.value == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(geom::pseudo_hyperbolic(ext_est.witness, DiskPoint{0.5, 0.0}) < 0.05);
}

TEST_CASE("seminorm of a truncated log series matches a dense grid") {
  // h = sum_{n>=1} z^n / n, the degree-200 truncation of log(1/(1-z)).
  std::vector<Complex> coeffs(201, Complex{0.0, 0.0});
  for (int n = 1; n <= 200; ++n) coeffs[static_cast<std::size_t>(n)] = {1.0 / n, 0.0};
  const HarmonicMap f{AnalyticMap::power_series(coeffs, 200), kZero};
  const auto est = seminorm(f, Alpha{1.0});
  CHECK(est.status == sup::SupStatus::Converged);
  const double oracle = dense_grid_seminorm(f, Alpha{1.0});
  CHECK(est.value == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("norm adds the value at zero") {
  CHECK(norm({kId, kZero}, Alpha{1.0}).value == doctest::Approx(1.0).epsilon(1e-9));
  const auto c3 = norm({AnalyticMap::constant({3, 0}), kZero}, Alpha{1.0});
  CHECK(c3.value == doctest::Approx(3.0).epsilon(1e-12));
  const AnalyticMap phi_a = AnalyticMap::extremal(DiskPoint{0.5, 0.0}, 1.0);
  CHECK(norm({phi_a, phi_a}, Alpha{1.0}).value ==
        doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("little Bloch profile") {
  const auto radii = sup::default_profile_radii();
  const HarmonicMap sq{AnalyticMap::polynomial({{0, 0}, {0, 0}, {1, 0}}), kZero};
  auto profile = little_bloch_profile(sq, Alpha{1.0}, radii);
  CHECK(profile.verdict == sup::DecayVerdict::DecaysToZero);
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double r = radii[k];
    CHECK(profile.values[k] ==
          doctest::Approx((1.0 - r * r) * 2.0 * r).epsilon(1e-9));
  }

  CHECK(little_bloch_profile({kId, kZero}, Alpha{1.0}, radii).verdict ==
        sup::DecayVerdict::DecaysToZero);

  // A derivative singular at the boundary does not decay: h' = (1-z)^(-1)
  // gives circle maxima (1+r) -> 2 along the ray through the singularity.
  const AnalyticMap singular = AnalyticMap::boundary_power(Complex{1.0, 0.0}, 1.0);
  const auto stays = little_bloch_profile({singular, kZero}, Alpha{1.0}, radii);
  CHECK(stays.verdict == sup::DecayVerdict::Stabilizes);
  CHECK(stays.values.back() == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("growth integral closed forms") {
  CHECK(growth_integral(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(growth_integral(2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(0.5 * growth_integral(1.0, 0.5) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  // Numerical quadrature oracle for a non-special alpha.
  const double alpha = 1.7, s = 0.6;
  double quad = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) / n;
    quad += std::pow(1.0 - s * t, -alpha) / n;
  }
  CHECK(growth_integral(alpha, s) == doctest::Approx(quad).epsilon(1e-8));

  // Monotone in |z| and in the seminorm.
  CHECK(growth_bound(1.0, 1.0, 0.6) > growth_bound(1.0, 1.0, 0.5));
  CHECK(growth_bound(2.0, 1.0, 0.5) > growth_bound(1.0, 1.0, 0.5));
}

TEST_CASE("growth bound dominates |f(z) - f(0)| on random functions") {
  std::mt19937 rng(777);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const HarmonicMap f{random_poly(rng, 6), random_poly(rng, 6)};
    const auto sn = seminorm(f, Alpha{1.0});
    if (sn.status != sup::SupStatus::Converged) continue;
    const DiskPoint z = random_point(rng, 0.97);
    const double lhs =
        std::abs(f.eval(z) - f.eval(DiskPoint{0.0, 0.0}));
    const double bound = growth_bound(sn.value, 1.0, z.abs());
    if (lhs > bound * (1.0 + 1e-9)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("seminorm algebraic properties") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 10; ++i) {
    const HarmonicMap f{random_poly(rng, 5), random_poly(rng, 5)};
    const HarmonicMap g{random_poly(rng, 5), random_poly(rng, 5)};
    const double sf = seminorm(f, Alpha{1.0}).value;
    const double sg = seminorm(g, Alpha{1.0}).value;

    // Homogeneity.
    const Complex c{1.5, -2.0};
    const HarmonicMap cf{AnalyticMap::scale(f.h, c),
                         AnalyticMap::scale(f.g, std::conj(c))};
    CHECK(seminorm(cf, Alpha{1.0}).value ==
          doctest::Approx(std::abs(c) * sf).epsilon(1e-3));

    // Triangle inequality on estimates.
    const HarmonicMap sum{
        AnalyticMap::affine({{Complex{1, 0}, f.h}, {Complex{1, 0}, g.h}}),
        AnalyticMap::affine({{Complex{1, 0}, f.g}, {Complex{1, 0}, g.g}})};
    CHECK(seminorm(sum, Alpha{1.0}).value <=
          sf + sg + 2e-4 * (sf + sg) + 1e-12);

    // Estimate dominates sampled intensities; trace is below the final value.
    const auto est = seminorm(f, Alpha{1.0});
    for (int j = 0; j < 50; ++j)
      CHECK(est.value >=
            local_intensity(f, Alpha{1.0}, random_point(rng)) - 1e-3);
    for (const auto& entry : est.trace) CHECK(entry.level_sup <= est.value + 1e-15);
  }
}

TEST_CASE("extremal pair check") {
  const auto grid = geom::hyperbolic_lattice(0.95, 0.3);

  const auto zeros = extremal_pair_check(kZero, kZero, Alpha{1.0}, grid);
  CHECK(zeros.min_ratio == 0.0);

  // Origin-only grid: the ratio is |h'(0)| + |g'(0)|.
  const std::vector<DiskPoint> origin = {DiskPoint{0.0, 0.0}};
  const auto at0 = extremal_pair_check(AnalyticMap::polynomial({{0, 0}, {2, 0}}),
                                       kId, Alpha{1.0}, origin);
  CHECK(at0.min_ratio == doctest::Approx(3.0).epsilon(1e-12));

  // h' = (1-z)^(-alpha): equality along the positive radius.
  const double alpha = 1.3;
  const AnalyticMap h = AnalyticMap::boundary_power(Complex{1.0, 0.0}, alpha);
  std::vector<DiskPoint> ray;
  for (int i = 0; i < 40; ++i) ray.push_back(DiskPoint{0.97 * i / 39.0, 0.0});
  const auto on_ray = extremal_pair_check(h, kZero, Alpha{alpha}, ray);
  CHECK(on_ray.min_ratio == doctest::Approx(1.0).epsilon(1e-10));
}
