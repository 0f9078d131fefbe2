#pragma once

#include "comp_operator.hpp"

namespace blochcomp::range {

using fn::AnalyticMap;
using fn::HarmonicMap;
using geom::Complex;
using geom::DiskPoint;
using norms::Alpha;
using op::TauParams;

struct GridPoint {
  Complex z;
  double tau;
};

/// Boundary-refined polar grid with tau evaluated once per point; level-set
/// samples for different thresholds c are filters over the same grid.
struct TauGrid {
  std::vector<GridPoint> points;
  std::string descriptor;
};

struct GridSpec {
  double linear_dr = 0.0025;  // fine radial resolution for level-set boundaries
  double linear_r_max = 0.9;
  int dyadic_k_min = 4;  // 1 - 2^-k circles past linear_r_max
  int dyadic_k_max = 13;
  double angular_quality = 0.5;
  long max_points_per_circle = 8192;
};

TauGrid evaluate_tau_grid(const TauParams& p, const GridSpec& spec = {});

struct LevelSetSample {
  double c = 0.0;
  std::vector<GridPoint> points;  // every stored point has tau >= c
  std::string grid_descriptor;
};

LevelSetSample omega_sample(const TauParams& p, double c, const TauGrid& grid);
LevelSetSample omega_sample(const TauParams& p, double c, const GridSpec& spec = {});

struct ImagePoint {
  Complex w;         // phi(preimage)
  Complex preimage;  // member of the level-set sample
};

struct ImageSetSample {
  std::vector<ImagePoint> points;
};

ImageSetSample g_sample(const TauParams& p, const LevelSetSample& omega);

struct NetCheckResult {
  double r = 0.0;
  long probes_total = 0;
  long probes_covered = 0;
  double worst_gap = 1.0;  // sentinel 1 when the sample is empty
  Complex worst_probe{0.0, 0.0};

  bool full_coverage() const { return probes_covered == probes_total; }
};

/// Per-probe min pseudohyperbolic distance to the image sample; covered iff
/// the distance is < r.
NetCheckResult net_check(const ImageSetSample& g, double r,
                         std::span<const DiskPoint> probes);

enum class AnnulusVerdict { Holds, Fails, Inconclusive };
const char* to_string(AnnulusVerdict v);

struct AnnulusCheckResult {
  AnnulusVerdict verdict = AnnulusVerdict::Inconclusive;
  std::vector<Complex> failures;  // targets with counterevidence
  long probes = 0;
  long accepted = 0;
  long unresolved = 0;  // solver budget exhausted without counterevidence
};

struct AnnulusBudget {
  int probes_per_ring = 16;
  int rings = 4;
  double r_max = 0.98;
  int max_newton_iters = 60;
};

/// For targets w in {r0 < |w| <= r_max}, attempts to solve phi(z) = w by
/// damped Newton from multi-start seeds, accepting roots in D with
/// tau(z) >= c. Solver non-convergence is recorded, never thrown.
AnnulusCheckResult annulus_check(const TauParams& p, double c, double r0,
                                 const AnnulusBudget& budget = {});

struct SamplingEstimate {
  double S_est = 0.0;  // min over the family of (sup_G intensity)/seminorm
  int minimizer_index = -1;
  int family_size = 0;
  int skipped = 0;  // members with zero or non-converged seminorm
  std::vector<double> ratios;
};

/// Upper bound on the sampling constant of the image sample over the tested
/// family (the true constant quantifies over all of HB(alpha)).
SamplingEstimate sampling_constant_estimate(const ImageSetSample& g, Alpha alpha,
                                            const std::vector<HarmonicMap>& family,
                                            const sup::SupBudget& budget = {});

struct BoundedBelowEstimate {
  double eps_est = 0.0;  // min over the family of norm(C_phi f)/norm(f)
  int minimizer_index = -1;
  int skipped = 0;
  std::vector<double> ratios;
};

BoundedBelowEstimate bounded_below_estimate(const TauParams& p,
                                            const std::vector<HarmonicMap>& family,
                                            const sup::SupBudget& budget = {});

/// Extremal maps phi_a + conj(phi_a) on a hyperbolic lattice of centers plus a
/// boundary-near ring and low monomials; these are the critical witnesses for
/// the closed-range criteria.
std::vector<HarmonicMap> default_test_family(double alpha);

enum class RangeVerdict { EvidenceFor, EvidenceAgainst, Inconclusive };
const char* to_string(RangeVerdict v);

struct PerLevelEvidence {
  double c = 0.0;
  std::size_t omega_count = 0;
  double omega_min_radius = 1.0;  // min |z| over the level-set sample
  double g_min_radius = 1.0;      // min |w| over the image sample
  double derived_r = 0.0;         // net radius from the constructive estimate
  NetCheckResult net;
  std::vector<std::pair<double, AnnulusVerdict>> annulus_sweep;  // (r0, verdict)
};

struct ClosedRangeReport {
  RangeVerdict verdict = RangeVerdict::Inconclusive;
  sup::SupEstimate tau_sup;  // K
  SamplingEstimate sampling;
  BoundedBelowEstimate bounded_below;
  std::vector<PerLevelEvidence> per_c;
};

struct ClosedRangeBudget {
  sup::SupBudget sup;
  GridSpec grid;
  AnnulusBudget annulus;
  std::vector<double> annulus_r0_sweep = {0.3, 0.45, 0.6, 0.75};
  double probe_r_max = 0.995;
  double probe_step = 0.2;
  // Probe ring hugging the boundary; it defeats nets whose image sample stays
  // bounded away from the unit circle.
  double sentinel_radius = 1.0 - 1e-6;
  int sentinel_count = 32;
  double eps_threshold = 0.1;  // regression pin for EvidenceAgainst
};

/// Aggregates the sampling-theorem evidence over a grid of level thresholds.
/// EvidenceFor: some c passes an annulus check. EvidenceAgainst: the
/// bounded-below estimate is small and no c yields net coverage. Everything
/// else is Inconclusive.
ClosedRangeReport closed_range_report(const TauParams& p,
                                      const std::vector<double>& c_grid,
                                      const ClosedRangeBudget& budget = {});

}  // namespace blochcomp::range
