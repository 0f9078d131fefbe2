#pragma once

#include <map>
#include <string>

#include "bloch_norms.hpp"

namespace blochcomp::op {

using fn::AnalyticMap;
using fn::HarmonicMap;
using geom::Complex;
using geom::DiskPoint;
using norms::Alpha;

/// A validated analytic self-map together with the Bloch exponent. Throws if
/// the maximum-modulus screen finds |phi| >= 1.
struct TauParams {
  AnalyticMap phi;
  Alpha alpha;
  fn::SelfMapVerdict validation;

  TauParams(AnalyticMap phi_, Alpha alpha_);
};

/// tau_{phi,alpha}(z) = (1-|z|^2)^alpha |phi'(z)| / (1-|phi(z)|^2)^alpha.
double tau(const TauParams& p, DiskPoint z);

sup::SupEstimate tau_sup(const TauParams& p, const sup::SupBudget& budget = {});

/// Circle maxima of tau as |z| -> 1 (criterion for mapping into the little
/// Bloch space).
sup::DecayProfile boundary_profile_by_base(const TauParams& p,
                                           const std::vector<double>& radii);

/// Sup of tau over {z : |phi(z)| > 1 - delta} for a decreasing delta list
/// (compactness criterion). When phi(D) stays away from the boundary the
/// approach region is empty and the limit condition holds vacuously.
sup::DecayProfile boundary_profile_by_image(const TauParams& p,
                                            const std::vector<double>& deltas,
                                            int grid_k_max = 13);

/// Boundary decay of (1-|z|^2)^alpha |phi'(z)|: phi's own membership in the
/// analytic little Bloch space.
sup::DecayProfile phi_little_bloch_profile(const TauParams& p,
                                           const std::vector<double>& radii);

/// C_phi f = f o phi, componentwise on the canonical decomposition.
HarmonicMap pullback(const AnalyticMap& phi, const HarmonicMap& f);

enum class Verdict { Yes, No, Inconclusive };
const char* to_string(Verdict v);

inline const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "bounded_HB_to_HB",   "bounded_HB0_to_HB",    "bounded_HB_to_HB0",
      "bounded_HB0_to_HB0", "compact_HB_to_HB",     "compact_HB0_variants"};
  return names;
}

struct ClassificationReport {
  sup::SupEstimate tau_sup;
  sup::DecayProfile boundary_by_base;
  sup::DecayProfile boundary_by_image;
  sup::DecayProfile phi_little_bloch;
  std::map<std::string, Verdict> verdicts;

  bool any_definite() const;
  bool all_inconclusive() const { return !any_definite(); }
};

/// Deterministic decision table over the three profiles and the tau supremum.
/// Yes/No are issued only under explicit trace conditions; everything else is
/// Inconclusive.
ClassificationReport classify(const TauParams& p, const sup::SupBudget& budget = {},
                              int profile_k_max = 14);

}  // namespace blochcomp::op
