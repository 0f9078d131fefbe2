#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "disk_geometry.hpp"

namespace blochcomp::fn {

using geom::Complex;
using geom::DiskPoint;

/// Thrown when an evaluation leaves the domain of a node that requires a disk
/// argument (e.g. a composition pushes a point to modulus >= 1).
class DomainError : public std::runtime_error {
public:
  DomainError(std::string what, Complex witness)
      : std::runtime_error(std::move(what)), witness_(witness) {}
  Complex witness() const { return witness_; }

private:
  Complex witness_;
};

/// Immutable expression tree for an analytic function on the unit disk, with
/// exact structural differentiation (product and chain rules; closed forms for
/// the Moebius and antiderivative-power nodes).
class AnalyticMap {
public:
  static AnalyticMap polynomial(std::vector<Complex> coeffs);
  static AnalyticMap identity();
  static AnalyticMap constant(Complex c);
  static AnalyticMap moebius(DiskPoint a, Complex rotation = Complex{1.0, 0.0});
  static AnalyticMap blaschke(std::vector<DiskPoint> zeros,
                              Complex rotation = Complex{1.0, 0.0});
  static AnalyticMap power_series(std::vector<Complex> coeffs, int truncation_degree);
  static AnalyticMap scale(AnalyticMap inner, Complex factor);
  static AnalyticMap compose(AnalyticMap outer, AnalyticMap inner);
  static AnalyticMap product(AnalyticMap left, AnalyticMap right);
  static AnalyticMap affine(std::vector<std::pair<Complex, AnalyticMap>> terms);

  /// The extremal map phi_a: phi_a(0) = 0 and phi_a'(z) = (psi_a'(z))^alpha,
  /// single-valued on D because Re(1 - conj(a) z) > 0 there.
  static AnalyticMap extremal(DiskPoint a, double alpha);

  /// Primitive of (1 - conj(omega) z)^(-beta) vanishing at 0, for unimodular
  /// omega. Represents derivatives that blow up at one boundary point.
  static AnalyticMap boundary_power(Complex omega, double beta);

  Complex eval(Complex z) const;
  Complex deriv(Complex z) const;
  Complex eval(DiskPoint z) const { return eval(z.value()); }
  Complex deriv(DiskPoint z) const { return deriv(z.value()); }

  /// Degree when the tree is polynomial-like (used to seed preimage solves),
  /// otherwise 1.
  int degree_hint() const;

  std::string describe() const;

  struct Node;

private:
  friend struct NodeAccess;
  explicit AnalyticMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Tail bound for a power series truncated at `degree`, assuming |c_n| <=
/// coeff_bound for the dropped coefficients: coeff_bound r^(degree+1) / (1-r).
double power_series_tail_bound(int degree, double coeff_bound, double r);

enum class SelfMapStatus { Verified, Violated, Inconclusive };

struct SelfMapVerdict {
  SelfMapStatus status = SelfMapStatus::Inconclusive;
  double max_modulus_seen = 0.0;
  Complex witness{0.0, 0.0};
  // Set when the sampled maximum modulus approaches 1 (inner-function-like
  // behaviour); the map is still reported Verified since all samples stay in D.
  bool boundary_contact = false;
};

/// Maximum-modulus screening on circles |z| = r_k. A numerical screen, not a
/// proof: Violated is definitive, Verified means no sample reached 1 and the
/// radial trend does not extrapolate past 1.
SelfMapVerdict validate_self_map(const AnalyticMap& m, std::span<const double> radii,
                                 long angular_count);
SelfMapVerdict validate_self_map(const AnalyticMap& m);

/// Harmonic f = h + conj(g) with h, g analytic; f_z = h', f_zbar = conj(g').
struct HarmonicMap {
  AnalyticMap h;
  AnalyticMap g;

  Complex eval(DiskPoint z) const { return h.eval(z) + std::conj(g.eval(z)); }

  struct Wirtinger {
    Complex fz;
    Complex fzbar;
  };
  Wirtinger wirtinger(DiskPoint z) const {
    return {h.deriv(z), std::conj(g.deriv(z))};
  }
};

}  // namespace blochcomp::fn
