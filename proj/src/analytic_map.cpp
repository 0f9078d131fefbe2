#include "analytic_map.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

namespace blochcomp::fn {

namespace {

constexpr double kUnitTol = 1e-9;

void require_in_disk(Complex z, const char* node) {
  if (!(std::abs(z) < 1.0 - geom::kBoundaryMargin))
    throw DomainError(std::string(node) + ": argument left the unit disk", z);
}

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

struct Poly {
  std::vector<Complex> coeffs;  // c0 + c1 z + ...
};
struct Moebius {
  DiskPoint a;
  Complex rotation;
};
struct Blaschke {
  std::vector<DiskPoint> zeros;
  Complex rotation;
};
struct Series {
  std::vector<Complex> coeffs;
  int truncation_degree;
};
struct Scale {
  std::shared_ptr<const AnalyticMap::Node> inner;
  Complex factor;
};
struct Compose {
  std::shared_ptr<const AnalyticMap::Node> outer;
  std::shared_ptr<const AnalyticMap::Node> inner;
};
struct Product {
  std::shared_ptr<const AnalyticMap::Node> left;
  std::shared_ptr<const AnalyticMap::Node> right;
};
struct Affine {
  std::vector<std::pair<Complex, std::shared_ptr<const AnalyticMap::Node>>> terms;
};
// Primitive of (psi_a')^alpha vanishing at 0, principal branch throughout.
struct AntiderivPower {
  DiskPoint a;
  double alpha;
};
struct BoundaryPower {
  Complex omega;  // unimodular
  double beta;
};

struct AnalyticMap::Node {
  std::variant<Poly, Moebius, Blaschke, Series, Scale, Compose, Product, Affine,
               AntiderivPower, BoundaryPower>
      v;
};

namespace {

using Node = AnalyticMap::Node;

Complex eval_node(const Node& n, Complex z);
Complex deriv_node(const Node& n, Complex z);

Complex eval_node(const Node& n, Complex z) {
  return std::visit(
      [&](const auto& k) -> Complex {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Poly>) {
          return horner(k.coeffs, z);
        } else if constexpr (std::is_same_v<T, Moebius>) {
          require_in_disk(z, "moebius");
          const Complex a = k.a.value();
          return k.rotation * (a - z) / (1.0 - std::conj(a) * z);
        } else if constexpr (std::is_same_v<T, Blaschke>) {
          require_in_disk(z, "blaschke");
          Complex acc = k.rotation;
          for (const DiskPoint& zero : k.zeros) {
            const Complex a = zero.value();
            acc *= (a - z) / (1.0 - std::conj(a) * z);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Series>) {
          return horner(k.coeffs, z);
        } else if constexpr (std::is_same_v<T, Scale>) {
          return k.factor * eval_node(*k.inner, z);
        } else if constexpr (std::is_same_v<T, Compose>) {
          return eval_node(*k.outer, eval_node(*k.inner, z));
        } else if constexpr (std::is_same_v<T, Product>) {
          return eval_node(*k.left, z) * eval_node(*k.right, z);
        } else if constexpr (std::is_same_v<T, Affine>) {
          Complex acc{0.0, 0.0};
          for (const auto& [w, m] : k.terms) acc += w * eval_node(*m, z);
          return acc;
        } else if constexpr (std::is_same_v<T, AntiderivPower>) {
          require_in_disk(z, "extremal");
          const Complex a = k.a.value();
          const double alpha = k.alpha;
          const Complex phase{std::cos(std::numbers::pi * alpha),
                              std::sin(std::numbers::pi * alpha)};
          const Complex pref = std::pow(1.0 - std::norm(a), alpha) * phase;
          if (std::abs(a) == 0.0) return pref * z;
          const Complex ab = std::conj(a);
          const Complex lg = std::log(1.0 - ab * z);  // Re(1 - ab z) > 0 on D
          if (std::abs(2.0 * alpha - 1.0) < 1e-12) return pref * (-lg / ab);
          return pref * (std::exp((1.0 - 2.0 * alpha) * lg) - 1.0) /
                 (ab * (2.0 * alpha - 1.0));
        } else {
          static_assert(std::is_same_v<T, BoundaryPower>);
          require_in_disk(z, "boundary_power");
          const Complex ob = std::conj(k.omega);
          const Complex lg = std::log(1.0 - ob * z);
          if (std::abs(k.beta - 1.0) < 1e-12) return -lg / ob;
          return (std::exp((1.0 - k.beta) * lg) - 1.0) / (ob * (k.beta - 1.0));
        }
      },
      n.v);
}

Complex deriv_node(const Node& n, Complex z) {
  return std::visit(
      [&](const auto& k) -> Complex {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Poly>) {
          Complex acc{0.0, 0.0};
          for (std::size_t i = k.coeffs.size(); i-- > 1;)
            acc = acc * z + static_cast<double>(i) * k.coeffs[i];
          return acc;
        } else if constexpr (std::is_same_v<T, Moebius>) {
          require_in_disk(z, "moebius");
          const Complex a = k.a.value();
          const Complex d = 1.0 - std::conj(a) * z;
          return k.rotation * (std::norm(a) - 1.0) / (d * d);
        } else if constexpr (std::is_same_v<T, Blaschke>) {
          require_in_disk(z, "blaschke");
          // Sum over j of psi_j' prod_{k != j} psi_k.
          const std::size_t m = k.zeros.size();
          Complex total{0.0, 0.0};
          for (std::size_t j = 0; j < m; ++j) {
            const Complex aj = k.zeros[j].value();
            const Complex dj = 1.0 - std::conj(aj) * z;
            Complex term = (std::norm(aj) - 1.0) / (dj * dj);
            for (std::size_t i = 0; i < m; ++i) {
              if (i == j) continue;
              const Complex ai = k.zeros[i].value();
              term *= (ai - z) / (1.0 - std::conj(ai) * z);
            }
            total += term;
          }
          return k.rotation * total;
        } else if constexpr (std::is_same_v<T, Series>) {
          Complex acc{0.0, 0.0};
          for (std::size_t i = k.coeffs.size(); i-- > 1;)
            acc = acc * z + static_cast<double>(i) * k.coeffs[i];
          return acc;
        } else if constexpr (std::is_same_v<T, Scale>) {
          return k.factor * deriv_node(*k.inner, z);
        } else if constexpr (std::is_same_v<T, Compose>) {
          const Complex w = eval_node(*k.inner, z);
          return deriv_node(*k.outer, w) * deriv_node(*k.inner, z);
        } else if constexpr (std::is_same_v<T, Product>) {
          return deriv_node(*k.left, z) * eval_node(*k.right, z) +
                 eval_node(*k.left, z) * deriv_node(*k.right, z);
        } else if constexpr (std::is_same_v<T, Affine>) {
          Complex acc{0.0, 0.0};
          for (const auto& [w, m] : k.terms) acc += w * deriv_node(*m, z);
          return acc;
        } else if constexpr (std::is_same_v<T, AntiderivPower>) {
          require_in_disk(z, "extremal");
          const Complex a = k.a.value();
          const double alpha = k.alpha;
          const Complex phase{std::cos(std::numbers::pi * alpha),
                              std::sin(std::numbers::pi * alpha)};
          const Complex pref = std::pow(1.0 - std::norm(a), alpha) * phase;
          if (std::abs(a) == 0.0) return pref;
          const Complex lg = std::log(1.0 - std::conj(a) * z);
          return pref * std::exp(-2.0 * alpha * lg);
        } else {
          static_assert(std::is_same_v<T, BoundaryPower>);
          require_in_disk(z, "boundary_power");
          const Complex lg = std::log(1.0 - std::conj(k.omega) * z);
          return std::exp(-k.beta * lg);
        }
      },
      n.v);
}

std::string describe_node(const Node& n) {
  return std::visit(
      [&](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, Poly>) {
          os << "poly(deg " << (k.coeffs.empty() ? 0 : k.coeffs.size() - 1) << ")";
        } else if constexpr (std::is_same_v<T, Moebius>) {
          os << "moebius(a=" << k.a.re() << (k.a.im() < 0 ? "" : "+") << k.a.im()
             << "i)";
        } else if constexpr (std::is_same_v<T, Blaschke>) {
          os << "blaschke(" << k.zeros.size() << " zeros)";
        } else if constexpr (std::is_same_v<T, Series>) {
          os << "series(deg " << k.truncation_degree << ")";
        } else if constexpr (std::is_same_v<T, Scale>) {
          os << "scale(" << describe_node(*k.inner) << ")";
        } else if constexpr (std::is_same_v<T, Compose>) {
          os << "compose(" << describe_node(*k.outer) << ", "
             << describe_node(*k.inner) << ")";
        } else if constexpr (std::is_same_v<T, Product>) {
          os << "product(" << describe_node(*k.left) << ", "
             << describe_node(*k.right) << ")";
        } else if constexpr (std::is_same_v<T, Affine>) {
          os << "affine(" << k.terms.size() << " terms)";
        } else if constexpr (std::is_same_v<T, AntiderivPower>) {
          os << "extremal(a=" << k.a.re() << (k.a.im() < 0 ? "" : "+") << k.a.im()
             << "i, alpha=" << k.alpha << ")";
        } else {
          static_assert(std::is_same_v<T, BoundaryPower>);
          os << "boundary_power(beta=" << k.beta << ")";
        }
        return os.str();
      },
      n.v);
}

int degree_hint_node(const Node& n) {
  return std::visit(
      [&](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Poly>) {
          int deg = 0;
          for (std::size_t i = 0; i < k.coeffs.size(); ++i)
            if (std::abs(k.coeffs[i]) > 0.0) deg = static_cast<int>(i);
          return std::max(deg, 1);
        } else if constexpr (std::is_same_v<T, Scale>) {
          return degree_hint_node(*k.inner);
        } else if constexpr (std::is_same_v<T, Product>) {
          return degree_hint_node(*k.left) + degree_hint_node(*k.right);
        } else {
          return 1;
        }
      },
      n.v);
}

Complex checked_unimodular(Complex rotation, const char* where) {
  if (std::abs(std::abs(rotation) - 1.0) > kUnitTol)
    throw std::invalid_argument(std::string(where) + ": rotation must be unimodular");
  return rotation;
}

}  // namespace

struct NodeAccess {
  template <typename K>
  static AnalyticMap make(K&& kind) {
    return AnalyticMap(std::make_shared<Node>(Node{std::forward<K>(kind)}));
  }
  static std::shared_ptr<const Node> get(const AnalyticMap& m) { return m.node_; }
};

namespace {
template <typename K>
AnalyticMap make(K&& kind) {
  return NodeAccess::make(std::forward<K>(kind));
}
std::shared_ptr<const Node> node_of(const AnalyticMap& m) {
  return NodeAccess::get(m);
}
}  // namespace

AnalyticMap AnalyticMap::polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty()) coeffs.push_back(Complex{0.0, 0.0});
  return make(Poly{std::move(coeffs)});
}

AnalyticMap AnalyticMap::identity() {
  return polynomial({Complex{0.0, 0.0}, Complex{1.0, 0.0}});
}

AnalyticMap AnalyticMap::constant(Complex c) { return polynomial({c}); }

AnalyticMap AnalyticMap::moebius(DiskPoint a, Complex rotation) {
  return make(Moebius{a, checked_unimodular(rotation, "moebius")});
}

AnalyticMap AnalyticMap::blaschke(std::vector<DiskPoint> zeros, Complex rotation) {
  return make(Blaschke{std::move(zeros), checked_unimodular(rotation, "blaschke")});
}

AnalyticMap AnalyticMap::power_series(std::vector<Complex> coeffs,
                                      int truncation_degree) {
  if (truncation_degree < 0)
    throw std::invalid_argument("power_series: truncation degree must be >= 0");
  if (coeffs.size() > static_cast<std::size_t>(truncation_degree) + 1)
    coeffs.resize(static_cast<std::size_t>(truncation_degree) + 1);
  return make(Series{std::move(coeffs), truncation_degree});
}

AnalyticMap AnalyticMap::scale(AnalyticMap inner, Complex factor) {
  return make(Scale{node_of(inner), factor});
}

AnalyticMap AnalyticMap::compose(AnalyticMap outer, AnalyticMap inner) {
  return make(Compose{node_of(outer), node_of(inner)});
}

AnalyticMap AnalyticMap::product(AnalyticMap left, AnalyticMap right) {
  return make(Product{node_of(left), node_of(right)});
}

AnalyticMap AnalyticMap::affine(std::vector<std::pair<Complex, AnalyticMap>> terms) {
  Affine a;
  a.terms.reserve(terms.size());
  for (auto& [w, m] : terms) a.terms.emplace_back(w, node_of(m));
  return make(std::move(a));
}

AnalyticMap AnalyticMap::extremal(DiskPoint a, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("extremal: alpha must be > 0");
  return make(AntiderivPower{a, alpha});
}

AnalyticMap AnalyticMap::boundary_power(Complex omega, double beta) {
  if (!(beta > 0.0))
    throw std::invalid_argument("boundary_power: beta must be > 0");
  return make(BoundaryPower{checked_unimodular(omega, "boundary_power"), beta});
}

Complex AnalyticMap::eval(Complex z) const { return eval_node(*node_, z); }
Complex AnalyticMap::deriv(Complex z) const { return deriv_node(*node_, z); }
int AnalyticMap::degree_hint() const { return degree_hint_node(*node_); }
std::string AnalyticMap::describe() const { return describe_node(*node_); }

double power_series_tail_bound(int degree, double coeff_bound, double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("power_series_tail_bound: r must lie in [0,1)");
  return coeff_bound * std::pow(r, degree + 1) / (1.0 - r);
}

SelfMapVerdict validate_self_map(const AnalyticMap& m, std::span<const double> radii,
                                 long angular_count) {
  if (radii.empty() || angular_count < 8)
    throw std::invalid_argument("validate_self_map: need radii and >= 8 angles");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0) || (i > 0 && radii[i] <= radii[i - 1]))
      throw std::invalid_argument(
          "validate_self_map: radii must be strictly increasing in (0,1)");
  }

  SelfMapVerdict out;
  std::vector<double> circle_max(radii.size(), 0.0);
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double r = radii[k];
    for (long j = 0; j < angular_count; ++j) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / angular_count;
      const Complex z{r * std::cos(theta), r * std::sin(theta)};
      const double mod = std::abs(m.eval(z));
      if (mod > out.max_modulus_seen) {
        out.max_modulus_seen = mod;
        out.witness = z;
      }
      circle_max[k] = std::max(circle_max[k], mod);
      if (mod >= 1.0) {
        out.status = SelfMapStatus::Violated;
        out.witness = z;
        out.max_modulus_seen = mod;
        return out;
      }
    }
  }

  // No sample reached 1; extrapolate the radial trend of circle maxima to r=1.
  const std::size_t last = radii.size() - 1;
  double predicted = circle_max[last];
  if (radii.size() >= 2) {
    const double slope = (circle_max[last] - circle_max[last - 1]) /
                         (radii[last] - radii[last - 1]);
    predicted = circle_max[last] + slope * (1.0 - radii[last]);
  }
  constexpr double kMargin = 1e-9;
  if (circle_max[last] <= 1.0 - kMargin && predicted <= 1.0 + 1e-6) {
    out.status = SelfMapStatus::Verified;
    out.boundary_contact = predicted > 1.0 - 1e-2;
  } else {
    out.status = SelfMapStatus::Inconclusive;
  }
  return out;
}

SelfMapVerdict validate_self_map(const AnalyticMap& m) {
  std::vector<double> radii;
  for (int k = 1; k <= 10; ++k) radii.push_back(1.0 - std::pow(2.0, -k));
  return validate_self_map(m, radii, 512);
}

}  // namespace blochcomp::fn
