#pragma once

#include <vector>

#include "planalg/types.hpp"

namespace planalg {

enum class DomainKind { disk, annulus };

/// The open unit disk or a concentric annulus {r < |z| < 1}.
class PlanarDomain {
 public:
  static PlanarDomain disk() { return PlanarDomain(DomainKind::disk, 0.0); }

  static PlanarDomain annulus(Real inner_radius) {
    if (!(inner_radius > 0.0 && inner_radius < 1.0))
      throw ParameterError("annulus inner radius must lie in (0,1)");
    return PlanarDomain(DomainKind::annulus, inner_radius);
  }

  DomainKind kind() const { return kind_; }
  bool is_disk() const { return kind_ == DomainKind::disk; }
  Real inner_radius() const { return inner_radius_; }

  /// Number of bounded components of the complement.
  int connectivity() const { return is_disk() ? 0 : 1; }

  bool contains(Complex z) const {
    const Real m = std::abs(z);
    return is_disk() ? m < 1.0 : (m > inner_radius_ && m < 1.0);
  }

  void require_interior(Complex z, const char* what = "point") const {
    if (!contains(z)) throw DomainError(std::string(what) + " is not strictly inside the domain");
  }

 private:
  PlanarDomain(DomainKind kind, Real inner_radius) : kind_(kind), inner_radius_(inner_radius) {}

  DomainKind kind_;
  Real inner_radius_;
};

/// Character index of the Hardy space family: one exponent a in [0,1) per
/// bounded complementary component. The disk index is empty.
struct KernelIndex {
  std::vector<Real> exponents;

  static KernelIndex trivial(const PlanarDomain& domain) {
    KernelIndex idx;
    idx.exponents.assign(domain.connectivity(), 0.0);
    return idx;
  }

  static KernelIndex annulus(Real a) { return KernelIndex{{a}}; }

  Real a() const { return exponents.empty() ? 0.0 : exponents.front(); }
  bool empty() const { return exponents.empty(); }

  void validate(const PlanarDomain& domain) const {
    if (static_cast<int>(exponents.size()) != domain.connectivity())
      throw ParameterError("kernel index length must equal the domain connectivity");
    for (Real a : exponents)
      if (!(a >= 0.0 && a < 1.0)) throw ParameterError("index exponent must lie in [0,1)");
  }
};

/// Discrete boundary measure: trapezoidal nodes on each boundary circle with
/// the arc length normalized by 1/(2*pi), so the unit circle has mass 1 and
/// the inner circle of an annulus has mass r.
struct BoundaryQuadrature {
  struct Node {
    Complex point;
    Real weight;
    int component;  // 0 = outer circle, 1 = inner circle
  };

  std::vector<Node> nodes;
  int points_per_component = 0;

  /// Largest |p - q| for which z^p conj(z)^q is integrated exactly on each circle.
  int exact_degree() const { return points_per_component - 1; }

  template <typename F>
  Complex integrate(F&& f) const {
    Complex acc{0, 0};
    for (const Node& n : nodes) acc += n.weight * f(n.point);
    return acc;
  }
};

BoundaryQuadrature build_quadrature(const PlanarDomain& domain, int points_per_component);

}  // namespace planalg
