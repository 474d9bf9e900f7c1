#include "planalg/domain.hpp"

#include <cmath>

namespace planalg {

BoundaryQuadrature build_quadrature(const PlanarDomain& domain, int points_per_component) {
  if (points_per_component < 4)
    throw ParameterError("quadrature needs at least 4 points per component");

  BoundaryQuadrature q;
  q.points_per_component = points_per_component;

  auto add_circle = [&](Real radius, int component) {
    // Normalized arc length: a circle of radius rho carries total mass rho.
    const Real w = radius / points_per_component;
    for (int j = 0; j < points_per_component; ++j) {
      const Real t = 2.0 * kPi * j / points_per_component;
      q.nodes.push_back({radius * Complex(std::cos(t), std::sin(t)), w, component});
    }
  };

  add_circle(1.0, 0);
  if (!domain.is_disk()) add_circle(domain.inner_radius(), 1);
  return q;
}

}  // namespace planalg
