#pragma once

// Test-only instance generators for the Schur certificate machinery. The
// selectivity/robustness filters assemble the quotient matrices directly
// from kernel values, independently of the library's certificate scan.

#include <optional>
#include <vector>

#include "planalg/factorization.hpp"
#include "planalg/kernels.hpp"
#include "planalg/linalg.hpp"
#include "planalg/rng.hpp"

namespace planalg::testgen {

struct PlantedInstance {
  EigenKernel kernel;
  int planted_index = 0;  // grid position of the planting
  int grid_size = 0;
};

inline std::vector<Complex> straddling_nodes(RngStream& rng, Real inner_radius, int count) {
  const Real lo = inner_radius + 0.15 * (1.0 - inner_radius);
  const Real hi = 1.0 - 0.1 * (1.0 - inner_radius);
  std::vector<Complex> nodes;
  while (static_cast<int>(nodes.size()) < count) {
    const Real angle =
        2.0 * kPi * nodes.size() / count + 0.5 * (rng.u01() - 0.5);
    const Real radius = lo + (hi - lo) * rng.u01();
    const Complex z = radius * Complex(std::cos(angle), std::sin(angle));
    bool ok = true;
    for (Complex other : nodes)
      if (std::abs(z - other) < 0.15) ok = false;
    if (ok) nodes.push_back(z);
  }
  return nodes;
}

inline std::vector<CMat> kernel_grams(const PlanarDomain& domain,
                                      const std::vector<Complex>& nodes, int grid_size,
                                      int truncation) {
  const int n = static_cast<int>(nodes.size());
  std::vector<CMat> grams(grid_size);
  for (int j = 0; j < grid_size; ++j) {
    const auto k = TruncatedKernel::make(
        domain, KernelIndex::annulus(static_cast<Real>(j) / grid_size), truncation);
    CMat g(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g(a, b) = k.eval(nodes[b], nodes[a]);
    grams[j] = g;
  }
  return grams;
}

/// K = K_{alpha*} (Schur) g g^H: positive definite, certificate guaranteed at
/// the planted index. Draws are rejected until no grid index farther than one
/// cell also passes the PSD check, so the planted answer is unique.
inline PlantedInstance planted_instance(const PlanarDomain& domain, int grid_size,
                                        int truncation, std::uint64_t seed,
                                        std::uint64_t instance) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    RngStream rng(seed, instance, attempt);
    const auto nodes = straddling_nodes(rng, domain.inner_radius(), 3);
    const int n = static_cast<int>(nodes.size());
    const int jstar = static_cast<int>(rng.below(grid_size));

    CVec g(n);
    for (int i = 0; i < n; ++i) g(i) = (0.5 + rng.u01()) * rng.unit_phase();

    const auto grams = kernel_grams(domain, nodes, grid_size, truncation);
    const CMat planted = grams[jstar].cwiseProduct((g * g.adjoint()).eval());

    bool selective = true;
    for (int j = 0; j < grid_size && selective; ++j) {
      int dist = std::abs(j - jstar);
      dist = std::min(dist, grid_size - dist);
      if (dist <= 1) continue;
      const CMat quotient = hermitize(planted.cwiseQuotient(grams[j]));
      const Real trace = std::abs(quotient.trace().real());
      if (hermitian_min_eig(quotient) >= -tol::kPsdRel * trace) selective = false;
    }
    if (!selective) continue;

    PlantedInstance out;
    out.kernel.nodes = nodes;
    out.kernel.gram = hermitize(planted);
    out.planted_index = jstar;
    out.grid_size = grid_size;
    return out;
  }
}

/// K = K_{alpha*} (Schur) G with Hermitian G of smallest eigenvalue -0.1:
/// still a positive definite kernel, but the quotient fails robustly at
/// every grid index, so no certificate may be granted.
inline EigenKernel adversarial_instance(const PlanarDomain& domain, int grid_size,
                                        int truncation, std::uint64_t seed,
                                        std::uint64_t instance) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    RngStream rng(seed, instance, 1000 + attempt);
    const auto nodes = straddling_nodes(rng, domain.inner_radius(), 3);
    const int n = static_cast<int>(nodes.size());
    const int jstar = static_cast<int>(rng.below(grid_size));

    CMat q = haar_unitary(n, rng);
    RVec d(n);
    d << 2.5, 1.2, -0.1;
    const CMat g_adv = q * d.asDiagonal() * q.adjoint();

    const auto grams = kernel_grams(domain, nodes, grid_size, truncation);
    const CMat adversarial = hermitize(grams[jstar].cwiseProduct(g_adv));

    // The result must still be a valid (positive definite) node kernel.
    if (hermitian_min_eig(adversarial) <= 1e-8 * adversarial.trace().real()) continue;

    bool robust = true;
    for (int j = 0; j < grid_size && robust; ++j) {
      const CMat quotient = hermitize(adversarial.cwiseQuotient(grams[j]));
      const Real trace = std::abs(quotient.trace().real());
      if (hermitian_min_eig(quotient) >= -1e-4 * trace) robust = false;
    }
    if (!robust) continue;

    EigenKernel out;
    out.nodes = nodes;
    out.gram = adversarial;
    return out;
  }
}

}  // namespace planalg::testgen
