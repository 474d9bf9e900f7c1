#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "planalg/linalg.hpp"
#include "planalg/pick.hpp"
#include "planalg/rng.hpp"

using namespace planalg;

namespace {

// Pseudo-hyperbolic distance on the disk, the closed-form extremal oracle.
Real pseudo_hyperbolic(Complex z1, Complex z2) {
  return std::abs(z1 - z2) / std::abs(1.0 - std::conj(z2) * z1);
}

PickProblem disk_problem(std::vector<Complex> nodes, std::vector<Complex> targets) {
  PickProblem p;
  p.domain = PlanarDomain::disk();
  p.nodes = std::move(nodes);
  p.scalar_targets = std::move(targets);
  return p;
}

}  // namespace

TEST_CASE("Pick matrix of the extremal data of f(z) = z") {
  const auto pm = pick_matrix(disk_problem({0.0, 0.5}, {0.0, 0.5}), KernelIndex{}, 200);
  CHECK(std::abs(pm.entries(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(pm.entries(0, 1) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(pm.entries(1, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(pm.entries(1, 1) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(pm.min_eigenvalue) < 1e-12);
}

TEST_CASE("zero targets give the kernel Gram matrix, PSD") {
  const auto dom = PlanarDomain::annulus(0.5);
  PickProblem p;
  p.domain = dom;
  p.nodes = {Complex(0.6, 0), Complex(0.0, 0.8), Complex(-0.7, 0.1)};
  p.scalar_targets = {0, 0, 0};
  const auto pm = pick_matrix(p, KernelIndex::annulus(0.25), 200);
  const auto kernel = TruncatedKernel::make(dom, KernelIndex::annulus(0.25), 200);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(pm.entries(i, j) - kernel.eval(p.nodes[i], p.nodes[j])) < 1e-10);
  CHECK(pm.min_eigenvalue > -1e-10 * pm.entries.trace().real());
}

TEST_CASE("target beyond the pseudo-hyperbolic bound is infeasible") {
  // Brute-force eigenvalue oracle: 0.9 > rho(0, 0.5) = 0.5.
  const auto pm = pick_matrix(disk_problem({0.0, 0.5}, {0.0, 0.9}), KernelIndex{}, 200);
  CHECK(pm.min_eigenvalue < 0);
  const auto verdict = feasibility(disk_problem({0.0, 0.5}, {0.0, 0.9}), 1, 200);
  CHECK(!verdict.feasible);
  REQUIRE(verdict.witness_vector.has_value());
  // The witness quadratic form is negative.
  const CVec v = *verdict.witness_vector;
  CHECK((v.adjoint() * pm.entries * v)(0).real() < 0);
}

TEST_CASE("coincident nodes raise a degenerate-problem error") {
  CHECK_THROWS_AS(pick_matrix(disk_problem({0.3, 0.3}, {0.0, 0.1}), KernelIndex{}, 200),
                  DegenerateError);
}

TEST_CASE("boundary extremal data is feasible and marginal") {
  const auto verdict = feasibility(disk_problem({0.0, 0.5}, {0.0, 0.5}), 1, 200);
  CHECK(verdict.feasible);
  CHECK(verdict.marginal);
}

TEST_CASE("zero targets are feasible over the annulus grid") {
  PickProblem p;
  p.domain = PlanarDomain::annulus(0.5);
  p.nodes = {Complex(0.6, 0), Complex(0.8, 0)};
  p.scalar_targets = {0, 0};
  const auto verdict = feasibility(p, 16, 200);
  CHECK(verdict.feasible);
  CHECK(verdict.grid_resolution == doctest::Approx(1.0 / 16));
}

TEST_CASE("slightly super-extremal annulus target is infeasible with a witness") {
  const auto dom = PlanarDomain::annulus(0.5);
  // A pair straddling the hole, where the index dependence is pronounced.
  const Complex z1(0.6, 0), z2(-0.7, 0);
  const int grid = 64;
  Real rmin = 2, rmax = -1;
  for (int j = 0; j < grid; ++j) {
    const Real r =
        kernel_pair_ratio(dom, KernelIndex::annulus(static_cast<Real>(j) / grid), z1, z2, 200);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  const auto ex = extremal_s(dom, z1, z2, grid, 200);
  // Exceed the extremal modulus by a quarter of the profile variation: the
  // problem fails only where the ratio is near its peak.
  const Real w2_sq = 1.0 - (rmax - 0.25 * (rmax - rmin));
  PickProblem p;
  p.domain = dom;
  p.nodes = {z1, z2};
  p.scalar_targets = {0.0, std::sqrt(w2_sq)};
  const auto verdict = feasibility(p, grid, 200);
  CHECK(!verdict.feasible);
  REQUIRE(verdict.witness_index.has_value());
  REQUIRE(verdict.witness_eigenvalue.has_value());
  CHECK(*verdict.witness_eigenvalue < 0);
  // The witness lives in the high-ratio region around the maximizer.
  const Real witness_ratio = kernel_pair_ratio(dom, *verdict.witness_index, z1, z2, 200);
  CHECK(witness_ratio > rmax - 0.5 * (rmax - rmin));
  // And the refined maximizer itself certifies infeasibility.
  const auto at_alpha0 = pick_matrix(p, ex.alpha0, 200);
  CHECK(at_alpha0.min_eigenvalue < 0);
}

TEST_CASE("extremal_s on the disk matches the pseudo-hyperbolic closed form") {
  const auto ex = extremal_s(PlanarDomain::disk(), 0.0, 0.5, 1, 200);
  CHECK(ex.m_sq == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(ex.s_sq == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(ex.alpha0.empty());

  RngStream rng(5, 0);
  for (int k = 0; k < 6; ++k) {
    const Complex z1 = rng.disk_point(0.8), z2 = rng.disk_point(0.8);
    if (std::abs(z1 - z2) < 0.05) continue;
    const auto e = extremal_s(PlanarDomain::disk(), z1, z2, 1, 300);
    const Real rho = pseudo_hyperbolic(z1, z2);
    CHECK(e.m_sq == doctest::Approx(rho * rho).epsilon(1e-8));
    // Closed-form identity: s^2 |z1 - z2|^2 = (1 - |z1|^2)(1 - |z2|^2).
    CHECK(e.s_sq * std::norm(z1 - z2) ==
          doctest::Approx((1 - std::norm(z1)) * (1 - std::norm(z2))).epsilon(1e-8));
  }
}

TEST_CASE("extremal_s is symmetric in its arguments") {
  const auto dom = PlanarDomain::annulus(0.5);
  const Complex z1(0.6, 0.05), z2(0.75, -0.1);
  const auto a = extremal_s(dom, z1, z2, 64, 200);
  const auto b = extremal_s(dom, z2, z1, 64, 200);
  CHECK(std::abs(a.m_sq - b.m_sq) < 1e-10);
}

TEST_CASE("extremal_s is stable under grid refinement") {
  const auto dom = PlanarDomain::annulus(0.5);
  const auto a = extremal_s(dom, 0.6, 0.75, 64, 200);
  const auto b = extremal_s(dom, 0.6, 0.75, 128, 200);
  CHECK(std::abs(a.s_sq - b.s_sq) < 1e-6);
}

TEST_CASE("extremal_s rejects coincident points") {
  CHECK_THROWS_AS(extremal_s(PlanarDomain::disk(), 0.4, 0.4, 1, 100), DegenerateError);
}

TEST_CASE("extremal_t closed forms and domain monotonicity") {
  CHECK(extremal_t(PlanarDomain::disk(), 0.0, 100) == doctest::Approx(1.0));
  // Oracle: 1 - |z|^2.
  CHECK(extremal_t(PlanarDomain::disk(), 0.6, 100) == doctest::Approx(0.64).epsilon(1e-12));
  const Real t_ann = extremal_t(PlanarDomain::annulus(0.5), 0.7, 300);
  CHECK(t_ann > 0);
  CHECK(t_ann <= 1.0 - 0.49 + 1e-12);
  CHECK_THROWS_AS(extremal_t(PlanarDomain::disk(), Complex(1.0, 0), 100), DomainError);
}

TEST_CASE("scalar feasibility is monotone under shrinking targets") {
  RngStream rng(17, 0);
  for (int trial = 0; trial < 4; ++trial) {
    PickProblem p;
    p.domain = PlanarDomain::disk();
    p.nodes = {rng.disk_point(0.7), rng.disk_point(0.7), rng.disk_point(0.7)};
    if (std::abs(p.nodes[0] - p.nodes[1]) < 0.05 || std::abs(p.nodes[0] - p.nodes[2]) < 0.05 ||
        std::abs(p.nodes[1] - p.nodes[2]) < 0.05) {
      --trial;
      continue;
    }
    p.scalar_targets = {rng.disk_point(1.0), rng.disk_point(1.0), rng.disk_point(1.0)};
    if (!feasibility(p, 1, 150).feasible) continue;
    for (Real c : {0.75, 0.5, 0.2}) {
      PickProblem shrunk = p;
      for (auto& w : shrunk.scalar_targets) w *= c;
      CHECK(feasibility(shrunk, 1, 150).feasible);
    }
  }
}

TEST_CASE("any target beyond modulus 1 is infeasible with a witness") {
  // The diagonal block (1 - |w|^2) K(z,z) is negative, so no grid scan can
  // rescue the problem.
  auto p = disk_problem({0.0, 0.4}, {0.0, 1.2});
  const auto verdict = feasibility(p, 1, 100);
  CHECK(!verdict.feasible);
  REQUIRE(verdict.witness_eigenvalue.has_value());
  CHECK(*verdict.witness_eigenvalue < 0);
}

TEST_CASE("matrix targets: block Pick matrix and contraction feasibility") {
  PickProblem p;
  p.domain = PlanarDomain::disk();
  p.nodes = {Complex(0.0, 0), Complex(0.5, 0)};
  CMat w0 = CMat::Zero(2, 2);
  CMat w1(2, 2);
  // Targets realized by F(z) = diag(z, z/2): feasible.
  w1 << Complex(0.5, 0), Complex(0, 0), Complex(0, 0), Complex(0.25, 0);
  p.matrix_targets = {w0, w1};
  const auto verdict = feasibility(p, 1, 200);
  CHECK(verdict.feasible);
  const auto pm = pick_matrix(p, KernelIndex{}, 200);
  CHECK(pm.entries.rows() == 4);
  // Node-major block structure: top-left block is K(z0,z0) I.
  CHECK(std::abs(pm.entries(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(pm.entries(0, 1)) < 1e-12);
}
