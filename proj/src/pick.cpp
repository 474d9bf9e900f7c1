#include "planalg/pick.hpp"

#include <algorithm>
#include <cmath>

#include "planalg/linalg.hpp"

namespace planalg {

void PickProblem::validate() const {
  if (nodes.empty()) throw ParameterError("Pick problem needs at least one node");
  for (Complex z : nodes) domain.require_interior(z, "node");
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) < 1e-14)
        throw DegenerateError("coincident interpolation nodes");
  if (matrix_case()) {
    if (matrix_targets.size() != nodes.size())
      throw ParameterError("one matrix target per node required");
    const Eigen::Index k = matrix_targets.front().rows();
    for (const CMat& w : matrix_targets)
      if (w.rows() != k || w.cols() != k) throw ParameterError("matrix targets must be k x k");
  } else {
    if (scalar_targets.size() != nodes.size())
      throw ParameterError("one scalar target per node required");
  }
  // Targets beyond the unit ball are admitted: the Pick matrix then carries a
  // negative diagonal block and feasibility reports the witness.
}

PickMatrix pick_matrix(const PickProblem& problem, const KernelIndex& index, int truncation) {
  problem.validate();
  if (truncation < 50) throw ParameterError("pick_matrix requires truncation >= 50");
  const auto kernel = TruncatedKernel::make(problem.domain, index, truncation);
  const int n = problem.size();
  const int k = problem.level();

  CMat m(n * k, n * k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex kij = kernel.eval(problem.nodes[i], problem.nodes[j]);
      if (problem.matrix_case()) {
        m.block(i * k, j * k, k, k) =
            kij * (CMat::Identity(k, k) -
                   problem.matrix_targets[i] * problem.matrix_targets[j].adjoint());
      } else {
        m(i, j) =
            (1.0 - problem.scalar_targets[i] * std::conj(problem.scalar_targets[j])) * kij;
      }
    }
  }
  PickMatrix out;
  out.index = index;
  out.entries = hermitize(m);
  out.min_eigenvalue = hermitian_min_eig(out.entries);
  return out;
}

namespace {

std::vector<KernelIndex> index_grid(const PlanarDomain& domain, int grid_size) {
  if (grid_size < 1) throw ParameterError("grid size must be >= 1");
  if (domain.is_disk()) return {KernelIndex{}};
  std::vector<KernelIndex> grid;
  grid.reserve(grid_size);
  for (int j = 0; j < grid_size; ++j)
    grid.push_back(KernelIndex::annulus(static_cast<Real>(j) / grid_size));
  return grid;
}

}  // namespace

FeasibilityVerdict feasibility(const PickProblem& problem, int grid_size, int truncation) {
  problem.validate();
  FeasibilityVerdict verdict;
  verdict.grid_resolution = problem.domain.is_disk() ? 0.0 : 1.0 / grid_size;
  verdict.worst_min_eigenvalue = std::numeric_limits<Real>::infinity();

  for (const KernelIndex& index : index_grid(problem.domain, grid_size)) {
    const PickMatrix pm = pick_matrix(problem, index, truncation);
    const Real trace = pm.entries.trace().real();
    verdict.worst_min_eigenvalue = std::min(verdict.worst_min_eigenvalue, pm.min_eigenvalue);
    if (std::abs(pm.min_eigenvalue) <= tol::kMarginalRel * trace) verdict.marginal = true;
    if (pm.min_eigenvalue < -tol::kPsdRel * trace) {
      auto [lam, vec] = hermitian_min_eig_vec(pm.entries);
      verdict.feasible = false;
      verdict.witness_index = index;
      verdict.witness_eigenvalue = lam;
      verdict.witness_vector = vec;
      return verdict;
    }
  }
  return verdict;
}

Real kernel_pair_ratio(const PlanarDomain& domain, const KernelIndex& index, Complex z1,
                       Complex z2, int truncation) {
  const auto kernel = TruncatedKernel::make(domain, index, truncation);
  const Complex k12 = kernel.eval(z1, z2);
  const Real k11 = kernel.eval(z1, z1).real();
  const Real k22 = kernel.eval(z2, z2).real();
  return std::norm(k12) / (k11 * k22);
}

ExtremalS extremal_s(const PlanarDomain& domain, Complex z1, Complex z2, int grid_size,
                     int truncation) {
  domain.require_interior(z1, "z1");
  domain.require_interior(z2, "z2");
  if (std::abs(z1 - z2) < 1e-14)
    throw DegenerateError("extremal_s needs distinct points; use extremal_t");

  ExtremalS out;
  if (domain.is_disk()) {
    out.alpha0 = KernelIndex{};
    out.ratio = kernel_pair_ratio(domain, out.alpha0, z1, z2, truncation);
  } else {
    auto ratio_at = [&](Real a) {
      return kernel_pair_ratio(domain, KernelIndex::annulus(a), z1, z2, truncation);
    };
    int best = 0;
    Real best_ratio = -1;
    for (int j = 0; j < grid_size; ++j) {
      const Real r = ratio_at(static_cast<Real>(j) / grid_size);
      if (r > best_ratio + 0.0) {  // ties keep the smaller exponent
        best_ratio = r;
        best = j;
      }
    }
    // One golden-section pass on the bracket around the best grid point.
    const Real cell = 1.0 / grid_size;
    Real lo = (best - 1) * cell, hi = (best + 1) * cell;
    const Real gr = (std::sqrt(5.0) - 1.0) / 2.0;
    Real x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    Real f1 = ratio_at(x1 < 0 ? x1 + 1 : x1), f2 = ratio_at(x2 >= 1 ? x2 - 1 : x2);
    for (int it = 0; it < 48; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = ratio_at(x2 >= 1 ? x2 - 1 : (x2 < 0 ? x2 + 1 : x2));
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = ratio_at(x1 < 0 ? x1 + 1 : (x1 >= 1 ? x1 - 1 : x1));
      }
    }
    Real a0 = 0.5 * (lo + hi);
    if (a0 < 0) a0 += 1;
    if (a0 >= 1) a0 -= 1;
    const Real refined = ratio_at(a0);
    if (refined >= best_ratio) {
      out.alpha0 = KernelIndex::annulus(a0);
      out.ratio = refined;
    } else {
      out.alpha0 = KernelIndex::annulus(static_cast<Real>(best) / grid_size);
      out.ratio = best_ratio;
    }
  }

  out.m_sq = 1.0 - out.ratio;
  if (!(out.m_sq > 0))
    throw DegenerateError("degenerate kernel ratio; points too close together");
  out.s_sq = 1.0 / out.m_sq - 1.0;
  return out;
}

Real extremal_t(const PlanarDomain& domain, Complex z, int truncation) {
  return 1.0 / szego_diag(domain, z, truncation);
}

}  // namespace planalg
