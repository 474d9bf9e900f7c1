#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "planalg/kernels.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// Interpolation data: distinct interior nodes with scalar or square-matrix
/// targets of norm at most 1 (+1e-12 slack).
struct PickProblem {
  PlanarDomain domain = PlanarDomain::disk();
  std::vector<Complex> nodes;
  std::vector<Complex> scalar_targets;  // used when matrix_targets is empty
  std::vector<CMat> matrix_targets;

  bool matrix_case() const { return !matrix_targets.empty(); }
  int size() const { return static_cast<int>(nodes.size()); }
  int level() const {
    return matrix_case() ? static_cast<int>(matrix_targets.front().rows()) : 1;
  }
  void validate() const;
};

struct PickMatrix {
  KernelIndex index;
  CMat entries;
  Real min_eigenvalue = 0;
};

struct FeasibilityVerdict {
  bool feasible = true;
  bool marginal = false;  // |lambda_min| within the marginal band somewhere
  Real grid_resolution = 0;
  Real worst_min_eigenvalue = 0;
  // Witness of infeasibility: index, eigenvalue and unit eigenvector.
  std::optional<KernelIndex> witness_index;
  std::optional<Real> witness_eigenvalue;
  std::optional<CVec> witness_vector;
};

struct ExtremalS {
  Real s_sq = 0;
  Real m_sq = 0;
  KernelIndex alpha0;
  Real ratio = 0;  // sup_alpha |K(z1,z2)|^2 / (K(z1,z1) K(z2,z2))
};

PickMatrix pick_matrix(const PickProblem& problem, const KernelIndex& index, int truncation);

FeasibilityVerdict feasibility(const PickProblem& problem, int grid_size, int truncation);

/// Maximizes the normalized kernel ratio over the exponent grid (one
/// golden-section refinement pass around the best grid point) and returns
/// m^2 = 1 - sup ratio, s^2 = 1/m^2 - 1 and the maximizing index.
/// Convention: m = sup{ |g(z2)| : g(z1) = 0, ||g|| <= 1 }.
ExtremalS extremal_s(const PlanarDomain& domain, Complex z1, Complex z2, int grid_size,
                     int truncation);

/// Ahlfors-Schwarz bound: the reciprocal of sup{ |r'(z)| : ||r|| <= 1,
/// r(z) = 0 }, equal to 1/szego_diag(z).
Real extremal_t(const PlanarDomain& domain, Complex z, int truncation);

/// Normalized kernel ratio at one index; shared with the alpha0 search.
Real kernel_pair_ratio(const PlanarDomain& domain, const KernelIndex& index, Complex z1,
                       Complex z2, int truncation);

}  // namespace planalg
