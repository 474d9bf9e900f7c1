#pragma once

#include <cstdint>
#include <vector>

#include "planalg/operators.hpp"
#include "planalg/pick.hpp"
#include "planalg/sampler.hpp"
#include "planalg/types.hpp"

namespace planalg {

struct NodeTuple {
  PlanarDomain domain = PlanarDomain::disk();
  std::vector<Complex> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  void validate() const;
};

/// Lagrange idempotent system V_i = ell_i(T): sum V_i = I, V_i V_j = d_ij V_i.
struct LagrangeSystem {
  CMat operator_matrix;
  std::vector<Complex> nodes;
  std::vector<CMat> v;
  Real sum_defect = 0;   // || sum V_i - I ||
  Real idem_defect = 0;  // max_ij || V_i V_j - d_ij V_i ||
};

LagrangeSystem lagrange_matrices(const GeneralOperator& t);

/// Membership of scalar or matrix value tuples in I_z^k, via Abrahamse
/// feasibility over the index grid (necessary-only on the annulus).
FeasibilityVerdict membership(const NodeTuple& nodes, const std::vector<Complex>& targets,
                              int grid_size, int truncation);
FeasibilityVerdict membership(const NodeTuple& nodes, const std::vector<CMat>& targets,
                              int grid_size, int truncation);

struct LtBound {
  Real bound = 0;
  std::uint64_t witness_index = 0;
  int level = 1;
  int sample_count = 0;
};

/// Certified lower bound for || L_T (x) I_k || over sampled members of I_z^k:
/// level 1 samples scalar unit-ball functions; level k adds embedded scalar
/// samples, rotated diagonal samples, and (disk) Blaschke-Potapov products.
LtBound lt_norm_lower_bound(const LagrangeSystem& sys, const NodeTuple& nodes,
                            int sample_count, int max_degree, std::uint64_t seed, int level,
                            int threads = 1, int truncation = defaults::kTruncation);

struct HomeqlinReport {
  Real max_rho_norm = 0;
  Real max_lt_norm = 0;
  Real max_discrepancy = 0;  // max over samples of | ||f(T)|| - ||sum f(z_i) V_i|| |
  int sample_count = 0;
  bool agree = false;        // discrepancy within 1e-6
};

/// Sample-by-sample witness of the equivalence between contractivity of
/// rho_T and of the linear map L_T at level 1: for every sampled f the two
/// norms coincide, and so do the running maxima.
HomeqlinReport homeqlin_check(const GeneralOperator& t, const NodeTuple& nodes, int budget,
                              int max_degree, std::uint64_t seed,
                              int truncation = defaults::kTruncation);

}  // namespace planalg
