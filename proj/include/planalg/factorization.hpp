#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planalg/domain.hpp"
#include "planalg/operators.hpp"
#include "planalg/sampler.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// Positive definite node kernel from the eigenvectors of T*:
/// gram(i, j) = K(z_j, z_i) = <v_i, v_j>.
struct EigenKernel {
  std::vector<Complex> nodes;
  CMat gram;

  int size() const { return static_cast<int>(nodes.size()); }
  void validate() const;
};

EigenKernel eigen_kernel(const GeneralOperator& t);

struct PickTestViolation {
  std::uint64_t sample_index = 0;
  std::vector<Complex> values;  // f(z_i)
  Real lambda_min = 0;
  CVec eigenvector;
};

struct PickTestVerdict {
  bool violation_found = false;
  Real worst_lambda_min = 0;  // most negative lambda_min over the budget
  std::optional<PickTestViolation> violation;
  int sample_count = 0;
};

/// Samples unit-ball functions f and checks the matrices
/// ((1 - conj(f(z_i)) f(z_j)) gram(i, j)) for positive semidefiniteness. A
/// violation certifies non-contractivity; no violation is necessary-only.
PickTestVerdict contractivity_pick_test(const EigenKernel& kernel, const PlanarDomain& domain,
                                        int sample_count, int max_degree, std::uint64_t seed,
                                        int truncation = defaults::kTruncation);

struct SchurCertificate {
  KernelIndex index;
  CMat quotient;        // A(i,j) = gram(i,j) / K_alpha(z_j, z_i)
  Real min_eigenvalue = 0;
  CMat vectors;         // columns a_i with <a_i, a_j> = A(i,j)
  Real reconstruction_defect = 0;
};

/// Schur factorization certificate at a fixed index; throws DegenerateError
/// when a kernel entry vanishes below the quotient floor.
SchurCertificate schur_certificate_at(const EigenKernel& kernel, const PlanarDomain& domain,
                                      const KernelIndex& index, int truncation);

/// Grid scan result: the first certified index (smallest exponent) when one
/// exists, plus the full lambda_min profile so near-misses stay visible.
/// NaN profile entries mark indices where the quotient was undefined.
struct SchurScan {
  std::optional<SchurCertificate> certificate;
  std::vector<Real> grid_profile;
};

SchurScan schur_certificate(const EigenKernel& kernel, const PlanarDomain& domain,
                            int grid_size, int truncation);

struct EmbeddingCheck {
  CMat vectors;             // the a_i columns
  Real gram_defect = 0;     // max |gram(i,j) - K_alpha(z_j,z_i) <a_i,a_j>|
  CMat compression;         // n x n compression of (M x I)* on the embedded span
  Real compression_defect = 0;  // vs conj-transpose of the source operator
  Real invariance_defect = 0;
};

/// Rebuilds Gamma(v_i) = K_alpha(., z_i) (x) a_i inside the truncated Hardy
/// space and verifies the Gram identity. When the source operator is given
/// (the same one eigen_kernel consumed, so the eigenvector normalization
/// matches), also compresses (M (x) I)* onto the embedded copy of the source
/// space in its standard basis and reports the distance to T*.
EmbeddingCheck embedding_vectors(const SchurCertificate& cert, const EigenKernel& kernel,
                                 const PlanarDomain& domain, int truncation,
                                 const GeneralOperator* source = nullptr);

}  // namespace planalg
