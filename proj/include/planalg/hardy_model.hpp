#pragma once

#include <memory>
#include <vector>

#include "planalg/domain.hpp"
#include "planalg/kernels.hpp"
#include "planalg/operators.hpp"
#include "planalg/rational.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// Finite-dimensional model of a Hardy space: an orthonormal basis expressed
/// over the truncated section list, together with the matrix of the
/// multiplication operator M in that basis. Spectral models (plain H^2_a)
/// have a diagonal section Gram and M is a weighted shift; weighted models
/// orthonormalize a quadrature Gram.
class TruncatedHardyModel {
 public:
  /// Plain H^2_a model over the kernel's domain and index.
  static TruncatedHardyModel spectral(const TruncatedKernel& kernel);

  int dim() const { return static_cast<int>(mult_.rows()); }
  const CMat& mult_matrix() const { return mult_; }
  /// Operator norm of the truncated multiplication matrix; at most 1 plus
  /// the truncation excess for the models built here.
  Real mult_norm() const;
  const PlanarDomain& domain() const { return domain_; }

  /// Value of the k-th orthonormal basis function at z.
  Complex basis_value(int k, Complex z) const;
  Complex basis_deriv(int k, Complex z) const;

  /// Coordinates of the reproducing kernel K(., z) of the modeled space.
  CVec kernel_vec(Complex z) const;
  /// Coordinates of dbar K(., z).
  CVec kernel_dbar_vec(Complex z) const;
  Real kernel_diag(Complex z) const { return kernel_vec(z).squaredNorm(); }

  friend TruncatedHardyModel weighted_hardy(const PlanarDomain& domain, Complex z,
                                            const BoundaryQuadrature& quadrature,
                                            int truncation);

 private:
  TruncatedHardyModel() = default;

  PlanarDomain domain_ = PlanarDomain::disk();
  std::shared_ptr<const TruncatedKernel> sections_;
  // Column k holds the section coefficients of the k-th orthonormal basis
  // function; identity-scaled for spectral models.
  CMat basis_;
  CMat mult_;
};

/// Result of a two-vector Gram-Schmidt pass, in model coordinates.
struct OrthoPair {
  CVec e, f;
};

/// Orthonormalizes {K(., z1), K(., z2)}.
OrthoPair gram_schmidt_pair(const TruncatedHardyModel& model, Complex z1, Complex z2);

/// Orthonormalizes {K(., z), dbar K(., z)}.
OrthoPair gram_schmidt_jet(const TruncatedHardyModel& model, Complex z);

/// Coordinate vectors in the doubled space H + H (stacked blocks).
struct SubspacePair {
  CVec h1, h2;
};

/// h1 = (0; e(z1)), h2 = ((1-|mu|^2)^{1/2} e(z2); mu f(z1,z2)).
SubspacePair build_subspace_M(const TruncatedHardyModel& model, Complex z1, Complex z2,
                              Complex mu);

/// k1 = (0; e(z)), k2 = ((1-|lambda|^2)^{1/2} e(z); lambda f(z)).
SubspacePair build_subspace_N(const TruncatedHardyModel& model, Complex z, Complex lambda);

struct Compression {
  CMat2 matrix;             // matrix of (M + M)^* restricted to the span
  Real invariance_defect;   // ||(I-P)(M*+M*) v|| over the basis vectors
  Real orthonormal_defect;
};

/// Compression of (M + M)^* onto span{v1, v2} in the given ordered basis.
/// Throws NotCoinvariant (as ConditioningError subtype ShapeError? -> see
/// errors) when the span fails to be numerically co-invariant.
Compression compress(const TruncatedHardyModel& model, const CVec& v1, const CVec& v2);

/// Predicted Lemma compression for the pair subspace, with explicit phases:
/// [[conj z1, mu (conj z2 - conj z1) K(z1,z2) / sqrt(D)], [0, conj z2]].
CMat2 predicted_pair_compression(const TruncatedHardyModel& model, Complex z1, Complex z2,
                                 Complex mu);

/// Predicted jet compression [[conj z, lambda t_K], [0, conj z]].
CMat2 predicted_jet_compression(const TruncatedHardyModel& model, Complex z, Complex lambda);

/// t_K = K(z,z) / sqrt(K(z,z) ||dbar K||^2 - |<dbar K, K>|^2) from the
/// model's own kernel data.
Real t_parameter(const TruncatedHardyModel& model, Complex z);

/// s_K = |K(z1,z2)| / sqrt(D) from the model's kernel data.
Real s_parameter(const TruncatedHardyModel& model, Complex z1, Complex z2);

/// Maximizer of the normalized kernel ratio over the index grid with one
/// golden-section refinement; the disk returns the empty index.
KernelIndex alpha0_search(const PlanarDomain& domain, Complex z1, Complex z2, int grid_size,
                          int truncation);

/// Hardy space of the weighted boundary measure |K^Szego(nu, z)|^2 |dnu|,
/// orthonormalized from the quadrature Gram of prescaled sections. Basis
/// size shrinks until the Gram condition number is within bounds.
TruncatedHardyModel weighted_hardy(const PlanarDomain& domain, Complex z,
                                   const BoundaryQuadrature& quadrature, int truncation);

/// Max over test functions f of || P f(M+M) P|_span - f(T) ||.
Real verify_dilation(const TruncatedHardyModel& model, const CVec& v1, const CVec& v2,
                     const CMat2& target, const std::vector<RationalFunction>& test_functions);

/// Serializable witness of one dilation build.
struct DilationWitness {
  SubspacePair vectors;
  CMat2 compression;
  CMat2 target;             // the model operator the compression adjoins to
  Real invariance_defect = 0;
  Real entrywise_defect = 0;   // max |compression - conj-transpose(target)|
  Real modulus_defect = 0;     // same, comparing entry moduli only
};

/// Builds the pair dilation witness for A(z1, z2, s, mu) against the model.
DilationWitness dilation_witness_pair(const TruncatedHardyModel& model,
                                      const ModelOperatorA& op);

/// Builds the jet dilation witness for B(z, t, lambda).
DilationWitness dilation_witness_jet(const TruncatedHardyModel& model,
                                     const ModelOperatorB& op);

}  // namespace planalg
