#pragma once

#include <utility>

#include "planalg/rng.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// (M + M^H)/2, killing roundoff asymmetry before eigendecomposition.
template <typename Derived>
CMat hermitize(const Eigen::MatrixBase<Derived>& m) {
  return 0.5 * (m + m.adjoint());
}

/// Smallest eigenvalue of a Hermitian matrix (symmetrized first).
Real hermitian_min_eig(const CMat& h);

/// Smallest eigenvalue together with a unit eigenvector for it.
std::pair<Real, CVec> hermitian_min_eig_vec(const CMat& h);

/// Operator (spectral) norm.
Real op_norm(const CMat& a);

/// 2-norm condition number.
Real cond(const CMat& a);

/// Hermitian PSD square root; eigenvalues below clamp (relative to the top
/// one) are clamped to zero.
CMat psd_sqrt(const CMat& h, Real clamp_rel = 1e-14);

/// Haar-distributed k x k unitary: QR of a complex Gaussian matrix with the
/// R diagonal phase-fixed to be positive.
CMat haar_unitary(int k, RngStream& rng);

/// V^H op V for orthonormal columns V, plus how far op V leaves span(V).
struct CompressionResult {
  CMat matrix;
  Real invariance_defect;
};
CompressionResult compress_onto(const CMat& op, const CMat& v);

}  // namespace planalg
