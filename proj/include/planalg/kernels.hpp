#pragma once

#include <optional>
#include <vector>

#include "planalg/domain.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// Truncated reproducing kernel of the Hardy space H^2_a over the domain.
///
/// The space is realized as the closure of span{z^(n+a)} under the boundary
/// inner product <f,g> = (1/2pi) int f conj(g) |dnu|. The disk uses exponents
/// 0..N with a = 0 and unit basis norms; the annulus uses exponents -N..N and
/// c_n = 1 + r^(2(n+a)+1). Fractional powers take the principal branch,
/// evaluated per factor as |z|^(n+a) exp(i (n+a) arg z).
class TruncatedKernel {
 public:
  static TruncatedKernel make(const PlanarDomain& domain, const KernelIndex& index,
                              int truncation);

  const PlanarDomain& domain() const { return domain_; }
  const KernelIndex& index() const { return index_; }
  int truncation() const { return truncation_; }
  int min_exponent() const { return nmin_; }
  int max_exponent() const { return nmax_; }
  int basis_size() const { return nmax_ - nmin_ + 1; }

  /// Squared norm c_n of the section z^(n+a).
  Real basis_norm_sq(int n) const;

  /// Section value z^(n+a), principal branch.
  Complex section(int n, Complex z) const;

  /// d/dz of the section.
  Complex section_deriv(int n, Complex z) const;

  /// K(z, w); Hermitian symmetry eval(z,w) = conj(eval(w,z)) holds exactly.
  Complex eval(Complex z, Complex w) const;

  /// d/d(conj w) of eval(z, .), by termwise differentiation.
  Complex dbar_eval(Complex z, Complex w) const;

  /// Series evaluation without the interior check; used by quadrature code
  /// that legitimately touches boundary points.
  Complex eval_raw(Complex z, Complex w) const;

  /// Closed geometric bound on the dropped tail of eval(z, w).
  Real tail_bound(Complex z, Complex w) const;

  /// Coordinates of K(., w) in the orthonormal basis phi_n / sqrt(c_n).
  CVec coord_vector(Complex w) const;

  /// Coordinates of dbar K(., z) in the same basis.
  CVec coord_dbar_vector(Complex z) const;

 private:
  TruncatedKernel(const PlanarDomain& domain, const KernelIndex& index, int truncation);

  PlanarDomain domain_;
  KernelIndex index_;
  int truncation_;
  int nmin_, nmax_;
  Real a_;
  std::vector<Real> cn_;  // indexed by n - nmin_
};

// Operation-style wrappers.
inline Complex kernel_eval(const TruncatedKernel& k, Complex z, Complex w) {
  return k.eval(z, w);
}
inline Complex kernel_dbar_eval(const TruncatedKernel& k, Complex z, Complex w) {
  return k.dbar_eval(z, w);
}

/// Diagonal of the Szego kernel of the domain: 1/(1-|z|^2) for the disk, the
/// a = 0 series for the annulus.
Real szego_diag(const PlanarDomain& domain, Complex z,
                int truncation = defaults::kTruncation);

/// Szego kernel value (a = 0 space) between a boundary point nu and an
/// interior point z, used as the weight density |K(nu,z)|^2.
Complex szego_eval(const PlanarDomain& domain, Complex nu, Complex z,
                   int truncation = defaults::kTruncation);

/// Max over test sections phi_n and interior probe points w of
/// |<phi_n, K(., w)>_Q - phi_n(w)|. Empty test set gives 0.
Real verify_reproducing(const TruncatedKernel& k, const BoundaryQuadrature& q,
                        const std::vector<int>& test_exponents,
                        const std::vector<Complex>& probe_points = {});

/// Default interior probe points for verify_reproducing.
std::vector<Complex> default_probe_points(const PlanarDomain& domain);

}  // namespace planalg
