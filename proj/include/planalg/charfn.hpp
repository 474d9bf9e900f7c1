#pragma once

#include <optional>

#include "planalg/types.hpp"

namespace planalg {

/// Explicit 2x2 inner characteristic function of the disk model operator
/// with eigenvalues z1, z2 and coupling parameter mu, built from the Mobius
/// factors phi_i(u) = (u - z_i)/(1 - conj(z_i) u). The repeated-eigenvalue
/// form is used when z1 == z2.
class CharFn {
 public:
  CharFn(Complex z1, Complex z2, Complex mu);

  Complex z1() const { return z1_; }
  Complex z2() const { return z2_; }
  Complex mu() const { return mu_; }
  bool repeated() const { return repeated_; }

  Complex phi1(Complex u) const;
  Complex phi2(Complex u) const;

  /// theta(u) on the closed disk.
  CMat2 eval(Complex u) const;

  /// theta(z1) theta(z1)^*: rank-one with the invariant top-left value.
  CMat2 product_at_node() const;

 private:
  Complex z1_, z2_, mu_;
  bool repeated_;
};

inline CMat2 theta_eval(const CharFn& c, Complex u) { return c.eval(u); }
inline CMat2 theta_product_at_node(const CharFn& c) { return c.product_at_node(); }

struct UnitaryEquivalence {
  bool equivalent = false;
  /// Diagonal certificate U with U T_mu1 U^* = T_mu2, when equivalent.
  std::optional<CMat2> certificate;
  /// Best residual found by the random search fallback (validation only).
  std::optional<Real> search_residual;
};

/// Theorem criterion: T_mu1 and T_mu2 are unitarily equivalent iff
/// | |mu1| - |mu2| | <= 1e-12. The certificate is the explicit diagonal
/// phase; a budgeted random unitary search cross-validates on request.
UnitaryEquivalence unitary_equiv(Complex mu1, Complex mu2, Complex z1, Complex z2,
                                 bool run_search = false, int search_budget = 10000,
                                 std::uint64_t seed = 1);

}  // namespace planalg
