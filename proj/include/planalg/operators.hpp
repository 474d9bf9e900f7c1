#pragma once

#include <vector>

#include "planalg/domain.hpp"
#include "planalg/pick.hpp"
#include "planalg/rational.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// 2x2 model operator with distinct eigenvalues:
/// [[z1, 0], [s mu (z1 - z2), z2]].
struct ModelOperatorA {
  Complex z1, z2;
  Real s = 1;
  Complex mu;

  ModelOperatorA(Complex z1_, Complex z2_, Real s_, Complex mu_)
      : z1(z1_), z2(z2_), s(s_), mu(mu_) {
    if (std::abs(z1 - z2) < 1e-14) throw DegenerateError("model A needs distinct eigenvalues");
    if (!(s > 0)) throw ParameterError("model A needs s > 0");
  }

  CMat2 matrix() const {
    CMat2 m;
    m << z1, Complex(0, 0), s * mu * (z1 - z2), z2;
    return m;
  }
};

/// 2x2 model operator with a repeated eigenvalue: [[z, 0], [t lambda, z]].
struct ModelOperatorB {
  Complex z;
  Real t = 1;
  Complex lambda;

  ModelOperatorB(Complex z_, Real t_, Complex lambda_) : z(z_), t(t_), lambda(lambda_) {
    if (!(t > 0)) throw ParameterError("model B needs t > 0");
  }

  CMat2 matrix() const {
    CMat2 m;
    m << z, Complex(0, 0), t * lambda, z;
    return m;
  }
};

/// n x n operator with distinct eigenvalues inside the domain; carries the
/// eigenvalues and the eigenvectors of the adjoint.
class GeneralOperator {
 public:
  GeneralOperator(CMat matrix, const PlanarDomain& domain);

  const CMat& matrix() const { return matrix_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  const std::vector<Complex>& eigenvalues() const { return eigenvalues_; }
  /// Columns are the T* eigenvectors v_i with T* v_i = conj(z_i) v_i.
  const CMat& adjoint_eigenvectors() const { return adj_vectors_; }

 private:
  CMat matrix_;
  std::vector<Complex> eigenvalues_;
  CMat adj_vectors_;
};

// Rational functional calculus.
CMat2 calc_A(const ModelOperatorA& a, const RationalFunction& r, const PlanarDomain& domain);
CMat2 calc_B(const ModelOperatorB& b, const RationalFunction& r, const PlanarDomain& domain);
CMat calc_general(const GeneralOperator& t, const RationalFunction& r,
                  const PlanarDomain& domain);

// Value-level calculus used by the samplers (Lemma-style closed forms).
CMat2 apply_values_A(const ModelOperatorA& a, Complex r_z1, Complex r_z2);
CMat2 apply_values_B(const ModelOperatorB& b, Complex r_z, Complex r_deriv_z);
CMat apply_values_general(const GeneralOperator& t, const std::vector<Complex>& values);

/// Lagrange idempotents V_i = ell_i(T) for the eigenvalue nodes.
std::vector<CMat> lagrange_idempotents(const GeneralOperator& t);

struct ContractivityVerdict {
  bool contractive = false;
  bool marginal = false;
  Real critical = 0;  // the critical s* (model A) or t* (model B)
  Real value = 0;     // the tested quantity s|mu| or t|lambda|
  std::string reason;
};

/// rho_A contractive iff s^2 |mu|^2 <= s*^2 with s*^2 = 1/m^2 - 1.
ContractivityVerdict contractivity_A(const ModelOperatorA& a, const PlanarDomain& domain,
                                     int grid_size, int truncation);

/// rho_B contractive iff t |lambda| <= t* = extremal_t(z).
ContractivityVerdict contractivity_B(const ModelOperatorB& b, const PlanarDomain& domain,
                                     int truncation);

/// Unitary reduction of [[z1 I_p, C], [0, z2 I_q]] to 2x2 blocks carrying the
/// singular values of C plus a diagonal remainder.
struct Rank2Decomposition {
  CMat unitary;           // U with U^* T U block diagonal
  Complex z1, z2;
  std::vector<Real> coupling;     // singular values attached to the 2x2 blocks
  std::vector<Complex> diagonal;  // remaining diagonal entries
  CMat block_diagonal() const;    // assembled direct sum, same size as input
};

Rank2Decomposition rank2_decompose(const CMat& t, Real form_tol = 1e-10);

}  // namespace planalg
