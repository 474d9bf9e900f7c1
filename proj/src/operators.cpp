#include "planalg/operators.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "planalg/linalg.hpp"

namespace planalg {

GeneralOperator::GeneralOperator(CMat matrix, const PlanarDomain& domain)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw ShapeError("operator matrix must be square");
  const int n = size();

  Eigen::ComplexEigenSolver<CMat> es(matrix_.adjoint());
  adj_vectors_ = es.eigenvectors();
  eigenvalues_.resize(n);
  for (int i = 0; i < n; ++i) eigenvalues_[i] = std::conj(es.eigenvalues()(i));

  for (int i = 0; i < n; ++i) domain.require_interior(eigenvalues_[i], "eigenvalue");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(eigenvalues_[i] - eigenvalues_[j]) < tol::kEigGapLimit)
        throw ConditioningError("clustered eigenvalues (gap below 1e-6)");
  if (cond(adj_vectors_) > tol::kEigvecCondLimit)
    throw ConditioningError("eigenvector matrix condition number exceeds 1e8");
}

CMat2 calc_A(const ModelOperatorA& a, const RationalFunction& r, const PlanarDomain& domain) {
  r.require_pole_free(domain);
  return apply_values_A(a, r.eval(a.z1), r.eval(a.z2));
}

CMat2 calc_B(const ModelOperatorB& b, const RationalFunction& r, const PlanarDomain& domain) {
  r.require_pole_free(domain);
  return apply_values_B(b, r.eval(b.z), r.deriv(b.z));
}

CMat calc_general(const GeneralOperator& t, const RationalFunction& r,
                  const PlanarDomain& domain) {
  r.require_pole_free(domain);
  const CMat p = r.num().eval(t.matrix());
  const CMat q = r.den().eval(t.matrix());
  Eigen::PartialPivLU<CMat> lu(q);
  if (std::abs(lu.determinant()) < 1e-300) throw PoleError("q(T) is singular");
  return p * lu.inverse();
}

CMat2 apply_values_A(const ModelOperatorA& a, Complex r_z1, Complex r_z2) {
  CMat2 m;
  m << r_z1, Complex(0, 0), a.s * a.mu * (r_z1 - r_z2), r_z2;
  return m;
}

CMat2 apply_values_B(const ModelOperatorB& b, Complex r_z, Complex r_deriv_z) {
  CMat2 m;
  m << r_z, Complex(0, 0), b.t * b.lambda * r_deriv_z, r_z;
  return m;
}

CMat apply_values_general(const GeneralOperator& t, const std::vector<Complex>& values) {
  const auto v = lagrange_idempotents(t);
  CMat out = CMat::Zero(t.size(), t.size());
  for (size_t i = 0; i < v.size(); ++i) out += values[i] * v[i];
  return out;
}

std::vector<CMat> lagrange_idempotents(const GeneralOperator& t) {
  const auto& z = t.eigenvalues();
  const int n = t.size();
  std::vector<CMat> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Complex> other;
    Complex denom{1, 0};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      other.push_back(z[j]);
      denom *= z[i] - z[j];
    }
    const Polynomial ell = Polynomial::from_roots(other) * (Complex(1, 0) / denom);
    v.push_back(ell.eval(t.matrix()));
  }
  return v;
}

ContractivityVerdict contractivity_A(const ModelOperatorA& a, const PlanarDomain& domain,
                                     int grid_size, int truncation) {
  domain.require_interior(a.z1, "z1");
  domain.require_interior(a.z2, "z2");
  const ExtremalS ex = extremal_s(domain, a.z1, a.z2, grid_size, truncation);
  const Real critical = std::sqrt(ex.s_sq);
  const Real value = a.s * std::abs(a.mu);

  ContractivityVerdict verdict;
  verdict.critical = critical;
  verdict.value = value;
  verdict.contractive = value <= critical * (1.0 + 1e-12);
  verdict.marginal = std::abs(value - critical) <= 1e-8 * std::max<Real>(1.0, critical);
  verdict.reason = verdict.contractive ? "s|mu| within the extremal bound"
                                       : "s|mu| exceeds the extremal bound";
  return verdict;
}

ContractivityVerdict contractivity_B(const ModelOperatorB& b, const PlanarDomain& domain,
                                     int truncation) {
  domain.require_interior(b.z, "z");
  const Real critical = extremal_t(domain, b.z, truncation);
  const Real value = b.t * std::abs(b.lambda);

  ContractivityVerdict verdict;
  verdict.critical = critical;
  verdict.value = value;
  verdict.contractive = value <= critical * (1.0 + 1e-12);
  verdict.marginal = std::abs(value - critical) <= 1e-8 * std::max<Real>(1.0, critical);
  verdict.reason = verdict.contractive ? "t|lambda| within the Ahlfors bound"
                                       : "t|lambda| exceeds the Ahlfors bound";
  return verdict;
}

CMat Rank2Decomposition::block_diagonal() const {
  const int nblocks = static_cast<int>(coupling.size());
  const int n = 2 * nblocks + static_cast<int>(diagonal.size());
  CMat out = CMat::Zero(n, n);
  for (int i = 0; i < nblocks; ++i) {
    out(2 * i, 2 * i) = z1;
    out(2 * i, 2 * i + 1) = coupling[i];
    out(2 * i + 1, 2 * i + 1) = z2;
  }
  for (size_t i = 0; i < diagonal.size(); ++i)
    out(2 * nblocks + i, 2 * nblocks + i) = diagonal[i];
  return out;
}

Rank2Decomposition rank2_decompose(const CMat& t, Real form_tol) {
  const int n = static_cast<int>(t.rows());
  if (t.rows() != t.cols() || n < 2) throw ShapeError("expected a square matrix of size >= 2");

  const Complex z1 = t(0, 0);
  const Complex z2 = t(n - 1, n - 1);
  const Real scale = std::max<Real>(1.0, t.cwiseAbs().maxCoeff());

  // Detect the split point: top-left p x p equal to z1 I, bottom-right equal
  // to z2 I, lower-left zero.
  int p = -1;
  for (int cand = 1; cand < n; ++cand) {
    const int q = n - cand;
    const bool top = (t.topLeftCorner(cand, cand) - z1 * CMat::Identity(cand, cand)).cwiseAbs().maxCoeff() <= form_tol * scale;
    const bool bottom = (t.bottomRightCorner(q, q) - z2 * CMat::Identity(q, q)).cwiseAbs().maxCoeff() <= form_tol * scale;
    const bool lower = t.bottomLeftCorner(q, cand).cwiseAbs().maxCoeff() <= form_tol * scale;
    if (top && bottom && lower) {
      p = cand;
      break;
    }
  }
  if (p < 0) throw ShapeError("matrix is not of the two-eigenvalue block form");
  const int q = n - p;

  const CMat c = t.topRightCorner(p, q);
  Eigen::JacobiSVD<CMat> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMat uc = svd.matrixU();
  const CMat vc = svd.matrixV();
  const auto& sigma = svd.singularValues();

  Rank2Decomposition out;
  out.z1 = z1;
  out.z2 = z2;

  const int rank_cap = std::min(p, q);
  std::vector<int> paired;
  for (int i = 0; i < rank_cap; ++i)
    if (sigma(i) > form_tol * scale) paired.push_back(i);
  const int nblocks = static_cast<int>(paired.size());

  // Basis order: (u_1, v_1), ..., (u_nb, v_nb), remaining u's, remaining v's.
  CMat u = CMat::Zero(n, n);
  for (int b = 0; b < nblocks; ++b) {
    u.block(0, 2 * b, p, 1) = uc.col(paired[b]);
    u.block(p, 2 * b + 1, q, 1) = vc.col(paired[b]);
  }
  int col = 2 * nblocks;
  for (int i = 0; i < p; ++i) {
    if (i < nblocks) continue;
    u.block(0, col++, p, 1) = uc.col(i);
    out.diagonal.push_back(z1);
  }
  for (int i = 0; i < q; ++i) {
    if (i < nblocks) continue;
    u.block(p, col++, q, 1) = vc.col(i);
    out.diagonal.push_back(z2);
  }
  for (int b = 0; b < nblocks; ++b) out.coupling.push_back(sigma(paired[b]));
  out.unitary = u;
  return out;
}

}  // namespace planalg
