#include "planalg/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace planalg {

Real hermitian_min_eig(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

std::pair<Real, CVec> hermitian_min_eig_vec(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(h));
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

Real op_norm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(a);
  return svd.singularValues()(0);
}

Real cond(const CMat& a) {
  Eigen::JacobiSVD<CMat> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) <= 0) return std::numeric_limits<Real>::infinity();
  return s(0) / (s(s.size() - 1));
}

CMat psd_sqrt(const CMat& h, Real clamp_rel) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(h));
  RVec vals = es.eigenvalues();
  const Real top = vals.cwiseAbs().maxCoeff();
  RVec roots(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    roots(i) = vals(i) > clamp_rel * top ? std::sqrt(vals(i)) : 0.0;
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

CMat haar_unitary(int k, RngStream& rng) {
  CMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = rng.cgauss();
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) {
    Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0);
  }
  return q;
}

CompressionResult compress_onto(const CMat& op, const CMat& v) {
  const CMat image = op * v;
  const CMat matrix = v.adjoint() * image;
  const CMat residual = image - v * matrix;
  return {matrix, op_norm(residual)};
}

}  // namespace planalg
