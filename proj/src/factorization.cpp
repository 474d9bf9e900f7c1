#include "planalg/factorization.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "planalg/hardy_model.hpp"
#include "planalg/kernels.hpp"
#include "planalg/linalg.hpp"

namespace planalg {

void EigenKernel::validate() const {
  if (gram.rows() != gram.cols() || gram.rows() != size())
    throw ShapeError("eigen kernel Gram size must match the node count");
  if ((gram - gram.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian * gram.cwiseAbs().maxCoeff())
    throw ShapeError("eigen kernel Gram must be Hermitian");
  if (hermitian_min_eig(gram) <= 0)
    throw ConditioningError("eigen kernel Gram must be positive definite");
}

EigenKernel eigen_kernel(const GeneralOperator& t) {
  EigenKernel out;
  out.nodes = t.eigenvalues();
  const CMat& v = t.adjoint_eigenvectors();
  // gram(i, j) = <v_i, v_j> = v_j^H v_i.
  out.gram = (v.adjoint() * v).transpose();
  out.validate();
  return out;
}

PickTestVerdict contractivity_pick_test(const EigenKernel& kernel, const PlanarDomain& domain,
                                        int sample_count, int max_degree, std::uint64_t seed,
                                        int truncation) {
  kernel.validate();
  for (Complex z : kernel.nodes) domain.require_interior(z, "node");
  const ScalarSampler sampler(domain, kernel.nodes.front(), max_degree, truncation, seed);
  const int n = kernel.size();

  PickTestVerdict verdict;
  verdict.sample_count = sample_count;
  verdict.worst_lambda_min = std::numeric_limits<Real>::infinity();
  for (int idx = 0; idx < sample_count; ++idx) {
    const ScalarSample f = sampler.draw(idx);
    std::vector<Complex> values(n);
    for (int i = 0; i < n; ++i) values[i] = f.eval(kernel.nodes[i]);

    CMat p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        p(i, j) = (1.0 - std::conj(values[i]) * values[j]) * kernel.gram(i, j);
    const auto [lam, vec] = hermitian_min_eig_vec(p);
    verdict.worst_lambda_min = std::min(verdict.worst_lambda_min, lam);
    const Real trace = std::abs(p.trace().real());
    if (lam < -tol::kPsdRel * std::max<Real>(trace, 1e-30) && !verdict.violation_found) {
      verdict.violation_found = true;
      PickTestViolation violation;
      violation.sample_index = idx;
      violation.values = values;
      violation.lambda_min = lam;
      violation.eigenvector = vec;
      verdict.violation = violation;
    }
  }
  return verdict;
}

SchurCertificate schur_certificate_at(const EigenKernel& kernel, const PlanarDomain& domain,
                                      const KernelIndex& index, int truncation) {
  kernel.validate();
  const auto k = TruncatedKernel::make(domain, index, truncation);
  const int n = kernel.size();

  CMat quotient(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex kij = k.eval(kernel.nodes[j], kernel.nodes[i]);
      if (std::abs(kij) <= tol::kKernelQuotientFloor)
        throw DegenerateError("kernel entry vanishes; quotient undefined at this index");
      quotient(i, j) = kernel.gram(i, j) / kij;
    }
  }

  SchurCertificate cert;
  cert.index = index;
  cert.quotient = hermitize(quotient);
  cert.min_eigenvalue = hermitian_min_eig(cert.quotient);

  // Columns a_i with <a_i, a_j> = a_j^H a_i = A(i, j).
  cert.vectors = psd_sqrt(cert.quotient.transpose().eval());

  Real defect = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex kij = k.eval(kernel.nodes[j], kernel.nodes[i]);
      const Complex inner = cert.vectors.col(j).dot(cert.vectors.col(i));
      defect = std::max(defect, std::abs(kernel.gram(i, j) - kij * inner));
    }
  cert.reconstruction_defect = defect;
  return cert;
}

SchurScan schur_certificate(const EigenKernel& kernel, const PlanarDomain& domain,
                            int grid_size, int truncation) {
  kernel.validate();
  if (grid_size < 1) throw ParameterError("grid size must be >= 1");

  SchurScan scan;
  const int points = domain.is_disk() ? 1 : grid_size;
  for (int j = 0; j < points; ++j) {
    const KernelIndex index = domain.is_disk()
                                  ? KernelIndex{}
                                  : KernelIndex::annulus(static_cast<Real>(j) / grid_size);
    Real lam = std::numeric_limits<Real>::quiet_NaN();
    try {
      const SchurCertificate cert = schur_certificate_at(kernel, domain, index, truncation);
      lam = cert.min_eigenvalue;
      const Real trace = std::abs(cert.quotient.trace().real());
      if (!scan.certificate &&
          cert.min_eigenvalue >= -tol::kPsdRel * std::max<Real>(trace, 1e-30))
        scan.certificate = cert;
    } catch (const DegenerateError&) {
      // quotient singular at this index: recorded as NaN in the profile
    }
    scan.grid_profile.push_back(lam);
  }
  return scan;
}

EmbeddingCheck embedding_vectors(const SchurCertificate& cert, const EigenKernel& kernel,
                                 const PlanarDomain& domain, int truncation,
                                 const GeneralOperator* source) {
  kernel.validate();
  const Real trace = std::abs(cert.quotient.trace().real());
  if (cert.min_eigenvalue < -tol::kPsdRel * std::max<Real>(trace, 1e-30))
    throw ParameterError("certificate quotient is not positive semidefinite");

  const auto model = TruncatedHardyModel::spectral(
      TruncatedKernel::make(domain, cert.index, truncation));
  const int d = model.dim();
  const int n = kernel.size();

  EmbeddingCheck out;
  out.vectors = cert.vectors;

  // Embedded eigenvectors Gamma(v_i) = kernel_vec(z_i) (x) a_i, stored as
  // d x n slabs stacked into columns of length d*n.
  CMat embedded(d * n, n);
  std::vector<CVec> kvecs(n);
  for (int i = 0; i < n; ++i) {
    kvecs[i] = model.kernel_vec(kernel.nodes[i]);
    for (int slot = 0; slot < n; ++slot)
      embedded.col(i).segment(slot * d, d) = kvecs[i] * cert.vectors(slot, i);
  }

  Real gram_defect = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex inner = embedded.col(j).dot(embedded.col(i));  // <G v_i, G v_j>
      gram_defect = std::max(gram_defect, std::abs(inner - kernel.gram(i, j)));
    }
  out.gram_defect = gram_defect;

  if (source) {
    if (source->size() != n) throw ParameterError("source size must match the kernel");
    // Standard basis of the source space through its T* eigenvectors (the
    // same columns eigen_kernel consumed, so phases line up).
    const CMat coeff = source->adjoint_eigenvectors().inverse();
    const CMat basis = embedded * coeff;  // columns Gamma(e_j)

    // (M* (x) I) applied slab-wise.
    const CMat mstar = model.mult_matrix().adjoint();
    CMat image(d * n, n);
    for (int j = 0; j < n; ++j)
      for (int slot = 0; slot < n; ++slot)
        image.col(j).segment(slot * d, d) = mstar * basis.col(j).segment(slot * d, d);

    const CMat gram_basis = basis.adjoint() * basis;
    out.compression = gram_basis.ldlt().solve(basis.adjoint() * image);

    const CMat residual = image - basis * out.compression;
    out.invariance_defect = residual.cwiseAbs().maxCoeff();
    out.compression_defect =
        (out.compression - source->matrix().adjoint()).cwiseAbs().maxCoeff();
  }
  return out;
}

}  // namespace planalg
