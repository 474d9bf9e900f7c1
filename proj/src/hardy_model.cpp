#include "planalg/hardy_model.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "planalg/linalg.hpp"
#include "planalg/pick.hpp"

namespace planalg {

TruncatedHardyModel TruncatedHardyModel::spectral(const TruncatedKernel& kernel) {
  TruncatedHardyModel m;
  m.domain_ = kernel.domain();
  m.sections_ = std::make_shared<TruncatedKernel>(kernel);
  const int nb = kernel.basis_size();

  m.basis_ = CMat::Zero(nb, nb);
  for (int i = 0; i < nb; ++i)
    m.basis_(i, i) = 1.0 / std::sqrt(kernel.basis_norm_sq(kernel.min_exponent() + i));

  // Weighted shift: z phi_n = phi_{n+1}; the top image leaves the space.
  m.mult_ = CMat::Zero(nb, nb);
  for (int i = 0; i + 1 < nb; ++i) {
    const int n = kernel.min_exponent() + i;
    m.mult_(i + 1, i) =
        std::sqrt(kernel.basis_norm_sq(n + 1) / kernel.basis_norm_sq(n));
  }
  return m;
}

Real TruncatedHardyModel::mult_norm() const { return op_norm(mult_); }

Complex TruncatedHardyModel::basis_value(int k, Complex z) const {
  Complex acc{0, 0};
  for (int i = 0; i < basis_.rows(); ++i) {
    if (basis_(i, k) == Complex(0, 0)) continue;
    acc += basis_(i, k) * sections_->section(sections_->min_exponent() + i, z);
  }
  return acc;
}

Complex TruncatedHardyModel::basis_deriv(int k, Complex z) const {
  Complex acc{0, 0};
  for (int i = 0; i < basis_.rows(); ++i) {
    if (basis_(i, k) == Complex(0, 0)) continue;
    acc += basis_(i, k) * sections_->section_deriv(sections_->min_exponent() + i, z);
  }
  return acc;
}

CVec TruncatedHardyModel::kernel_vec(Complex z) const {
  CVec v(dim());
  for (int k = 0; k < dim(); ++k) v(k) = std::conj(basis_value(k, z));
  return v;
}

CVec TruncatedHardyModel::kernel_dbar_vec(Complex z) const {
  CVec v(dim());
  for (int k = 0; k < dim(); ++k) v(k) = std::conj(basis_deriv(k, z));
  return v;
}

OrthoPair gram_schmidt_pair(const TruncatedHardyModel& model, Complex z1, Complex z2) {
  model.domain().require_interior(z1, "z1");
  model.domain().require_interior(z2, "z2");
  if (std::abs(z1 - z2) < 1e-14) throw DegenerateError("Gram-Schmidt pair needs z1 != z2");

  const CVec v1 = model.kernel_vec(z1);
  const CVec v2 = model.kernel_vec(z2);
  const Real k11 = v1.squaredNorm();
  const Real k22 = v2.squaredNorm();
  const Complex k12 = v1.dot(v2);  // <K(.,z2), K(.,z1)> = K(z1,z2)
  const Real det = k11 * k22 - std::norm(k12);
  if (!(det > 1e-12 * k11 * k22))
    throw ConditioningError("near-degenerate kernel Gram for the pair");

  OrthoPair out;
  out.e = v1 / std::sqrt(k11);
  out.f = (k11 * v2 - k12 * v1) / (std::sqrt(k11) * std::sqrt(det));
  return out;
}

OrthoPair gram_schmidt_jet(const TruncatedHardyModel& model, Complex z) {
  model.domain().require_interior(z, "z");
  const CVec v = model.kernel_vec(z);
  const CVec d = model.kernel_dbar_vec(z);
  const Real kzz = v.squaredNorm();
  const Real dd = d.squaredNorm();
  const Complex dv = v.dot(d);  // <dbar K, K>
  const Real det = kzz * dd - std::norm(dv);
  if (!(det > 1e-12 * kzz * dd))
    throw ConditioningError("near-degenerate jet Gram");

  OrthoPair out;
  out.e = v / std::sqrt(kzz);
  out.f = (kzz * d - dv * v) / (std::sqrt(kzz) * std::sqrt(det));
  return out;
}

namespace {

CVec stack(const CVec& top, const CVec& bottom) {
  CVec v(top.size() + bottom.size());
  v << top, bottom;
  return v;
}

}  // namespace

SubspacePair build_subspace_M(const TruncatedHardyModel& model, Complex z1, Complex z2,
                              Complex mu) {
  if (std::abs(mu) > 1.0 + 1e-14) throw ParameterError("|mu| must not exceed 1");
  const OrthoPair gs = gram_schmidt_pair(model, z1, z2);
  const CVec e2 = model.kernel_vec(z2).normalized();
  const CVec zero = CVec::Zero(model.dim());

  SubspacePair out;
  out.h1 = stack(zero, gs.e);
  out.h2 = stack(std::sqrt(std::max<Real>(0.0, 1.0 - std::norm(mu))) * e2, mu * gs.f);
  return out;
}

SubspacePair build_subspace_N(const TruncatedHardyModel& model, Complex z, Complex lambda) {
  if (std::abs(lambda) > 1.0 + 1e-14) throw ParameterError("|lambda| must not exceed 1");
  const OrthoPair gs = gram_schmidt_jet(model, z);
  const CVec zero = CVec::Zero(model.dim());

  SubspacePair out;
  out.h1 = stack(zero, gs.e);
  out.h2 = stack(std::sqrt(std::max<Real>(0.0, 1.0 - std::norm(lambda))) * gs.e, lambda * gs.f);
  return out;
}

Compression compress(const TruncatedHardyModel& model, const CVec& v1, const CVec& v2) {
  const int d = model.dim();
  if (v1.size() != 2 * d || v2.size() != 2 * d)
    throw ParameterError("subspace vectors must live in the doubled space");

  Compression out;
  out.orthonormal_defect =
      std::max({std::abs(v1.squaredNorm() - 1.0), std::abs(v2.squaredNorm() - 1.0),
                std::abs(v1.dot(v2))});
  if (out.orthonormal_defect > 1e-8)
    throw ParameterError("subspace vectors are not orthonormal");

  const CMat mstar = model.mult_matrix().adjoint();
  auto apply = [&](const CVec& v) {
    CVec w(2 * d);
    w.head(d) = mstar * v.head(d);
    w.tail(d) = mstar * v.tail(d);
    return w;
  };
  const CVec w1 = apply(v1), w2 = apply(v2);

  CMat2 x;
  x << v1.dot(w1), v1.dot(w2), v2.dot(w1), v2.dot(w2);

  const CVec r1 = w1 - v1 * x(0, 0) - v2 * x(1, 0);
  const CVec r2 = w2 - v1 * x(0, 1) - v2 * x(1, 1);
  out.invariance_defect = std::max(r1.norm(), r2.norm());
  if (out.invariance_defect > tol::kCoinvarianceDefect)
    throw CoinvarianceError("span is not co-invariant within tolerance");
  out.matrix = x;
  return out;
}

CMat2 predicted_pair_compression(const TruncatedHardyModel& model, Complex z1, Complex z2,
                                 Complex mu) {
  const CVec v1 = model.kernel_vec(z1);
  const CVec v2 = model.kernel_vec(z2);
  const Real k11 = v1.squaredNorm();
  const Real k22 = v2.squaredNorm();
  const Complex k12 = v1.dot(v2);
  const Real det = k11 * k22 - std::norm(k12);
  CMat2 x;
  x << std::conj(z1), mu * (std::conj(z2) - std::conj(z1)) * k12 / std::sqrt(det),
      Complex(0, 0), std::conj(z2);
  return x;
}

CMat2 predicted_jet_compression(const TruncatedHardyModel& model, Complex z, Complex lambda) {
  CMat2 x;
  x << std::conj(z), lambda * t_parameter(model, z), Complex(0, 0), std::conj(z);
  return x;
}

Real t_parameter(const TruncatedHardyModel& model, Complex z) {
  const CVec v = model.kernel_vec(z);
  const CVec d = model.kernel_dbar_vec(z);
  const Real kzz = v.squaredNorm();
  const Real e = kzz * d.squaredNorm() - std::norm(v.dot(d));
  if (!(e > 0)) throw ConditioningError("jet Gram determinant is not positive");
  return kzz / std::sqrt(e);
}

Real s_parameter(const TruncatedHardyModel& model, Complex z1, Complex z2) {
  const CVec v1 = model.kernel_vec(z1);
  const CVec v2 = model.kernel_vec(z2);
  const Real det = v1.squaredNorm() * v2.squaredNorm() - std::norm(v1.dot(v2));
  if (!(det > 0)) throw ConditioningError("pair Gram determinant is not positive");
  return std::abs(v1.dot(v2)) / std::sqrt(det);
}

KernelIndex alpha0_search(const PlanarDomain& domain, Complex z1, Complex z2, int grid_size,
                          int truncation) {
  if (domain.is_disk()) return KernelIndex{};
  return extremal_s(domain, z1, z2, grid_size, truncation).alpha0;
}

TruncatedHardyModel weighted_hardy(const PlanarDomain& domain, Complex z,
                                   const BoundaryQuadrature& quadrature, int truncation) {
  domain.require_interior(z, "z");
  const auto sections = TruncatedKernel::make(domain, KernelIndex::trivial(domain), truncation);
  // One extra exponent so the top shift image can be projected back rather
  // than dropped; an oblique truncation would push the multiplication norm
  // past 1.
  const auto extended =
      TruncatedKernel::make(domain, KernelIndex::trivial(domain), truncation + 1);
  const int nb = sections.basis_size();
  const int ext = nb + 1;
  const int nq = static_cast<int>(quadrature.nodes.size());

  auto ext_norm_sq = [&](int n) { return extended.basis_norm_sq(n); };

  // Row q: sqrt(weight_q |Kszego(nu_q, z)|^2) * prescaled sections at nu_q,
  // over the extended exponent list nmin .. nmax + 1.
  CMat phi(nq, ext);
  for (int q = 0; q < nq; ++q) {
    const auto& node = quadrature.nodes[q];
    const Real w = node.weight * std::norm(sections.eval_raw(node.point, z));
    const Real sw = std::sqrt(w);
    for (int j = 0; j < ext; ++j) {
      const int n = sections.min_exponent() + j;
      phi(q, j) = sw * extended.section(n, node.point) / std::sqrt(ext_norm_sq(n));
    }
  }

  const CMat gram_ext = hermitize(phi.adjoint() * phi);
  const CMat gram = gram_ext.topLeftCorner(nb, nb);
  Eigen::SelfAdjointEigenSolver<CMat> es(gram);
  const RVec vals = es.eigenvalues();
  const Real vmax = vals.maxCoeff();
  std::vector<int> keep;
  for (int i = 0; i < nb; ++i)
    if (vals(i) > vmax / tol::kWeightedGramCond) keep.push_back(i);
  if (static_cast<int>(keep.size()) < 2)
    throw ConditioningError("weighted Gram is too ill-conditioned; reduce the truncation");

  const int dim = static_cast<int>(keep.size());
  CMat b(nb, dim);  // prescaled-coordinate orthonormal basis
  for (int k = 0; k < dim; ++k) b.col(k) = es.eigenvectors().col(keep[k]) / std::sqrt(vals(keep[k]));

  // Full shift into the extended coordinates.
  CMat shift = CMat::Zero(ext, nb);
  for (int i = 0; i < nb; ++i) {
    const int n = sections.min_exponent() + i;
    shift(i + 1, i) = std::sqrt(ext_norm_sq(n + 1) / ext_norm_sq(n));
  }

  TruncatedHardyModel m;
  m.domain_ = domain;
  m.sections_ = std::make_shared<TruncatedKernel>(sections);
  // <M b_l, b_k> over the extended Gram: the exact compression of M.
  m.mult_ = b.adjoint() * gram_ext.topRows(nb) * (shift * b);

  // Stored basis carries the prescale back into raw section coefficients.
  m.basis_ = CMat::Zero(nb, dim);
  for (int j = 0; j < nb; ++j) {
    const int n = sections.min_exponent() + j;
    m.basis_.row(j) = b.row(j) / std::sqrt(sections.basis_norm_sq(n));
  }
  return m;
}

namespace {

// f(T) for the lower-triangular 2x2 forms used by the model operators.
CMat2 rational_on_lower2(const CMat2& t, const RationalFunction& f) {
  const Complex z1 = t(0, 0), z2 = t(1, 1), c = t(1, 0);
  CMat2 out;
  if (std::abs(z1 - z2) > 1e-9) {
    out << f.eval(z1), Complex(0, 0), c * (f.eval(z1) - f.eval(z2)) / (z1 - z2), f.eval(z2);
  } else {
    out << f.eval(z1), Complex(0, 0), c * f.deriv(z1), f.eval(z1);
  }
  return out;
}

}  // namespace

Real verify_dilation(const TruncatedHardyModel& model, const CVec& v1, const CVec& v2,
                     const CMat2& target, const std::vector<RationalFunction>& test_functions) {
  const int d = model.dim();
  CMat v(2 * d, 2);
  v.col(0) = v1;
  v.col(1) = v2;

  if (std::abs(target(0, 1)) > 1e-12)
    throw ParameterError("target must be lower triangular");

  Real worst = 0;
  for (const auto& f : test_functions) {
    f.require_pole_free(model.domain());
    const CMat fm_num = f.num().eval(model.mult_matrix());
    const CMat fm_den = f.den().eval(model.mult_matrix());
    Eigen::PartialPivLU<CMat> lu(fm_den);
    if (std::abs(lu.determinant()) < 1e-300) throw PoleError("q(M) is singular");
    const CMat fm = fm_num * lu.inverse();

    CMat big = CMat::Zero(2 * d, 2 * d);
    big.topLeftCorner(d, d) = fm;
    big.bottomRightCorner(d, d) = fm;
    const CMat compressed = v.adjoint() * big * v;
    const CMat2 expected = rational_on_lower2(target, f);
    worst = std::max(worst, (compressed - expected).cwiseAbs().maxCoeff());
  }
  return worst;
}

DilationWitness dilation_witness_pair(const TruncatedHardyModel& model,
                                      const ModelOperatorA& op) {
  const CVec k1 = model.kernel_vec(op.z1);
  const CVec k2 = model.kernel_vec(op.z2);
  const Complex k12 = k1.dot(k2);
  const Real det = k1.squaredNorm() * k2.squaredNorm() - std::norm(k12);
  if (!(det > 0)) throw ConditioningError("pair Gram determinant is not positive");

  // Subspace parameter chosen so the compression reproduces A* exactly,
  // absorbing the phase of K(z1,z2).
  const Complex numer = op.s * std::conj(op.mu) * (std::conj(op.z1) - std::conj(op.z2));
  const Complex denom = (std::conj(op.z2) - std::conj(op.z1)) * k12 / std::sqrt(det);
  const Complex mu_sub = numer / denom;
  if (std::abs(mu_sub) > 1.0 + 1e-9)
    throw ParameterError("operator is not contractive for this kernel: s|mu| exceeds s_K");

  DilationWitness w;
  w.vectors = build_subspace_M(model, op.z1, op.z2,
                               std::abs(mu_sub) > 1.0 ? mu_sub / std::abs(mu_sub) : mu_sub);
  const Compression c = compress(model, w.vectors.h1, w.vectors.h2);
  w.compression = c.matrix;
  w.invariance_defect = c.invariance_defect;
  w.target = op.matrix();
  const CMat2 adj = w.target.adjoint();
  w.entrywise_defect = (w.compression - adj).cwiseAbs().maxCoeff();
  w.modulus_defect = (w.compression.cwiseAbs() - adj.cwiseAbs()).cwiseAbs().maxCoeff();
  return w;
}

DilationWitness dilation_witness_jet(const TruncatedHardyModel& model,
                                     const ModelOperatorB& op) {
  const Real tk = t_parameter(model, op.z);
  const Complex lambda_sub = op.t * std::conj(op.lambda) / tk;
  if (std::abs(lambda_sub) > 1.0 + 1e-9)
    throw ParameterError("operator is not contractive for this kernel: t|lambda| exceeds t_K");

  DilationWitness w;
  w.vectors = build_subspace_N(
      model, op.z, std::abs(lambda_sub) > 1.0 ? lambda_sub / std::abs(lambda_sub) : lambda_sub);
  const Compression c = compress(model, w.vectors.h1, w.vectors.h2);
  w.compression = c.matrix;
  w.invariance_defect = c.invariance_defect;
  w.target = op.matrix();
  const CMat2 adj = w.target.adjoint();
  w.entrywise_defect = (w.compression - adj).cwiseAbs().maxCoeff();
  w.modulus_defect = (w.compression.cwiseAbs() - adj.cwiseAbs()).cwiseAbs().maxCoeff();
  return w;
}

}  // namespace planalg
