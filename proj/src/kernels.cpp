#include "planalg/kernels.hpp"

#include <cmath>

namespace planalg {

namespace {

// |z|^p exp(i p arg z), principal branch per factor.
Complex principal_pow(Complex z, Real p) {
  if (z == Complex(0, 0)) return p == 0.0 ? Complex(1, 0) : Complex(0, 0);
  const Real m = std::pow(std::abs(z), p);
  const Real t = p * std::arg(z);
  return {m * std::cos(t), m * std::sin(t)};
}

}  // namespace

TruncatedKernel::TruncatedKernel(const PlanarDomain& domain, const KernelIndex& index,
                                 int truncation)
    : domain_(domain), index_(index), truncation_(truncation) {
  index_.validate(domain_);
  if (truncation_ < 1) throw ParameterError("truncation must be positive");
  a_ = index_.a();
  if (domain_.is_disk()) {
    nmin_ = 0;
    nmax_ = truncation_;
    cn_.assign(basis_size(), 1.0);
  } else {
    nmin_ = -truncation_;
    nmax_ = truncation_;
    cn_.resize(basis_size());
    const Real r = domain_.inner_radius();
    for (int n = nmin_; n <= nmax_; ++n)
      cn_[n - nmin_] = 1.0 + std::pow(r, 2.0 * (n + a_) + 1.0);
  }
}

TruncatedKernel TruncatedKernel::make(const PlanarDomain& domain, const KernelIndex& index,
                                      int truncation) {
  return TruncatedKernel(domain, index, truncation);
}

Real TruncatedKernel::basis_norm_sq(int n) const {
  if (n < nmin_ || n > nmax_) throw ParameterError("exponent outside the truncated basis");
  return cn_[n - nmin_];
}

Complex TruncatedKernel::section(int n, Complex z) const {
  return principal_pow(z, n + a_);
}

Complex TruncatedKernel::section_deriv(int n, Complex z) const {
  const Real p = n + a_;
  if (p == 0.0) return {0, 0};
  return p * principal_pow(z, p - 1.0);
}

Complex TruncatedKernel::eval_raw(Complex z, Complex w) const {
  // phi_n(z) conj(phi_n(w)) = M^(n+a) exp(i (n+a) psi) with M = |z||w| and
  // psi = arg z - arg w (per-factor branch, not the wrapped product phase).
  const Real M = std::abs(z) * std::abs(w);
  const Real psi = std::arg(z) - std::arg(w);
  const Complex step = M * Complex(std::cos(psi), std::sin(psi));
  const Complex common =
      std::pow(M, a_) * Complex(std::cos(a_ * psi), std::sin(a_ * psi));

  Complex sum{0, 0};
  Complex up{1, 0};
  for (int n = 0; n <= nmax_; ++n) {
    sum += up / cn_[n - nmin_];
    up *= step;
  }
  if (nmin_ < 0) {
    const Complex inv = Complex(1, 0) / step;
    Complex down = inv;
    for (int n = -1; n >= nmin_; --n) {
      sum += down / cn_[n - nmin_];
      down *= inv;
    }
  }
  return common * sum;
}

Complex TruncatedKernel::eval(Complex z, Complex w) const {
  domain_.require_interior(z, "z");
  domain_.require_interior(w, "w");
  return eval_raw(z, w);
}

Complex TruncatedKernel::dbar_eval(Complex z, Complex w) const {
  domain_.require_interior(z, "z");
  domain_.require_interior(w, "w");
  if (w == Complex(0, 0)) {
    // Disk only; the single surviving term is n = 1 with derivative 1.
    return nmax_ >= 1 ? z / cn_[1 - nmin_] : Complex(0, 0);
  }
  const Real M = std::abs(z) * std::abs(w);
  const Real psi = std::arg(z) - std::arg(w);
  const Complex step = M * Complex(std::cos(psi), std::sin(psi));
  const Complex common =
      std::pow(M, a_) * Complex(std::cos(a_ * psi), std::sin(a_ * psi));

  Complex sum{0, 0};
  Complex up{1, 0};
  for (int n = 0; n <= nmax_; ++n) {
    sum += (n + a_) * up / cn_[n - nmin_];
    up *= step;
  }
  if (nmin_ < 0) {
    const Complex inv = Complex(1, 0) / step;
    Complex down = inv;
    for (int n = -1; n >= nmin_; --n) {
      sum += (n + a_) * down / cn_[n - nmin_];
      down *= inv;
    }
  }
  return common * sum / std::conj(w);
}

Real TruncatedKernel::tail_bound(Complex z, Complex w) const {
  const Real x = std::abs(z) * std::abs(w);
  Real bound = 0;
  if (x < 1.0) bound += std::pow(x, nmax_ + 1 + a_) / (1.0 - x);
  if (nmin_ < 0) {
    const Real r = domain_.inner_radius();
    const Real y = r * r / x;  // < 1 strictly inside the annulus
    if (y < 1.0)
      bound += std::pow(x / (r * r), a_) * std::pow(y, -nmin_ + 1) / (r * (1.0 - y));
  }
  return bound;
}

CVec TruncatedKernel::coord_vector(Complex w) const {
  CVec v(basis_size());
  for (int n = nmin_; n <= nmax_; ++n)
    v(n - nmin_) = std::conj(section(n, w)) / std::sqrt(cn_[n - nmin_]);
  return v;
}

CVec TruncatedKernel::coord_dbar_vector(Complex z) const {
  CVec v(basis_size());
  for (int n = nmin_; n <= nmax_; ++n)
    v(n - nmin_) = std::conj(section_deriv(n, z)) / std::sqrt(cn_[n - nmin_]);
  return v;
}

Real szego_diag(const PlanarDomain& domain, Complex z, int truncation) {
  domain.require_interior(z, "z");
  if (domain.is_disk()) return 1.0 / (1.0 - std::norm(z));
  const auto k = TruncatedKernel::make(domain, KernelIndex::trivial(domain), truncation);
  return k.eval_raw(z, z).real();
}

Complex szego_eval(const PlanarDomain& domain, Complex nu, Complex z, int truncation) {
  domain.require_interior(z, "z");
  if (domain.is_disk()) return 1.0 / (1.0 - nu * std::conj(z));
  const auto k = TruncatedKernel::make(domain, KernelIndex::trivial(domain), truncation);
  return k.eval_raw(nu, z);
}

std::vector<Complex> default_probe_points(const PlanarDomain& domain) {
  if (domain.is_disk())
    return {Complex(0.3, 0.0), Complex(-0.2, 0.4), Complex(0.1, -0.55), Complex(0.62, 0.2)};
  const Real r = domain.inner_radius();
  const Real mid = 0.5 * (r + 1.0);
  const Real hi = 0.25 * r + 0.75;
  return {Complex(mid, 0.0), Complex(0.0, -mid), Complex(-hi, 0.0),
          hi * Complex(std::cos(2.5), std::sin(2.5))};
}

Real verify_reproducing(const TruncatedKernel& k, const BoundaryQuadrature& q,
                        const std::vector<int>& test_exponents,
                        const std::vector<Complex>& probe_points) {
  for (int n : test_exponents)
    if (n < k.min_exponent() || n > k.max_exponent())
      throw ParameterError("test exponent outside the truncation range");

  const std::vector<Complex> probes =
      probe_points.empty() ? default_probe_points(k.domain()) : probe_points;

  Real worst = 0.0;
  for (Complex w : probes) {
    k.domain().require_interior(w, "probe point");
    for (int n : test_exponents) {
      Complex inner{0, 0};
      for (const auto& node : q.nodes)
        inner += node.weight * k.section(n, node.point) * std::conj(k.eval_raw(node.point, w));
      worst = std::max(worst, std::abs(inner - k.section(n, w)));
    }
  }
  return worst;
}

}  // namespace planalg
