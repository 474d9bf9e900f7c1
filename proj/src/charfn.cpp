#include "planalg/charfn.hpp"

#include <cmath>

#include "planalg/linalg.hpp"
#include "planalg/rng.hpp"

namespace planalg {

namespace {

Complex mobius_at(Complex a, Complex u) { return (u - a) / (1.0 - std::conj(a) * u); }

// The disk model matrix (3.9): coupling mu (1-|z1|^2)^{1/2} (1-|z2|^2)^{1/2}.
CMat2 disk_model_matrix(Complex z1, Complex z2, Complex mu) {
  CMat2 t;
  t << z1, Complex(0, 0),
      mu * std::sqrt((1.0 - std::norm(z1)) * (1.0 - std::norm(z2))), z2;
  return t;
}

}  // namespace

CharFn::CharFn(Complex z1, Complex z2, Complex mu) : z1_(z1), z2_(z2), mu_(mu) {
  if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0)
    throw DomainError("characteristic function nodes must lie in the open disk");
  if (std::abs(mu) > 1.0 + 1e-14) throw ParameterError("|mu| must not exceed 1");
  repeated_ = std::abs(z1 - z2) < 1e-14;
}

Complex CharFn::phi1(Complex u) const { return mobius_at(z1_, u); }
Complex CharFn::phi2(Complex u) const { return mobius_at(z2_, u); }

CMat2 CharFn::eval(Complex u) const {
  if (std::abs(u) > 1.0 + 1e-12) throw DomainError("theta is evaluated on the closed disk");
  const Real root = std::sqrt(std::max<Real>(0.0, 1.0 - std::norm(mu_)));
  CMat2 m;
  if (repeated_) {
    const Complex phi = phi1(u);
    m << root * phi, mu_, std::conj(mu_) * phi * phi, root * phi;
  } else {
    m << root * phi2(u), -mu_, std::conj(mu_) * phi1(u) * phi2(u), root * phi1(u);
  }
  return m;
}

CMat2 CharFn::product_at_node() const {
  const CMat2 t = eval(z1_);
  return t * t.adjoint();
}

UnitaryEquivalence unitary_equiv(Complex mu1, Complex mu2, Complex z1, Complex z2,
                                 bool run_search, int search_budget, std::uint64_t seed) {
  if (std::abs(mu1) > 1.0 + 1e-14 || std::abs(mu2) > 1.0 + 1e-14)
    throw ParameterError("|mu| must not exceed 1");

  UnitaryEquivalence out;
  out.equivalent = std::abs(std::abs(mu1) - std::abs(mu2)) <= 1e-12;

  if (out.equivalent) {
    // Diagonal phase certificate: conjugation rotates mu by exp(i psi).
    Complex phase(1, 0);
    if (std::abs(mu1) > 0 && std::abs(mu2) > 0)
      phase = (mu2 / std::abs(mu2)) / (mu1 / std::abs(mu1));
    CMat2 u = CMat2::Identity();
    u(1, 1) = phase;
    out.certificate = u;
  }

  if (run_search) {
    const CMat2 t1 = disk_model_matrix(z1, z2, mu1);
    const CMat2 t2 = disk_model_matrix(z1, z2, mu2);
    Real best = std::numeric_limits<Real>::infinity();
    for (int i = 0; i < search_budget; ++i) {
      RngStream rng(seed, i);
      const CMat u = haar_unitary(2, rng);
      best = std::min(best, (u * t1 * u.adjoint() - t2).cwiseAbs().maxCoeff());
    }
    out.search_residual = best;
  }
  return out;
}

}  // namespace planalg
