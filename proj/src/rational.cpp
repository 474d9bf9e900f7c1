#include "planalg/rational.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace planalg {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0, 0)) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
  Polynomial p({Complex(1, 0)});
  for (Complex r : roots) p = p * Polynomial({-r, Complex(1, 0)});
  return p;
}

Complex Polynomial::eval(Complex z) const {
  Complex acc{0, 0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CMat Polynomial::eval(const CMat& t) const {
  const Eigen::Index n = t.rows();
  CMat acc = CMat::Zero(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it * CMat::Identity(n, n);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Real(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

std::vector<Complex> Polynomial::roots() const {
  const int d = degree();
  if (d <= 0) return {};
  CMat companion = CMat::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs_[i] / coeffs_[d];
  Eigen::ComplexEigenSolver<CMat> es(companion, false);
  std::vector<Complex> out(d);
  for (int i = 0; i < d; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Complex> c(std::max(coeffs_.size(), o.coeffs_.size()), Complex(0, 0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex(-1, 0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Complex> c(coeffs_.size() + o.coeffs_.size() - 1, Complex(0, 0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(Complex s) const {
  std::vector<Complex> c = coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ParameterError("rational function with zero denominator");
}

RationalFunction RationalFunction::polynomial(Polynomial p) {
  return RationalFunction(std::move(p), Polynomial::constant(1));
}

RationalFunction RationalFunction::constant(Complex c) {
  return polynomial(Polynomial::constant(c));
}

RationalFunction RationalFunction::identity() { return polynomial(Polynomial::identity()); }

RationalFunction RationalFunction::mobius(Complex a) {
  if (std::abs(a) >= 1.0) throw ParameterError("Blaschke zero must be inside the disk");
  return RationalFunction(Polynomial({-a, Complex(1, 0)}),
                          Polynomial({Complex(1, 0), -std::conj(a)}));
}

RationalFunction RationalFunction::blaschke(const std::vector<Complex>& zeros, Complex phase) {
  RationalFunction b = constant(phase);
  for (Complex a : zeros) b = b * mobius(a);
  return b;
}

Complex RationalFunction::eval(Complex z) const { return num_.eval(z) / den_.eval(z); }

Complex RationalFunction::deriv(Complex z) const {
  const Complex p = num_.eval(z), q = den_.eval(z);
  const Complex dp = num_.derivative().eval(z), dq = den_.derivative().eval(z);
  return (dp * q - p * dq) / (q * q);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::mobius_compose(Complex u) const {
  if (std::abs(u) >= 1.0) throw ParameterError("Mobius parameter must be inside the disk");
  return RationalFunction(num_ - den_ * u, den_ - num_ * std::conj(u));
}

bool RationalFunction::pole_free(const PlanarDomain& domain) const {
  if (den_.degree() <= 0) return true;
  for (Complex root : den_.roots()) {
    const Real m = std::abs(root);
    if (domain.is_disk()) {
      if (m <= 1.0 + tol::kPoleMargin) return false;
    } else {
      if (m >= domain.inner_radius() - tol::kPoleMargin && m <= 1.0 + tol::kPoleMargin)
        return false;
    }
  }
  return true;
}

void RationalFunction::require_pole_free(const PlanarDomain& domain) const {
  if (!pole_free(domain)) throw PoleError("rational function has a pole on the closed domain");
}

}  // namespace planalg
