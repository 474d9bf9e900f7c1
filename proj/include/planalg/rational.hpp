#pragma once

#include <vector>

#include "planalg/domain.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// Dense polynomial over the complex numbers, coefficients in increasing
/// degree order. The zero polynomial is the empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static Polynomial constant(Complex c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({Complex(0, 0), Complex(1, 0)}); }
  static Polynomial from_roots(const std::vector<Complex>& roots);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Complex eval(Complex z) const;
  CMat eval(const CMat& t) const;  // Horner on a square matrix
  Polynomial derivative() const;
  std::vector<Complex> roots() const;  // companion-matrix eigenvalues

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(Complex c) const;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

/// Quotient of polynomials with poles off the closed domain.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction polynomial(Polynomial p);
  static RationalFunction constant(Complex c);
  static RationalFunction identity();
  /// Single Blaschke factor (z - a)/(1 - conj(a) z), |a| < 1.
  static RationalFunction mobius(Complex a);
  /// Unimodular multiple of a product of Blaschke factors.
  static RationalFunction blaschke(const std::vector<Complex>& zeros, Complex phase);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  Complex eval(Complex z) const;
  /// Exact rational derivative via the quotient rule on coefficients.
  Complex deriv(Complex z) const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  /// phi_u composed after this: (f - u)/(1 - conj(u) f).
  RationalFunction mobius_compose(Complex u) const;

  /// Throws PoleError if the denominator vanishes on the closed domain
  /// (margin tol::kPoleMargin).
  void require_pole_free(const PlanarDomain& domain) const;
  bool pole_free(const PlanarDomain& domain) const;

 private:
  Polynomial num_, den_;
};

}  // namespace planalg
