#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "planalg/charfn.hpp"
#include "planalg/hardy_model.hpp"
#include "planalg/linalg.hpp"
#include "planalg/rational.hpp"
#include "planalg/rng.hpp"

using namespace planalg;

TEST_CASE("repeated-node theta at the origin") {
  const Complex lambda(0.4, 0.3);
  const CharFn c(0.0, 0.0, lambda);
  const Complex u(0.3, -0.5);
  const CMat2 t = c.eval(u);
  const Real root = std::sqrt(1.0 - std::norm(lambda));
  CHECK(std::abs(t(0, 0) - root * u) < 1e-14);
  CHECK(std::abs(t(0, 1) - lambda) < 1e-14);
  CHECK(std::abs(t(1, 0) - std::conj(lambda) * u * u) < 1e-14);
  CHECK(std::abs(t(1, 1) - root * u) < 1e-14);
}

TEST_CASE("theta is inner on the boundary") {
  const CharFn c(Complex(0.3, 0.1), Complex(-0.2, 0.4), Complex(0.6, -0.3));
  Real worst = 0;
  for (int j = 0; j < 256; ++j) {
    const Complex u = std::polar(1.0, 2.0 * kPi * j / 256);
    const CMat2 t = c.eval(u);
    worst = std::max(worst, (t.adjoint() * t - CMat2::Identity()).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("mu = 0 theta is the diagonal of Mobius factors") {
  const CharFn c(Complex(0.3, 0), Complex(-0.1, 0.2), 0.0);
  const Complex u(0.2, 0.6);
  const CMat2 t = c.eval(u);
  CHECK(std::abs(t(0, 0) - c.phi2(u)) < 1e-14);
  CHECK(std::abs(t(1, 1) - c.phi1(u)) < 1e-14);
  CHECK(std::abs(t(0, 1)) < 1e-14);
  CHECK(std::abs(t(1, 0)) < 1e-14);
}

TEST_CASE("theta rejects points outside the closed disk") {
  const CharFn c(0.2, 0.3, 0.5);
  CHECK_THROWS_AS(c.eval(Complex(1.2, 0)), DomainError);
}

TEST_CASE("product at the node is rank one with the invariant value") {
  const Complex z1(0.3, 0.1), z2(-0.25, 0.2);
  SUBCASE("distinct nodes") {
    for (Complex mu : {Complex(0, 0), Complex(0.7, 0.2), Complex(1, 0)}) {
      if (std::abs(mu) > 1) continue;
      const CharFn c(z1, z2, mu);
      const CMat2 p = c.product_at_node();
      CHECK(std::abs(p(1, 0)) < 1e-12);
      CHECK(std::abs(p(0, 1)) < 1e-12);
      CHECK(std::abs(p(1, 1)) < 1e-12);
      const Real omega_sq = std::norm(c.phi2(z1));
      const Real expected = (1.0 - std::norm(mu)) * omega_sq + std::norm(mu);
      CHECK(std::abs(p(0, 0) - Complex(expected, 0)) < 1e-12);
      if (std::abs(mu) == 1.0) CHECK(std::abs(p(0, 0) - Complex(1, 0)) < 1e-12);
    }
  }
  SUBCASE("repeated node: nonzero singular value is |mu|^2") {
    const CharFn c(z1, z1, Complex(0.45, -0.6));
    const CMat2 p = c.product_at_node();
    Eigen::JacobiSVD<CMat> svd(p);
    CHECK(svd.singularValues()(0) == doctest::Approx(std::norm(c.mu())).epsilon(1e-12));
    CHECK(svd.singularValues()(1) < 1e-14);
  }
}

TEST_CASE("phase covariance: theta of mu e^{i psi} via constant diagonal unitaries") {
  const Complex z1(0.25, 0), z2(-0.3, 0.15);
  const Complex mu(0.5, 0.2);
  const Real psi = 1.234;
  const CharFn base(z1, z2, mu);
  const CharFn rotated(z1, z2, mu * std::polar(1.0, psi));
  CMat2 d1 = CMat2::Zero(), d2 = CMat2::Zero();
  d1(0, 0) = std::polar(1.0, psi / 2.0);
  d1(1, 1) = std::polar(1.0, -psi / 2.0);
  d2(0, 0) = std::polar(1.0, -psi / 2.0);
  d2(1, 1) = std::polar(1.0, psi / 2.0);
  for (Complex u : {Complex(0.4, 0.2), Complex(-0.7, 0.1), std::polar(1.0, 2.2)}) {
    const CMat2 lhs = rotated.eval(u);
    const CMat2 rhs = d1 * base.eval(u) * d2;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("det theta vanishes exactly at the nodes") {
  const Complex z1(0.3, 0.1), z2(-0.2, 0.4);
  const CharFn c(z1, z2, Complex(0.6, 0.1));
  const Real root = 1.0 - std::norm(c.mu());
  // det theta = (1-|mu|^2) phi1 phi2 + mu conj(mu) phi1 phi2 = phi1 phi2.
  (void)root;
  CHECK(std::abs(c.eval(z1).determinant()) < 1e-12);
  CHECK(std::abs(c.eval(z2).determinant()) < 1e-12);
  // Root-find det theta on a grid: the zeros inside the disk are the nodes.
  for (Real x = -0.8; x <= 0.8; x += 0.2) {
    for (Real y = -0.8; y <= 0.8; y += 0.2) {
      const Complex u(x, y);
      if (std::abs(u) > 0.95) continue;
      if (std::abs(u - z1) < 0.1 || std::abs(u - z2) < 0.1) continue;
      CHECK(std::abs(c.eval(u).determinant()) > 1e-8);
    }
  }
  // det theta collapses to phi1 phi2 algebraically, so its numerator roots
  // are exactly the nodes.
  const auto det_fn = RationalFunction::mobius(z1) * RationalFunction::mobius(z2);
  for (Complex u : {Complex(0.2, 0.3), Complex(-0.5, 0.1)})
    CHECK(std::abs(c.eval(u).determinant() - det_fn.eval(u)) < 1e-12);
  const auto roots = det_fn.num().roots();
  REQUIRE(roots.size() == 2);
  for (Complex node : {z1, z2}) {
    Real best = 1e9;
    for (Complex r : roots) best = std::min(best, std::abs(r - node));
    CHECK(best < 1e-8);
  }
}

TEST_CASE("range of theta satisfies the subspace orthogonality condition") {
  // Columns of theta(u) pair with the dilation subspace: for eta in H^2 + H^2,
  // (1-|mu|^2)^{1/2} phi1(z2) f(z2) + mu g(z2) = 0 for (f;g) = theta(eta).
  const Complex z1(0.3, 0), z2(-0.2, 0.1);
  const Complex mu(0.55, 0.25);
  const CharFn c(z1, z2, mu);
  const Real root = std::sqrt(1.0 - std::norm(mu));
  const CMat2 t = c.eval(z2);
  for (int col = 0; col < 2; ++col) {
    const Complex f = t(0, col), g = t(1, col);
    CHECK(std::abs(root * c.phi1(z2) * f + mu * g) < 1e-10);
  }
  // Range samples theta (eta1; eta2) with arbitrary values at z2.
  RngStream rng(8, 0);
  for (int k = 0; k < 10; ++k) {
    const Complex eta1 = rng.cgauss(), eta2 = rng.cgauss();
    const Complex f = t(0, 0) * eta1 + t(0, 1) * eta2;
    const Complex g = t(1, 0) * eta1 + t(1, 1) * eta2;
    CHECK(std::abs(root * c.phi1(z2) * f + mu * g) < 1e-10);
  }
}

TEST_CASE("unitary equivalence truth table and certificates") {
  const Complex z1(0.3, 0), z2(-0.2, 0.1);

  const auto same = unitary_equiv(Complex(0.3, 0), std::polar(0.3, 1.1), z1, z2);
  CHECK(same.equivalent);
  REQUIRE(same.certificate.has_value());
  // The certificate conjugates T_mu1 to T_mu2 exactly.
  CMat2 t1, t2;
  const Real kappa = std::sqrt((1 - std::norm(z1)) * (1 - std::norm(z2)));
  t1 << z1, Complex(0, 0), Complex(0.3, 0) * kappa, z2;
  t2 << z1, Complex(0, 0), std::polar(0.3, 1.1) * kappa, z2;
  const CMat2 u = *same.certificate;
  CHECK((u * t1 * u.adjoint() - t2).cwiseAbs().maxCoeff() < 1e-14);

  const auto diff = unitary_equiv(Complex(0.3, 0), Complex(0.4, 0), z1, z2, true, 4000, 3);
  CHECK(!diff.equivalent);
  REQUIRE(diff.search_residual.has_value());
  CHECK(*diff.search_residual > 1e-3);

  const auto trivial = unitary_equiv(Complex(0.5, 0.1), Complex(0.5, 0.1), z1, z2);
  CHECK(trivial.equivalent);
  CHECK((*trivial.certificate - CMat2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("theta coincidence across the diagonal family at matched |mu|") {
  // Diagonal unitaries U, V multiply entry (i,j) by a phase u_i + v_j, so
  // coincidence in the diagonal family is equivalent to matching entry
  // moduli together with the diagonal cross-ratio t11 t22 / (t12 t21).
  const Complex z1(0.3, 0), z2(-0.2, 0.1);
  const CharFn theta1(z1, z2, Complex(0.5, 0));
  const CharFn theta2(z1, z2, std::polar(0.5, 2.0));
  const CharFn theta3(z1, z2, Complex(0.62, 0));

  auto coincidence = [&](const CharFn& a, const CharFn& b) {
    Real sup = 0;
    for (int j = 0; j < 64; ++j) {
      const Complex bp = std::polar(1.0, 2.0 * kPi * j / 64 + 0.01);
      const CMat2 ta = a.eval(bp), tb = b.eval(bp);
      Real defect = (ta.cwiseAbs() - tb.cwiseAbs()).cwiseAbs().maxCoeff();
      const Complex cross_a = ta(0, 0) * ta(1, 1) / (ta(0, 1) * ta(1, 0));
      const Complex cross_b = tb(0, 0) * tb(1, 1) / (tb(0, 1) * tb(1, 0));
      defect = std::max(defect, std::abs(cross_a - cross_b));
      sup = std::max(sup, defect);
    }
    return sup;
  };
  CHECK(coincidence(theta1, theta2) < 1e-8);
  CHECK(coincidence(theta1, theta3) > 5e-2);
}
