#include <doctest.h>

#include <cmath>

#include "bateman/funcalg.hpp"
#include "bateman/verify.hpp"
#include "oracles.hpp"

using namespace bateman;
using namespace bateman::funcalg;

namespace {
const SystemParams kP = SystemParams::defaults();  // hbar=1, gamma=1/2, omega=1

Complex fd_radial_derivative(const GphFunction& f, double r, double phi) {
  const double h = 1e-4;
  return (eval_point(f, r - 2 * h, phi) - 8.0 * eval_point(f, r - h, phi) +
          8.0 * eval_point(f, r + h, phi) - eval_point(f, r + 2 * h, phi)) /
         (12.0 * h);
}
}  // namespace

TEST_CASE("canonical form merges and prunes atoms") {
  const GphFunction f({Atom{Complex(1.0, 0.0), 0, 2, 1.0, +2},
                       Atom{Complex(2.0, 0.0), 0, 2, 1.0, +2},
                       Atom{Complex(0.0, 0.0), 1, 1, 0.0, +2}});
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms()[0].coeff == Complex(3.0, 0.0));
  CHECK((GphFunction::atom(1.0, 0, 0) - GphFunction::atom(1.0, 0, 0)).is_zero());
}

TEST_CASE("atom constraints") {
  CHECK_THROWS_AS(GphFunction::atom(1.0, 0, 0, 0.0, -2), DomainError);
  CHECK_THROWS_AS(GphFunction::atom(1.0, 0, 0, -1.0, +2), DomainError);
  CHECK_THROWS_AS(GphFunction::atom(1.0, 0, 0, 1.0, 3), DomainError);
}

TEST_CASE("H0 multiplies a sector by hbar omega l") {
  const GphFunction psi = GphFunction::atom(1.0, 2, 2, 1.0);
  const GphFunction h0 = apply_operator(OperatorId::H0, psi, kP);
  REQUIRE(h0.terms().size() == 1);
  CHECK(h0.terms()[0].coeff == Complex(2.0, 0.0));
  CHECK(h0.terms()[0].a == 2);
}

TEST_CASE("H on a pure-power atom gives the discrete complex eigenvalue") {
  // l0 = 2, n = 1: a = |l0| + 2n = 4
  const GphFunction f = GphFunction::atom(1.0, 2, 4, 0.0);
  const GphFunction hf = apply_operator(OperatorId::H, f, kP);
  const Complex expected(kP.hbar * kP.omega * 2.0, kP.hbar * kP.gamma * 5.0);
  CHECK((hf - f.scaled(expected)).is_zero());
}

TEST_CASE("HI acts on the unit Gaussian as i g h (1 - 2 r^2)") {
  const GphFunction psi = GphFunction::atom(1.0, 0, 0, 1.0);
  const GphFunction hi = apply_operator(OperatorId::HI, psi, kP);
  REQUIRE(hi.terms().size() == 2);
  const Complex igh(0.0, kP.gamma * kP.hbar);
  CHECK(hi.terms()[0].a == 0);
  CHECK(hi.terms()[0].coeff == igh);
  CHECK(hi.terms()[1].a == 2);
  CHECK(hi.terms()[1].coeff == -2.0 * igh);

  // pointwise finite-difference cross-check of i g h (r d/dr + 1)
  for (double r : {0.5, 1.0, 2.0}) {
    const Complex fd =
        igh * (r * fd_radial_derivative(psi, r, 0.3) + eval_point(psi, r, 0.3));
    CHECK(std::abs(eval_point(hi, r, 0.3) - fd) < 1e-10);
  }
}

TEST_CASE("radial momentum operator matches finite differences") {
  const GphFunction psi = GphFunction::atom(Complex(0.4, -0.3), 1, 3, 0.7);
  const GphFunction pr = apply_operator(OperatorId::Pr, psi, kP);
  for (double r : {0.6, 1.4}) {
    const Complex fd = Complex(0.0, -kP.hbar) *
                       (fd_radial_derivative(psi, r, 1.0) +
                        eval_point(psi, r, 1.0) / (2.0 * r));
    CHECK(std::abs(eval_point(pr, r, 1.0) - fd) < 1e-9);
  }
}

TEST_CASE("inner products in gamma closed form") {
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  CHECK(std::abs(inner_product(g, g) - kPi / 2.0) < 1e-15);

  const GphFunction r2 = GphFunction::atom(1.0, 0, 2, 0.0);
  CHECK(std::abs(inner_product(r2, g) - kPi) < 1e-14);

  const GphFunction a1 = GphFunction::atom(1.0, 1, 1, 1.0);
  const GphFunction a2 = GphFunction::atom(1.0, 2, 2, 1.0);
  CHECK(inner_product(a1, a2) == Complex(0.0, 0.0));
}

TEST_CASE("inner product rejects non-integrable pairs") {
  const GphFunction p1 = GphFunction::atom(1.0, 0, 1, 0.0);
  CHECK_THROWS_AS(inner_product(p1, p1), DivergenceError);
  const GphFunction flat = time_reverse(GphFunction::atom(1.0, 0, 0, 1.0));
  CHECK_THROWS_AS(inner_product(flat, flat), DivergenceError);
}

TEST_CASE("taylor coefficients of the radial series") {
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  CHECK(taylor_coeff(g, 0, 2) == Complex(-1.0, 0.0));
  CHECK(taylor_coeff(g, 0, 1) == Complex(0.0, 0.0));
  const GphFunction f = GphFunction::atom(1.0, 3, 3, 0.5);
  CHECK(std::abs(taylor_coeff(f, 3, 5) - Complex(-0.5, 0.0)) < 1e-16);

  // series-multiplication oracle on a two-atom sector
  const GphFunction mix = GphFunction({Atom{Complex(0.3, 0.7), 2, 2, 1.5, +2},
                                       Atom{Complex(-1.1, 0.2), 2, 4, 0.25, +2}});
  auto s1 = oracles::radial_series(Complex(0.3, 0.7), 2, 1.5, 10);
  auto s2 = oracles::radial_series(Complex(-1.1, 0.2), 4, 0.25, 10);
  for (int k = 0; k <= 10; ++k)
    CHECK(std::abs(taylor_coeff(mix, 2, k) - (s1[k] + s2[k])) < 1e-14);
}

TEST_CASE("taylor coefficients of flat and singular sectors") {
  const GphFunction flat = time_reverse(GphFunction::atom(1.0, 0, 0, 1.0));
  CHECK(taylor_coeff(flat, 0, 3) == Complex(0.0, 0.0));
  const GphFunction sing = GphFunction::atom(1.0, 0, -2, 1.0);
  CHECK_THROWS_AS(taylor_coeff(sing, 0, 0), SingularEvaluationError);
}

TEST_CASE("moments in gamma closed form") {
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  CHECK(std::abs(moment(g, 0, 2) - 0.5) < 1e-15);
  CHECK(std::abs(moment(g, 0, 0) - 0.5) < 1e-15);
  const GphFunction f = GphFunction::atom(1.0, 1, 1, 2.0);
  CHECK(std::abs(moment(f, 1, 1) - 0.125) < 1e-15);
  const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
  CHECK_THROWS_AS(moment(poly, 0, 0), DivergenceError);
}

TEST_CASE("evolve rescales atoms per the dilation flow") {
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  const GphFunction moved = evolve(g, 1.0, kP);
  REQUIRE(moved.terms().size() == 1);
  CHECK(std::abs(moved.terms()[0].coeff - std::exp(0.5)) < 1e-15);
  CHECK(std::abs(moved.terms()[0].beta - std::exp(1.0)) < 1e-15);

  // t = 0 is the identity, exactly
  CHECK((evolve(g, 0.0, kP) - g).is_zero());

  // unitarity in closed form at every time
  for (double t : {-2.0, 0.7, 3.5})
    CHECK(std::abs(inner_product(evolve(g, t, kP), evolve(g, t, kP)) -
                   kPi / 2.0) < 1e-14);
}

TEST_CASE("evolve group law holds pointwise to rounding") {
  const GphFunction f = verify::random_smooth_function(42, 2, 2, false);
  const GphFunction once = evolve(f, 1.0, kP);
  const GphFunction twice = evolve(evolve(f, 0.3, kP), 0.7, kP);
  for (double r : {0.4, 1.1, 2.3}) {
    const Complex a = eval_point(once, r, 0.9);
    const Complex b = eval_point(twice, r, 0.9);
    CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("time reversal transforms atoms by weighted inversion") {
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  const GphFunction tg = time_reverse(g);
  REQUIRE(tg.terms().size() == 1);
  CHECK(tg.terms()[0].a == -2);
  CHECK(tg.terms()[0].beta == 1.0);
  CHECK(tg.terms()[0].sigma == -2);

  // pointwise oracle: (T psi)(r, phi) = r^-2 conj(psi)(1/r, -phi)
  for (auto [r, ang] : {std::pair{0.5, 0.0}, std::pair{2.0, 1.0}}) {
    const Complex want =
        std::conj(eval_point(g, 1.0 / r, -ang)) / (r * r);
    CHECK(std::abs(eval_point(tg, r, ang) - want) < 1e-15);
  }

  const GphFunction h = GphFunction::atom(Complex(0.0, 1.0), 1, 1, 0.0);
  const GphFunction th = time_reverse(h);
  CHECK(th.terms()[0].coeff == Complex(0.0, -1.0));
  CHECK(th.terms()[0].a == -3);
  CHECK(th.terms()[0].sigma == +2);

  CHECK((time_reverse(tg) - g).is_zero());
}

TEST_CASE("eval_point sums atoms directly") {
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  CHECK(std::abs(eval_point(g, 1.0, 0.0) - std::exp(-1.0)) < 1e-16);
  const GphFunction h = GphFunction::atom(1.0, 1, 1, 0.0);
  CHECK(std::abs(eval_point(h, 2.0, kPi / 2.0) - Complex(0.0, -2.0)) < 1e-14);
  CHECK(std::abs(eval_point(g + h, 2.0, 0.3) -
                 (eval_point(g, 2.0, 0.3) + eval_point(h, 2.0, 0.3))) < 1e-15);
  CHECK_THROWS_AS(eval_point(time_reverse(g), 0.0, 0.0),
                  SingularEvaluationError);
}

TEST_CASE("operator split and commutation identities hold exactly") {
  for (unsigned long long seed : {1ull, 2ull, 3ull}) {
    const GphFunction psi = verify::random_smooth_function(seed, 3, 2, true);
    const GphFunction h = apply_operator(OperatorId::H, psi, kP);
    const GphFunction h0 = apply_operator(OperatorId::H0, psi, kP);
    const GphFunction hi = apply_operator(OperatorId::HI, psi, kP);
    CHECK((h - (h0 + hi)).is_zero());
    CHECK((apply_operator(OperatorId::H0, hi, kP) -
           apply_operator(OperatorId::HI, h0, kP))
              .is_zero());
  }
}

TEST_CASE("reduced-variant commutators carry the derived defect") {
  // [J1r, J2] - i J3r acts as (1/2) d/dphi, i.e. -(i l / 2) per atom;
  // [J1r, J3r] - i J2 is the constant 1/4
  const GphFunction psi = GphFunction::atom(Complex(1.0, -2.0), 3, 5, 0.75);
  const Complex im{0.0, 1.0};
  auto comm = [&](OperatorId x, OperatorId y) {
    return apply_operator(x, apply_operator(y, psi, kP), kP) -
           apply_operator(y, apply_operator(x, psi, kP), kP);
  };
  const GphFunction d12 = comm(OperatorId::J1Reduced, OperatorId::J2) -
                          apply_operator(OperatorId::J3Reduced, psi, kP).scaled(im);
  CHECK((d12 - psi.scaled(Complex(0.0, -1.5))).is_zero());  // -i l/2, l = 3

  const GphFunction d13 = comm(OperatorId::J1Reduced, OperatorId::J3Reduced) -
                          apply_operator(OperatorId::J2, psi, kP).scaled(im);
  CHECK((d13 - psi.scaled(0.25)).is_zero());

  const GphFunction d32 = comm(OperatorId::J3Reduced, OperatorId::J2) -
                          apply_operator(OperatorId::J1Reduced, psi, kP).scaled(im);
  CHECK(d32.is_zero());
}

TEST_CASE("smooth-subfamily predicate follows the parity structure") {
  CHECK(GphFunction::atom(1.0, 2, 4, 1.0).in_smooth_subfamily());
  CHECK_FALSE(GphFunction::atom(1.0, 2, 3, 1.0).in_smooth_subfamily());
  CHECK_FALSE(GphFunction::atom(1.0, 2, 0, 1.0).in_smooth_subfamily());
  CHECK_FALSE(
      time_reverse(GphFunction::atom(1.0, 0, 0, 1.0)).in_smooth_subfamily());
}
