#include <doctest.h>

#include <cmath>

#include "bateman/numerics.hpp"
#include "bateman/resonance.hpp"
#include "bateman/verify.hpp"

using namespace bateman;
using namespace bateman::resonance;
using funcalg::apply_operator;
using funcalg::inner_product;
using funcalg::OperatorId;
using funcalg::time_reverse;

namespace {
const SystemParams kP = SystemParams::defaults();
}

TEST_CASE("resonance eigenfunctions f+") {
  const GphFunction f00 = f_plus({0, 0});
  REQUIRE(f00.terms().size() == 1);
  CHECK(f00.terms()[0].a == 0);
  CHECK(std::abs(f00.terms()[0].coeff - 1.0 / std::sqrt(kTwoPi)) < 1e-16);

  const GphFunction fm11 = f_plus({-1, 1});
  CHECK(fm11.terms()[0].l == -1);
  CHECK(fm11.terms()[0].a == 3);

  for (int l : {-4, 0, 3})
    for (int n : {0, 2}) {
      const ResonanceIndex idx{l, n};
      const GphFunction f = f_plus(idx);
      CHECK((apply_operator(OperatorId::H, f, kP) -
             f.scaled(idx.energy_plus(kP)))
                .is_zero());
    }
}

TEST_CASE("taylor-type and moment-type pairings") {
  // biorthogonality anchor: exact 1 by construction
  CHECK(pair_minus(f_plus({0, 0}), {0, 0}) == Complex(1.0, 0.0));

  const GphFunction r2 = GphFunction::atom(1.0, 0, 2, 0.0);
  CHECK(pair_minus(r2, {0, 0}) == Complex(0.0, 0.0));

  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  const Complex pm = pair_minus(g, {0, 1});
  CHECK(pm.real() < 0.0);  // proportional to the Gaussian series coefficient -1
  CHECK(std::abs(pm - Complex(-std::sqrt(kTwoPi * 2.0), 0.0)) < 1e-14);

  // moment pairing: c_+ m with m = 1/2 for the unit Gaussian at (0,0)
  CHECK(std::abs(pair_plus(g, {0, 0}) - std::sqrt(kTwoPi) * 0.5) < 1e-15);
  CHECK(pair_plus(g, {2, 0}) == Complex(0.0, 0.0));

  // quadrature oracle for a Gaussian-damped f+-shaped probe
  const GphFunction probe = GphFunction::atom(1.0, 1, 1, 1.0);
  auto integrand = [&](double r) {
    return Complex(std::pow(r, 3) * std::exp(-r * r), 0.0);  // r^{k+1} phi_l
  };
  const Complex want = std::exp(0.5 * (std::log(kTwoPi) - std::lgamma(2.0))) *
                       numerics::integrate_semiinfinite(integrand, 1e-12).value;
  CHECK(std::abs(pair_plus(probe, {1, 0}) - want) < 1e-10);
}

TEST_CASE("biorthogonality table") {
  CHECK(biorthogonality_residual({0, 0}, {0, 0}) == 0.0);
  CHECK(biorthogonality_residual({0, 0}, {0, 1}) == 0.0);
  CHECK(biorthogonality_residual({1, 0}, {-1, 0}) == 0.0);
  double worst = 0.0;
  for (int l1 = -2; l1 <= 2; ++l1)
    for (int n1 = 0; n1 <= 2; ++n1)
      for (int l2 = -2; l2 <= 2; ++l2)
        for (int n2 = 0; n2 <= 2; ++n2)
          worst = std::max(worst, biorthogonality_residual({l1, n1}, {l2, n2}));
  CHECK(worst == 0.0);
}

TEST_CASE("conventions ledger") {
  const auto& ledger = conventions();
  CHECK(std::abs(ledger.contour_over_taylor - Complex(0.0, 1.0)) < 1e-12);
  CHECK(ledger.t_phase == Complex(1.0, 0.0));
}

TEST_CASE("weak resolution of identity") {
  const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
  const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);

  SUBCASE("polynomial probe: single term, exact for every N >= 1") {
    const auto rep = weak_identity_sum(poly, gauss, 6);
    CHECK(std::abs(rep.target - kPi) < 1e-15);
    CHECK(rep.abs_error[1] == 0.0);
    CHECK(rep.abs_error[6] == 0.0);
    CHECK(rep.exact_from <= 1);
    CHECK_FALSE(rep.oscillatory);
  }

  SUBCASE("Gaussian probe: partial sums oscillate, Abel limit converges") {
    const auto rep = weak_identity_sum(gauss, gauss, 30);
    CHECK(std::abs(rep.target - kPi / 2.0) < 1e-15);
    CHECK(std::abs(rep.partial[0] - kPi) < 1e-13);
    CHECK(std::abs(rep.partial[1]) < 1e-13);
    CHECK(std::abs(rep.partial[2] - kPi) < 1e-13);
    CHECK(rep.oscillatory);
    // plain Abel value at x = 1 - 1e-4 sits pi(1-x)/(2(1+x)) away
    CHECK(std::abs(rep.abel_value - rep.target) ==
          doctest::Approx(kPi * 1e-4 / (2.0 * (2.0 - 1e-4))).epsilon(1e-3));
    CHECK(std::abs(rep.abel_limit - rep.target) < 1e-6);
  }

  SUBCASE("disjoint sectors pair to zero") {
    const GphFunction l3 = GphFunction::atom(1.0, 3, 3, 0.0);
    const GphFunction l2 = GphFunction::atom(1.0, 2, 2, 1.0);
    const auto rep = weak_identity_sum(l3, l2, 4);
    CHECK(rep.target == Complex(0.0, 0.0));
    for (const auto& s : rep.partial) CHECK(s == Complex(0.0, 0.0));
  }
}

TEST_CASE("spectral sum of H") {
  const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
  const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
  const Complex lhs = spectral_sum_H(poly, gauss, 4, kP);
  // single term: E-_{0,1} pi = -1.5 i pi
  CHECK(std::abs(lhs - Complex(0.0, -1.5 * kPi)) < 1e-13);
  const Complex rhs =
      inner_product(poly, apply_operator(OperatorId::H, gauss, kP));
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));

  // linearity in phi
  const Complex doubled = spectral_sum_H(poly, gauss.scaled(2.0), 4, kP);
  CHECK(std::abs(doubled - 2.0 * lhs) < 1e-13);

  // disjoint sectors
  const GphFunction l3 = GphFunction::atom(1.0, 3, 3, 0.0);
  const GphFunction l2 = GphFunction::atom(1.0, 2, 2, 1.0);
  CHECK(spectral_sum_H(l3, l2, 4, kP) == Complex(0.0, 0.0));
}

TEST_CASE("expansion coefficients decay by the exact semigroup law") {
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  const auto ev = coefficient_evolution(g, {0, 0}, 2.0, kP);
  CHECK(std::abs(ev.measured - std::exp(-1.0)) < 1e-15);
  CHECK(std::abs(ev.predicted - std::exp(-1.0)) < 1e-16);

  const auto id = coefficient_evolution(g, {0, 1}, 0.0, kP);
  CHECK(id.measured == Complex(1.0, 0.0));

  const GphFunction g2 = GphFunction::atom(1.0, 2, 2, 1.0);
  const auto ev2 = coefficient_evolution(g2, {2, 0}, 1.0, kP);
  CHECK(std::abs(std::abs(ev2.measured) - std::exp(-1.5)) < 1e-15);
  CHECK(std::arg(ev2.measured) == doctest::Approx(-2.0));

  CHECK_THROWS_AS(coefficient_evolution(g, {3, 0}, 1.0, kP),
                  UndefinedRatioError);
}

TEST_CASE("propagator factorization acts as the pullback map") {
  const GphFunction probe = verify::random_gaussian_probes(5, 1, 2, false)[0];
  const auto zero = propagator_consistency(probe, 0.0, 0.0, kP);
  CHECK(zero.group_law_residual == 0.0);
  const auto inverse = propagator_consistency(probe, 1.0, -1.0, kP);
  CHECK(inverse.group_law_residual < 1e-14);
  const auto split = propagator_consistency(probe, 0.3, 0.7, kP);
  CHECK(split.group_law_residual < 1e-14);
  CHECK(split.kernel_map_residual < 1e-12);
}

TEST_CASE("resolvent routes agree where their domains overlap") {
  const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
  const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
  const GphFunction gauss2 = GphFunction::atom(1.0, 0, 0, 2.0);

  SUBCASE("(b) against (c) on the polynomial/Gaussian pair") {
    for (Complex z : {Complex(1.0, 0.1), Complex(-0.8, 0.6)}) {
      const Complex vb =
          resolvent_element(poly, gauss, z, ResolventMethod::ResonanceSum, kP)
              .value;
      const Complex vc =
          resolvent_element(poly, gauss, z, ResolventMethod::OdeSolve, kP).value;
      CHECK(std::abs(vb - vc) <= 1e-10 * std::max(1.0, std::abs(vb)));
    }
  }

  SUBCASE("(a) against (c) on the Gaussian/Gaussian pair, within the bound") {
    for (Complex z : {Complex(1.0, 0.1), Complex(0.4, -0.9)}) {
      const auto va = resolvent_element(gauss2, gauss, z,
                                        ResolventMethod::SpectralIntegral, kP);
      const auto vc =
          resolvent_element(gauss2, gauss, z, ResolventMethod::OdeSolve, kP);
      CHECK(std::abs(va.value - vc.value) <= std::max(va.bound, 1e-10));
      CHECK(va.bound < 1e-6);
    }
  }

  SUBCASE("large-z asymptotics: value ~ -<psi|phi>/z") {
    const Complex z(0.0, 30.0);
    const Complex v =
        resolvent_element(poly, gauss, z, ResolventMethod::ResonanceSum, kP)
            .value;
    const Complex expect = -inner_product(poly, gauss) / z;
    CHECK(std::abs(v - expect) <= (10.0 / std::abs(z)) * std::abs(expect));
  }

  SUBCASE("pole growth along a ray toward E-_{0,1}") {
    const Complex pole = ResonanceIndex{0, 1}.energy_minus(kP);
    std::vector<double> ds{0.4, 0.2, 0.1, 0.05};
    std::vector<double> vals;
    for (double d : ds) {
      const Complex z = pole + d * std::polar(1.0, 0.3);
      vals.push_back(std::abs(
          resolvent_element(poly, gauss, z, ResolventMethod::ResonanceSum, kP)
              .value));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const double x = std::log(ds[i]), y = std::log(vals[i]);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double slope =
        (double(ds.size()) * sxy - sx * sy) / (double(ds.size()) * sxx - sx * sx);
    CHECK(slope == doctest::Approx(-1.0).epsilon(0.05));
  }

  SUBCASE("guards") {
    CHECK_THROWS_AS(resolvent_element(poly, gauss, Complex(1.0, 0.0),
                                      ResolventMethod::OdeSolve, kP),
                    DomainError);
    const Complex pole = ResonanceIndex{0, 0}.energy_minus(kP);
    CHECK_THROWS_AS(resolvent_element(poly, gauss, pole + Complex(1e-9, 0.0),
                                      ResolventMethod::ResonanceSum, kP),
                    NearPoleError);
    CHECK_THROWS_AS(resolvent_element(poly, poly, Complex(1.0, 0.1),
                                      ResolventMethod::OdeSolve, kP),
                    DomainError);  // phi must be Gaussian-decaying
  }
}

TEST_CASE("continued resolvent matches the plain one above the axis") {
  const GphFunction psi = GphFunction::atom(1.0, 0, 0, 2.0);
  const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
  for (Complex z : {Complex(0.8, 0.2), Complex(-0.3, 0.15)}) {
    const Complex plain =
        resolvent_element(psi, gauss, z, ResolventMethod::OdeSolve, kP).value;
    const Complex cont =
        resolvent_element_continued(psi, gauss, z, Sign::Minus, kP).value;
    CHECK(std::abs(plain - cont) <= 1e-9 * std::max(1.0, std::abs(plain)));
  }
  // below the axis the continuation picks up the resonance poles instead
  const Complex z(0.0, -0.45);
  const Complex second_sheet =
      resolvent_element_continued(psi, gauss, z, Sign::Minus, kP).value;
  const Complex physical =
      resolvent_element(psi, gauss, z, ResolventMethod::OdeSolve, kP).value;
  CHECK(std::abs(second_sheet - physical) > 0.1);
}

TEST_CASE("projector extraction by contour integration") {
  const GphFunction psi = GphFunction::atom(1.0, 0, 0, 2.0);
  const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
  const ResonanceIndex idx{0, 0};

  SUBCASE("ccw contour gives minus the projector element (continued route)") {
    const Complex got = projector_from_contour(psi, gauss, idx, Sign::Minus, kP);
    const Complex want = -projector_element(psi, gauss, idx, Sign::Minus);
    CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
  }

  SUBCASE("resonance-sum integrand agrees") {
    ContourOptions opts;
    opts.use_resonance_sum = true;
    const Complex got =
        projector_from_contour(psi, gauss, idx, Sign::Minus, kP, opts);
    const Complex want = -projector_element(psi, gauss, idx, Sign::Minus);
    CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
  }

  SUBCASE("plus-sign contour around E+ matches the adjoint structure") {
    const Complex got = projector_from_contour(psi, gauss, idx, Sign::Plus, kP);
    const Complex want = -projector_element(psi, gauss, idx, Sign::Plus);
    CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    // adjoint structure: swapping the probes and conjugating exchanges the
    // two extractions
    const Complex swapped =
        projector_from_contour(gauss, psi, idx, Sign::Minus, kP);
    CHECK(std::abs(got - std::conj(swapped)) < 1e-8);
  }

  SUBCASE("contour around a pole-free region extracts zero") {
    numerics::ContourSpec spec;
    spec.center = Complex(0.0, -1.0);  // between E-_{0,0} and E-_{0,1}
    spec.radius = 0.3;
    spec.points = 96;
    ResolventOptions truncated;
    truncated.nmax = 6;
    const auto res = numerics::contour_integral(
        [&](Complex z) {
          return resolvent_element(psi, gauss, z, ResolventMethod::ResonanceSum,
                                   kP, truncated)
              .value;
        },
        spec);
    CHECK(std::abs(res.value) < 1e-10);
  }

  SUBCASE("partial-fraction consistency over the first three poles") {
    Complex contour_sum{};
    Complex closed_sum{};
    for (int n = 0; n <= 2; ++n) {
      ContourOptions opts;
      opts.use_resonance_sum = true;
      contour_sum +=
          projector_from_contour(psi, gauss, {0, n}, Sign::Minus, kP, opts);
      closed_sum += -projector_element(psi, gauss, {0, n}, Sign::Minus);
    }
    CHECK(std::abs(contour_sum - closed_sum) <=
          1e-8 * std::max(1.0, std::abs(closed_sum)));
  }

  SUBCASE("radius guard") {
    ContourOptions opts;
    opts.radius = 0.6;  // reaches the real axis from E-_{0,0} = -0.5i
    CHECK_THROWS_AS(
        projector_from_contour(psi, gauss, idx, Sign::Minus, kP, opts),
        DomainError);
  }
}

TEST_CASE("time reversal relations") {
  const auto probes = verify::random_gaussian_probes(11, 4, 2, false);
  const auto rep = time_reversal_relations(probes, 1.0, kP);
  CHECK(rep.involution_residual == 0.0);
  CHECK(rep.semigroup_exchange_residual <= 1e-14);
  CHECK(rep.tf_eigenvalue_residual <= 1e-15);
  CHECK(rep.adjoint_residual <= 1e-13);
  CHECK(rep.antiunitary_j0_residual <= 1e-12);
  CHECK(rep.antiunitary_j2_residual <= 1e-12);
  CHECK(rep.schwarz_residual >= 0.0);
  CHECK(rep.schwarz_residual <= 1e-8);

  // the exchange in explicit atom data: T then evolve then T on a Gaussian
  const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
  const GphFunction path = time_reverse(funcalg::evolve(time_reverse(g), 1.0, kP));
  REQUIRE(path.terms().size() == 1);
  CHECK(path.terms()[0].a == 0);
  CHECK(path.terms()[0].sigma == +2);
  CHECK(std::abs(path.terms()[0].beta - std::exp(-2.0 * kP.gamma)) < 1e-15);
  CHECK(std::abs(path.terms()[0].coeff - std::exp(-kP.gamma)) < 1e-15);
}

TEST_CASE("semigroup membership diagnostics") {
  const GphFunction probe = GphFunction({
      Atom{Complex(1.0, 0.0), 0, 0, 1.0, +2},
      Atom{Complex(0.5, 0.0), 3, 3, 1.0, +2},
  });
  const auto rep = semigroup_membership(probe, {-1.0, 0.0, 1.0}, kP);
  REQUIRE(rep.entries.size() == 3);

  CHECK(rep.entries[2].coefficients_decay);
  CHECK_FALSE(rep.entries[2].flagged_blowup);
  CHECK(rep.entries[2].beta_scale == doctest::Approx(std::exp(1.0)));

  CHECK(rep.entries[1].max_coeff_growth == doctest::Approx(1.0));

  CHECK(rep.entries[0].flagged_blowup);
  // the (n, l) = (0, 3) coefficient grows by e^{4 gamma} at t = -1
  const auto ev = coefficient_evolution(probe, {3, 0}, -1.0, kP);
  CHECK(std::abs(ev.measured) == doctest::Approx(std::exp(4.0 * kP.gamma)));
  CHECK(rep.entries[0].max_coeff_growth >= std::exp(4.0 * kP.gamma) - 1e-9);

  // no probe passes the decay test for both signs of t
  CHECK_FALSE((rep.entries[0].coefficients_decay && rep.entries[2].coefficients_decay));
}

TEST_CASE("projector elements: adjoint exact, Hermiticity broken") {
  const GphFunction psi = verify::random_gaussian_probes(21, 1, 2, false)[0];
  const GphFunction phi = verify::random_gaussian_probes(22, 1, 2, false)[0];
  const ResonanceIndex idx{1, 1};
  CHECK(std::abs(projector_element(psi, phi, idx, Sign::Plus) -
                 std::conj(projector_element(phi, psi, idx, Sign::Minus))) <
        1e-15);
  CHECK(std::abs(projector_element(psi, phi, idx, Sign::Minus) -
                 std::conj(projector_element(phi, psi, idx, Sign::Minus))) >
        1e-3);
}
