#include "bateman/verify.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "bateman/classical.hpp"
#include "bateman/fock.hpp"
#include "bateman/numerics.hpp"
#include "bateman/resonance.hpp"
#include "bateman/spectral.hpp"

namespace bateman::verify {

using funcalg::apply_operator;
using funcalg::eval_point;
using funcalg::evolve;
using funcalg::inner_product;
using funcalg::OperatorId;
using funcalg::time_reverse;
using spectral::ResonanceIndex;

namespace {

double dyadic_unit(std::mt19937_64& rng) {
  // nonzero multiples of 1/32 in [-1, 1]
  int v = int(rng() % 64) - 32;
  if (v == 0) v = 16;
  return double(v) / 32.0;
}

double dyadic_beta(std::mt19937_64& rng) {
  return double(8 + rng() % 56) / 16.0;  // [0.5, 4), multiples of 1/16
}

void add_check(SuiteReport& rep, const std::string& name, double residual,
                double tol, const std::string& note = "") {
  Check c;
  c.name = name;
  c.residual = residual;
  c.tolerance = tol;
  c.pass = residual <= tol;
  c.note = note;
  rep.checks.push_back(c);
}

void add_info(SuiteReport& rep, const std::string& name, double value,
              const std::string& note) {
  Check c;
  c.name = name;
  c.residual = value;
  c.tolerance = std::numeric_limits<double>::infinity();
  c.pass = true;
  c.note = note;
  rep.checks.push_back(c);
}

GphFunction random_general_function(std::mt19937_64& rng, int lmax,
                                    bool dyadic) {
  std::vector<Atom> atoms;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> betad(0.5, 4.0);
  const int n_atoms = 2 + int(rng() % 4);
  for (int i = 0; i < n_atoms; ++i) {
    Atom t;
    t.l = int(rng() % (2 * lmax + 1)) - lmax;
    t.a = int(rng() % 9) - 4;
    const bool gaussian = (rng() % 4) != 0;
    t.beta = gaussian ? (dyadic ? dyadic_beta(rng) : betad(rng)) : 0.0;
    t.sigma = (gaussian && rng() % 5 == 0) ? -2 : +2;
    t.coeff = dyadic ? Complex(dyadic_unit(rng), dyadic_unit(rng))
                     : Complex(unit(rng), unit(rng));
    atoms.push_back(t);
  }
  return GphFunction(std::move(atoms));
}

}  // namespace

std::vector<GphFunction> random_gaussian_probes(unsigned long long seed,
                                                int count, int lmax,
                                                bool dyadic) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> betad(0.5, 4.0);
  std::vector<GphFunction> probes;
  probes.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<Atom> atoms;
    for (int l = -lmax; l <= lmax; ++l) {
      Atom t;
      t.l = l;
      t.a = std::abs(l);
      t.beta = dyadic ? dyadic_beta(rng) : betad(rng);
      t.sigma = +2;
      t.coeff = dyadic ? Complex(dyadic_unit(rng), dyadic_unit(rng))
                       : Complex(unit(rng), unit(rng));
      atoms.push_back(t);
    }
    probes.emplace_back(std::move(atoms));
  }
  return probes;
}

GphFunction random_smooth_function(unsigned long long seed, int lmax,
                                   int extra_terms, bool dyadic) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Atom> atoms;
  for (int l = -lmax; l <= lmax; ++l) {
    const int reps = 1 + int(rng() % (extra_terms + 1));
    for (int j = 0; j < reps; ++j) {
      Atom t;
      t.l = l;
      t.a = std::abs(l) + 2 * j;
      t.beta = dyadic ? dyadic_beta(rng) : std::abs(unit(rng)) + 0.5;
      t.sigma = +2;
      t.coeff = dyadic ? Complex(dyadic_unit(rng), dyadic_unit(rng))
                       : Complex(unit(rng), unit(rng));
      atoms.push_back(t);
    }
  }
  return GphFunction(std::move(atoms));
}

// --------------------------------------------------------------------------
// funcalg
// --------------------------------------------------------------------------

namespace {

// 5-point finite-difference application of the differential operators, the
// independent pointwise oracle for apply_operator.
Complex fd_apply(OperatorId op, const GphFunction& psi, double r, double phi,
                 const SystemParams& p) {
  const double hr = 1e-3 * std::max(0.5, r);
  const double hp = 1e-3;
  auto f = [&](double rr, double pp) { return eval_point(psi, rr, pp); };
  auto dr = [&] {
    return (f(r - 2 * hr, phi) - 8.0 * f(r - hr, phi) + 8.0 * f(r + hr, phi) -
            f(r + 2 * hr, phi)) /
           (12.0 * hr);
  };
  auto drr = [&] {
    return (-f(r - 2 * hr, phi) + 16.0 * f(r - hr, phi) - 30.0 * f(r, phi) +
            16.0 * f(r + hr, phi) - f(r + 2 * hr, phi)) /
           (12.0 * hr * hr);
  };
  auto dp = [&] {
    return (f(r, phi - 2 * hp) - 8.0 * f(r, phi - hp) + 8.0 * f(r, phi + hp) -
            f(r, phi + 2 * hp)) /
           (12.0 * hp);
  };
  auto dpp = [&] {
    return (-f(r, phi - 2 * hp) + 16.0 * f(r, phi - hp) - 30.0 * f(r, phi) +
            16.0 * f(r, phi + hp) - f(r, phi + 2 * hp)) /
           (12.0 * hp * hp);
  };
  const Complex i{0.0, 1.0};
  switch (op) {
    case OperatorId::H0:
      return i * p.omega * p.hbar * dp();
    case OperatorId::HI:
      return i * p.gamma * p.hbar * (r * dr() + f(r, phi));
    case OperatorId::H:
      return fd_apply(OperatorId::H0, psi, r, phi, p) +
             fd_apply(OperatorId::HI, psi, r, phi, p);
    case OperatorId::Pr:
      return -i * p.hbar * (dr() + f(r, phi) / (2.0 * r));
    case OperatorId::J0:
      return 0.5 * i * dp();
    case OperatorId::J2:
      return 0.5 * i * (r * dr() + f(r, phi));
    case OperatorId::J1:
      return -0.25 * p.hbar * (drr() + dr() / r + dpp() / (r * r)) -
             0.25 / p.hbar * r * r * f(r, phi);
    case OperatorId::J3:
      return -0.25 * p.hbar * (drr() + dr() / r + dpp() / (r * r)) +
             0.25 / p.hbar * r * r * f(r, phi);
    case OperatorId::J1Reduced:
      return -0.25 * p.hbar * (drr() + dpp() / (r * r)) -
             0.25 / p.hbar * r * r * f(r, phi);
    case OperatorId::J3Reduced:
      return -0.25 * p.hbar * (drr() + dpp() / (r * r)) +
             0.25 / p.hbar * r * r * f(r, phi) + 0.5 * i * dp();
  }
  return {};
}

GphFunction commutator_fn(OperatorId x, OperatorId y, const GphFunction& psi,
                          const SystemParams& p) {
  return apply_operator(x, apply_operator(y, psi, p), p) -
         apply_operator(y, apply_operator(x, psi, p), p);
}

}  // namespace

SuiteReport run_funcalg_suite(const SystemParams& p, unsigned long long seed) {
  SuiteReport rep;
  rep.suite = "funcalg";
  std::mt19937_64 rng(seed);

  // H = H0 + HI and [H0, HI] = 0 and H = 2 hbar omega J0 + 2 hbar gamma J2,
  // exact on arbitrary algebra elements
  double r_split = 0.0, r_comm = 0.0, r_su = 0.0;
  for (int i = 0; i < 50; ++i) {
    const GphFunction psi = random_general_function(rng, 4, true);
    const GphFunction h = apply_operator(OperatorId::H, psi, p);
    const GphFunction h0 = apply_operator(OperatorId::H0, psi, p);
    const GphFunction hi = apply_operator(OperatorId::HI, psi, p);
    r_split = std::max(r_split, (h - (h0 + hi)).max_abs_coeff());
    r_comm = std::max(
        r_comm, commutator_fn(OperatorId::H0, OperatorId::HI, psi, p)
                    .max_abs_coeff());
    const GphFunction viaJ =
        apply_operator(OperatorId::J0, psi, p)
            .scaled(2.0 * p.hbar * p.omega) +
        apply_operator(OperatorId::J2, psi, p).scaled(2.0 * p.hbar * p.gamma);
    r_su = std::max(r_su, (h - viaJ).max_abs_coeff());
  }
  add_check(rep, "H equals H0 plus HI (exact)", r_split, 0.0);
  add_check(rep, "[H0, HI] = 0 (exact)", r_comm, 0.0);
  add_check(rep, "H = 2hw J0 + 2hg J2 (exact)", r_su, 0.0);

  // su(1,1) closure of the corrected generators, exact
  double r12 = 0.0, r32 = 0.0, r13 = 0.0;
  double q12 = 0.0, q32 = 0.0, q13 = 0.0;  // reduced variants, reported
  for (int i = 0; i < 20; ++i) {
    const GphFunction psi = random_general_function(rng, 3, true);
    const Complex im{0.0, 1.0};
    r12 = std::max(r12, (commutator_fn(OperatorId::J1, OperatorId::J2, psi, p) -
                         apply_operator(OperatorId::J3, psi, p).scaled(im))
                            .max_abs_coeff());
    r32 = std::max(r32, (commutator_fn(OperatorId::J3, OperatorId::J2, psi, p) -
                         apply_operator(OperatorId::J1, psi, p).scaled(im))
                            .max_abs_coeff());
    r13 = std::max(r13, (commutator_fn(OperatorId::J1, OperatorId::J3, psi, p) -
                         apply_operator(OperatorId::J2, psi, p).scaled(im))
                            .max_abs_coeff());
    q12 = std::max(q12,
                   (commutator_fn(OperatorId::J1Reduced, OperatorId::J2, psi, p) -
                    apply_operator(OperatorId::J3Reduced, psi, p).scaled(im))
                       .max_abs_coeff());
    q32 = std::max(q32,
                   (commutator_fn(OperatorId::J3Reduced, OperatorId::J2, psi, p) -
                    apply_operator(OperatorId::J1Reduced, psi, p).scaled(im))
                       .max_abs_coeff());
    q13 = std::max(q13, (commutator_fn(OperatorId::J1Reduced,
                                       OperatorId::J3Reduced, psi, p) -
                         apply_operator(OperatorId::J2, psi, p).scaled(im))
                            .max_abs_coeff());
  }
  add_check(rep, "[J1,J2]-iJ3 = 0 (exact)", r12, 0.0);
  add_check(rep, "[J3,J2]-iJ1 = 0 (exact)", r32, 0.0);
  add_check(rep, "[J1,J3]-iJ2 = 0 (exact)", r13, 0.0);
  add_info(rep, "reduced-variant residual [J1,J2]-iJ3", q12,
           "expected nonzero: equals |l|/2 per atom");
  add_info(rep, "reduced-variant residual [J3,J2]-iJ1", q32,
           "expected zero even for the reduced form");
  add_info(rep, "reduced-variant residual [J1,J3]-iJ2", q13,
           "expected nonzero: constant 1/4 per atom");

  // pointwise finite-difference oracle for every operator
  double fd_worst = 0.0;
  const OperatorId all_ops[] = {
      OperatorId::H0, OperatorId::HI, OperatorId::H,  OperatorId::Pr,
      OperatorId::J0, OperatorId::J1, OperatorId::J2, OperatorId::J3,
      OperatorId::J1Reduced, OperatorId::J3Reduced};
  for (int i = 0; i < 20; ++i) {
    const GphFunction psi = random_smooth_function(seed + 100 + i, 3, 2, false);
    for (OperatorId op : all_ops) {
      const GphFunction img = apply_operator(op, psi, p);
      for (int pt = 0; pt < 10; ++pt) {
        const double r = 0.6 + 0.18 * pt;
        const double ang = 0.5 + 0.61 * pt;
        const Complex sym = eval_point(img, r, ang);
        const Complex fd = fd_apply(op, psi, r, ang, p);
        fd_worst = std::max(fd_worst, std::abs(sym - fd) /
                                          std::max(1.0, std::abs(sym)));
      }
    }
  }
  add_check(rep, "finite-difference oracle, all operators", fd_worst, 1e-6);

  // unitarity of evolve in closed form
  double uni = 0.0;
  for (int i = 0; i < 10; ++i) {
    const GphFunction a = random_smooth_function(seed + 300 + i, 3, 2, false);
    const GphFunction b = random_smooth_function(seed + 400 + i, 3, 2, false);
    const Complex base = inner_product(a, b);
    for (double t : {-2.0, -0.5, 0.5, 2.0}) {
      const Complex after = inner_product(evolve(a, t, p), evolve(b, t, p));
      uni = std::max(uni, std::abs(after - base) / std::max(1.0, std::abs(base)));
    }
  }
  add_check(rep, "evolve preserves inner products", uni, 1e-12);

  // time reversal: involution and antilinearity
  double invol = 0.0, antilin = 0.0;
  for (int i = 0; i < 10; ++i) {
    const GphFunction psi = random_general_function(rng, 3, false);
    invol = std::max(invol,
                     (time_reverse(time_reverse(psi)) - psi).max_abs_coeff());
    const Complex c{0.3, -1.7};
    antilin = std::max(antilin, (time_reverse(psi.scaled(c)) -
                                 time_reverse(psi).scaled(std::conj(c)))
                                    .max_abs_coeff());
  }
  add_check(rep, "time_reverse is an involution (exact)", invol, 0.0);
  add_check(rep, "time_reverse is antilinear (exact)", antilin, 0.0);
  return rep;
}

// --------------------------------------------------------------------------
// classical
// --------------------------------------------------------------------------

namespace {

using classical::Chart;
using classical::PhasePoint;

PhasePoint random_point(std::mt19937_64& rng, Chart chart) {
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  PhasePoint s;
  s.chart = chart;
  for (auto& v : s.q) v = unit(rng);
  if (chart == Chart::Polar) s.q[0] = std::abs(s.q[0]) + 0.3;
  return s;
}

// RK4 cross-check integrator for the Pontriagin Hamilton equations
PhasePoint rk4_flow(const PhasePoint& s0, double t_final, double h,
                    const SystemParams& p) {
  auto rhs = [&](const std::array<double, 4>& q) {
    const Eigen::Matrix2d F = classical::flow_matrix(p);
    std::array<double, 4> d;
    d[0] = F(0, 0) * q[0] + F(0, 1) * q[1];
    d[1] = F(1, 0) * q[0] + F(1, 1) * q[1];
    d[2] = -(F(0, 0) * q[2] + F(1, 0) * q[3]);
    d[3] = -(F(0, 1) * q[2] + F(1, 1) * q[3]);
    return d;
  };
  auto add = [](std::array<double, 4> a, const std::array<double, 4>& b,
                double w) {
    for (int i = 0; i < 4; ++i) a[i] += w * b[i];
    return a;
  };
  PhasePoint s = s0;
  const long steps = std::lround(t_final / h);
  for (long i = 0; i < steps; ++i) {
    const auto k1 = rhs(s.q);
    const auto k2 = rhs(add(s.q, k1, 0.5 * h));
    const auto k3 = rhs(add(s.q, k2, 0.5 * h));
    const auto k4 = rhs(add(s.q, k3, h));
    for (int j = 0; j < 4; ++j)
      s.q[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return s;
}

double symplectic_residual(const PhasePoint& s, Chart target,
                           const SystemParams& p) {
  // finite-difference Jacobian of the chart transform; J Omega J^T = Omega
  Eigen::Matrix4d J;
  const double h = 1e-5;
  for (int col = 0; col < 4; ++col) {
    PhasePoint up = s, dn = s;
    up.q[col] += h;
    dn.q[col] -= h;
    const PhasePoint fu = classical::chart_transform(up, target, p);
    const PhasePoint fd = classical::chart_transform(dn, target, p);
    for (int row = 0; row < 4; ++row)
      J(row, col) = (fu.q[row] - fd.q[row]) / (2.0 * h);
  }
  Eigen::Matrix4d Omega = Eigen::Matrix4d::Zero();
  Omega(0, 2) = 1.0;
  Omega(1, 3) = 1.0;
  Omega(2, 0) = -1.0;
  Omega(3, 1) = -1.0;
  return (J * Omega * J.transpose() - Omega).cwiseAbs().maxCoeff();
}

}  // namespace

SuiteReport run_classical_suite(const SystemParams& p, unsigned long long seed) {
  SuiteReport rep;
  rep.suite = "classical";
  std::mt19937_64 rng(seed);

  // Hamiltonian invariance + round trips over 100 random points
  double h_inv = 0.0, rt = 0.0, sympl = 0.0;
  const Chart charts[] = {Chart::Bateman, Chart::Pontriagin, Chart::Polar};
  for (int i = 0; i < 100; ++i) {
    const Chart from = charts[rng() % 3];
    const PhasePoint s = random_point(rng, from);
    const double h0 = classical::hamiltonian_value(s, p);
    for (Chart to : charts) {
      const PhasePoint m = classical::chart_transform(s, to, p);
      h_inv = std::max(h_inv, std::abs(classical::hamiltonian_value(m, p) - h0) /
                                  std::max(1.0, std::abs(h0)));
      const PhasePoint back = classical::chart_transform(m, from, p);
      for (int j = 0; j < 4; ++j)
        rt = std::max(rt, std::abs(back.q[j] - s.q[j]));
    }
    if (i < 20)
      for (Chart to : charts)
        if (to != from) sympl = std::max(sympl, symplectic_residual(s, to, p));
  }
  add_check(rep, "Hamiltonian invariant under chart transforms", h_inv, 1e-12);
  add_check(rep, "chart round trips are the identity", rt, 1e-12);
  add_check(rep, "symplectic Jacobian residual", sympl, 1e-8);

  // flow properties
  double grp = 0.0, cons = 0.0, rk = 0.0, proj = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Chart chart = charts[rng() % 3];
    const PhasePoint s = random_point(rng, chart);
    const double t1 = 0.7, t2 = -1.3;
    const PhasePoint two_step =
        classical::flow_evolve(classical::flow_evolve(s, t1, p), t2, p);
    const PhasePoint one_step = classical::flow_evolve(s, t1 + t2, p);
    for (int j = 0; j < 4; ++j)
      grp = std::max(grp, std::abs(two_step.q[j] - one_step.q[j]));
    const double h0 = classical::hamiltonian_value(s, p);
    for (double t : {0.5, 2.0, -1.0})
      cons = std::max(cons,
                      std::abs(classical::hamiltonian_value(
                                   classical::flow_evolve(s, t, p), p) -
                               h0) /
                          std::max(1.0, std::abs(h0)));
  }
  {
    std::mt19937_64 rng2(seed + 17);
    const PhasePoint s = random_point(rng2, Chart::Pontriagin);
    const PhasePoint exact = classical::flow_evolve(s, 5.0, p);
    const PhasePoint rk4 = rk4_flow(s, 5.0, 1e-3, p);
    for (int j = 0; j < 4; ++j)
      rk = std::max(rk, std::abs(exact.q[j] - rk4.q[j]));

    // Bateman-chart flow projects onto the damped / dual trajectories
    const PhasePoint b = random_point(rng2, Chart::Bateman);
    const double x0 = b.q[0], y0 = b.q[1], px = b.q[2], py = b.q[3];
    const double v0 = py - p.gamma * x0;  // xdot = p_y - gamma x
    const double w0 = px + p.gamma * y0;  // ydot = p_x + gamma y
    for (double t : {0.4, 1.7}) {
      const PhasePoint m = classical::flow_evolve(b, t, p);
      const auto [x, xd] = classical::damped_trajectory(p, x0, v0, t);
      const auto [y, yd] = classical::dual_trajectory(p, y0, w0, t);
      proj = std::max({proj, std::abs(m.q[0] - x), std::abs(m.q[1] - y),
                       std::abs(m.q[3] - (xd + p.gamma * x)),
                       std::abs(m.q[2] - (yd - p.gamma * y))});
    }
  }
  add_check(rep, "flow group law", grp, 1e-12);
  add_check(rep, "Hamiltonian conserved along flows", cons, 1e-12);
  add_check(rep, "RK4 cross-check at h=1e-3 over [0,5]", rk, 1e-9);
  add_check(rep, "Bateman flow reproduces damped/dual trajectories", proj,
            1e-12);

  // trajectory ODE residual by 5-point finite differences
  double ode = 0.0;
  const double h = 1e-3;
  auto stencil = [&](auto traj, double t, double sign_gamma) {
    const double f2m = traj(t - 2 * h), f1m = traj(t - h), f0 = traj(t);
    const double f1p = traj(t + h), f2p = traj(t + 2 * h);
    const double d1 = (f2m - 8.0 * f1m + 8.0 * f1p - f2p) / (12.0 * h);
    const double d2 =
        (-f2m + 16.0 * f1m - 30.0 * f0 + 16.0 * f1p - f2p) / (12.0 * h * h);
    return std::abs(d2 + sign_gamma * 2.0 * p.gamma * d1 + p.kappa * f0);
  };
  for (double t : {0.3, 1.1, 2.9}) {
    ode = std::max(ode, stencil([&](double u) {
      return classical::damped_trajectory(p, 1.0, 0.0, u).first;
    }, t, +1.0));
    ode = std::max(ode, stencil([&](double u) {
      return classical::dual_trajectory(p, 1.0, 0.5, u).first;
    }, t, -1.0));
  }
  add_check(rep, "trajectory ODE residual (finite differences)", ode, 1e-8);

  // Pontriagin lift specializes to the oscillator Hamiltonian
  double lift = 0.0;
  {
    std::mt19937_64 rng3(seed + 23);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
      Eigen::VectorXd x(2), pc(2);
      x << unit(rng3), unit(rng3);
      pc << unit(rng3), unit(rng3);
      const auto rhs = classical::pontriagin_lift(classical::flow_matrix(p), x, pc);
      const PhasePoint s{Chart::Pontriagin, {x(0), x(1), pc(0), pc(1)}};
      lift = std::max(lift, std::abs(rhs.hamiltonian -
                                     classical::hamiltonian_value(s, p)));
    }
  }
  add_check(rep, "pontriagin_lift matches the chart Hamiltonian", lift, 1e-14);
  return rep;
}

// --------------------------------------------------------------------------
// spectral
// --------------------------------------------------------------------------

SuiteReport run_spectral_suite(const SystemParams& p, unsigned long long seed) {
  SuiteReport rep;
  rep.suite = "spectral";

  // residue ratio: contour / taylor must be the single global constant i
  const auto probes = random_gaussian_probes(seed, 8, 3, false);
  double ratio_dev = 0.0, case_dev = 0.0;
  const Complex expected{0.0, 1.0};
  for (const auto& phi : probes) {
    for (int l = -3; l <= 3; ++l) {
      for (int n = 0; n <= 3; ++n) {
        const ResonanceIndex idx{l, n};
        const Complex taylor = spectral::residue_taylor(phi, idx);
        if (std::abs(taylor) < 1e-10) continue;
        const auto ext = spectral::residue_contour(phi, idx);
        const Complex ratio = ext.residue / taylor;
        ratio_dev = std::max(ratio_dev, std::abs(ratio - expected));
        case_dev = std::max(case_dev,
                            std::abs(ext.residue - expected * taylor) /
                                std::abs(expected * taylor));
        // simple-pole structure: second Laurent coefficient vanishes
        case_dev = std::max(case_dev, std::abs(ext.laurent_minus2));
      }
    }
  }
  add_check(rep, "residue convention constant (contour/taylor = i)", ratio_dev,
            1e-10);
  add_check(rep, "per-case residue agreement and simple-pole check", case_dev,
            1e-8);

  // poles of the spectral coefficient lie on the allowed lattice only
  double pole_dev = 0.0;
  const GphFunction smooth = random_smooth_function(seed + 5, 3, 2, false);
  for (int l : smooth.sectors()) {
    const auto coeff = spectral::spectral_coefficient(smooth, l);
    for (Complex pole : coeff.poles_below(6)) {
      const double k = -pole.imag() - 1.0;
      const bool allowed =
          k >= std::abs(l) && std::fmod(k - std::abs(l), 2.0) == 0.0;
      if (!allowed) pole_dev = std::max(pole_dev, 1.0);
    }
  }
  add_check(rep, "no extraneous poles for smooth-subfamily inputs", pole_dev,
            0.0);

  // eigenvalue consistency: E(l, lambda_{nl}) = E-_{nl}
  double econs = 0.0;
  for (int l = -4; l <= 4; ++l)
    for (int n = 0; n <= 4; ++n) {
      const ResonanceIndex idx{l, n};
      econs = std::max(econs,
                       std::abs(spectral::continuum_energy_continued(
                                    l, idx.lambda_pole(), p) -
                                idx.energy_minus(p)));
    }
  add_check(rep, "continued continuum energy hits E- at the poles", econs,
            1e-14);

  // completeness over a truncated lambda window
  {
    const GphFunction a = GphFunction::atom(1.0, 0, 0, 1.0);
    const GphFunction b = GphFunction::atom(1.0, 0, 2, 0.5);
    const auto sa = spectral::spectral_coefficient(a, 0);
    const auto sb = spectral::spectral_coefficient(b, 0);
    auto integrand = [&](double lam) {
      return sa.eval(Complex(lam, 0.0)) * std::conj(sb.eval(Complex(lam, 0.0)));
    };
    const double cut = 60.0;
    const auto q = numerics::integrate_interval(integrand, -cut, cut, 1e-11);
    const double tail = (std::abs(integrand(cut)) + std::abs(integrand(-cut))) *
                        (2.0 / kPi) * 4.0;
    const Complex target = inner_product(a, b);
    const double resid = std::abs(q.value - target);
    add_check(rep, "lambda-window completeness reproduces <psi|phi>", resid,
              std::max(1e-10, q.error_bound + tail));
  }

  // label maps agree and round-trip (pure arithmetic)
  double lab = 0.0;
  for (int l = -8; l <= 8; ++l)
    for (int n = 0; n <= 8; ++n) {
      const auto viaLn = spectral::label_map_from_ln(l, n, p);
      const auto viaJm = spectral::label_map_from_jm(viaLn.j, viaLn.m, p);
      const auto viaAb = spectral::label_map_from_occupation(viaLn.nA, viaLn.nB, p);
      lab = std::max({lab, std::abs(viaLn.e_plus - viaLn.e_plus_jm),
                      std::abs(viaLn.e_minus - viaLn.e_minus_jm),
                      double(std::abs(viaJm.l - l)), double(std::abs(viaJm.n - n)),
                      double(std::abs(viaAb.l - l)), double(std::abs(viaAb.n - n))});
    }
  add_check(rep, "label maps agree across (l,n), (j,m), (nA,nB) (exact)", lab,
            0.0);

  // Appendix-B parity structure of smooth Cartesian functions
  {
    auto x1sq = [](double x1, double) { return Complex(x1 * x1, 0.0); };
    auto x2f = [](double, double x2) { return Complex(x2, 0.0); };
    auto gauss = [](double x1, double x2) {
      return Complex(std::exp(-(x1 * x1 + x2 * x2)), 0.0);
    };
    auto xyg = [](double x1, double x2) {
      return Complex(x1 * x2 * std::exp(-(x1 * x1 + x2 * x2)), 0.0);
    };
    double worst = 0.0;
    for (auto& f : {std::function<Complex(double, double)>(x1sq),
                    std::function<Complex(double, double)>(x2f),
                    std::function<Complex(double, double)>(gauss),
                    std::function<Complex(double, double)>(xyg)}) {
      const auto report = spectral::parity_check(f, 3, 4);
      for (const auto& v : report.violations)
        worst = std::max(worst, v.magnitude / report.norm_scale);
    }
    add_check(rep, "parity check: no forbidden small-r coefficients", worst,
              1e-8);
  }

  // Hardy diagnostic: Gaussian grows, time-reversed Gaussian decays
  {
    const GphFunction g = GphFunction::atom(1.0, 0, 0, 1.0);
    const auto up = spectral::hardy_diagnostic(g, 0, {4.0, 8.0, 12.0, 16.0});
    const auto dn = spectral::hardy_diagnostic(time_reverse(g), 0,
                                               {4.0, 8.0, 12.0, 16.0});
    add_check(rep, "hardy: Gaussian classified non-decaying",
              up.decaying ? 1.0 : 0.0, 0.0);
    add_check(rep, "hardy: time-reversed Gaussian classified decaying",
              dn.decaying ? 0.0 : 1.0, 0.0);
  }
  return rep;
}

// --------------------------------------------------------------------------
// resonance
// --------------------------------------------------------------------------

SuiteReport run_resonance_suite(const SystemParams& p, unsigned long long seed) {
  SuiteReport rep;
  rep.suite = "resonance";
  using namespace resonance;

  // strong eigenvalue property, exact
  double strong = 0.0;
  for (int l = -8; l <= 8; ++l)
    for (int n = 0; n <= 8; ++n) {
      const ResonanceIndex idx{l, n};
      const GphFunction f = f_plus(idx);
      strong = std::max(strong, (apply_operator(OperatorId::H, f, p) -
                                 f.scaled(idx.energy_plus(p)))
                                    .max_abs_coeff());
    }
  add_check(rep, "H f+ = E+ f+ for |l|<=8, n<=8 (exact)", strong, 0.0);

  // biorthogonality, exact after the ledger normalization
  double bio = 0.0;
  for (int l1 = -3; l1 <= 3; ++l1)
    for (int n1 = 0; n1 <= 3; ++n1)
      for (int l2 = -3; l2 <= 3; ++l2)
        for (int n2 = 0; n2 <= 3; ++n2)
          bio = std::max(bio, biorthogonality_residual({l1, n1}, {l2, n2}));
  add_check(rep, "biorthogonality pair_minus(f+) = delta (exact)", bio, 0.0);

  // weak identity: polynomial probe is exact at the covering N
  {
    const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
    const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
    const auto w = weak_identity_sum(poly, gauss, 5);
    add_check(rep, "weak identity exact for polynomial probe",
              w.abs_error.back(), 1e-12 * std::max(1.0, std::abs(w.target)),
              "target pi, single resonance term");
    const auto g2 = weak_identity_sum(gauss, gauss, 40);
    add_check(rep, "Abel-regularized Gaussian/Gaussian limit",
              std::abs(g2.abel_limit - g2.target), 1e-6,
              "raw partial sums oscillate between pi and 0");
    add_check(rep, "Gaussian/Gaussian sums detected oscillatory",
              g2.oscillatory ? 0.0 : 1.0, 0.0);
  }

  // weighted sum equals <psi|H phi> for finitely supported expansions
  {
    const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
    const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
    const Complex lhs = spectral_sum_H(poly, gauss, 5, p);
    const Complex rhs =
        inner_product(poly, apply_operator(OperatorId::H, gauss, p));
    add_check(rep, "spectral sum of H equals <psi|H phi>", std::abs(lhs - rhs),
              1e-12 * std::max(1.0, std::abs(rhs)));
  }

  // decay law on the grid
  double decay = 0.0;
  const GphFunction probe = random_gaussian_probes(seed + 9, 1, 5, false)[0];
  for (int l = -5; l <= 5; ++l)
    for (int n = 0; n <= 5; ++n)
      for (double t : {-3.0, -1.0, -0.1, 0.1, 1.0, 3.0}) {
        const auto ev = coefficient_evolution(probe, {l, n}, t, p);
        decay = std::max(decay, std::abs(ev.measured / ev.predicted - 1.0));
      }
  add_check(rep, "coefficient decay law measured = predicted", decay, 1e-12);

  // propagator factorization
  {
    const auto pr = propagator_consistency(probe, 0.3, 0.7, p);
    add_check(rep, "propagator group law", pr.group_law_residual, 1e-13);
    add_check(rep, "kernel pullback matches evolve", pr.kernel_map_residual,
              1e-12);
  }

  // non-Hermitian projector structure
  {
    const GphFunction psi = random_gaussian_probes(seed + 31, 1, 2, false)[0];
    const GphFunction phi = random_gaussian_probes(seed + 32, 1, 2, false)[0];
    const ResonanceIndex idx{1, 1};
    const Complex adj = projector_element(psi, phi, idx, Sign::Plus) -
                        std::conj(projector_element(phi, psi, idx, Sign::Minus));
    add_check(rep, "P+ = (P-)^dag weakly (exact)", std::abs(adj), 1e-15);
    const double nonherm =
        std::abs(projector_element(psi, phi, idx, Sign::Minus) -
                 std::conj(projector_element(phi, psi, idx, Sign::Minus)));
    add_check(rep, "P- is not Hermitian on a generic pair",
              nonherm > 1e-6 ? 0.0 : 1.0, 0.0, "distance is expected large");
  }

  // resolvent: (b) vs (c) on the polynomial/Gaussian pair
  {
    const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
    const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
    double bc = 0.0;
    for (Complex z : {Complex(1.0, 0.1), Complex(-0.5, 0.8), Complex(0.2, 1.5)}) {
      const Complex vb =
          resolvent_element(poly, gauss, z, ResolventMethod::ResonanceSum, p)
              .value;
      const Complex vc =
          resolvent_element(poly, gauss, z, ResolventMethod::OdeSolve, p).value;
      bc = std::max(bc, std::abs(vb - vc) / std::max(1.0, std::abs(vb)));
    }
    add_check(rep, "resolvent methods (b) and (c) agree", bc, 1e-10);
  }

  // projector extraction from a contour around E-_{0,0}
  {
    const GphFunction psi = GphFunction::atom(1.0, 0, 0, 2.0);
    const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
    const ResonanceIndex idx{0, 0};
    const Complex got = projector_from_contour(psi, gauss, idx, Sign::Minus, p);
    const Complex want = -projector_element(psi, gauss, idx, Sign::Minus);
    add_check(rep, "contour projector extraction around E-_{0,0}",
              std::abs(got - want) / std::max(1.0, std::abs(want)), 1e-8);
  }

  // time reversal relations
  {
    std::vector<GphFunction> probes = random_gaussian_probes(seed + 77, 4, 2, false);
    const auto tr = time_reversal_relations(probes, 1.0, p);
    add_check(rep, "T^2 = 1 (exact)", tr.involution_residual, 0.0);
    add_check(rep, "T U-(t) T = U+(-t) at atom level",
              tr.semigroup_exchange_residual, 1e-14);
    add_check(rep, "T f+ is an exact E- eigenvector with J2 flip",
              tr.tf_eigenvalue_residual, 1e-15);
    add_check(rep, "adjoint relation between P+ and P-", tr.adjoint_residual,
              1e-13);
    add_check(rep, "J0, J2 commute with T (antiunitary)",
              std::max(tr.antiunitary_j0_residual, tr.antiunitary_j2_residual),
              1e-12);
    add_check(rep, "resolvent Schwarz symmetry", tr.schwarz_residual, 1e-8);
  }

  // semigroup membership: decay for t>0, flagged blow-up for t<0
  {
    const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
    const auto sg = semigroup_membership(gauss, {-1.0, 0.0, 1.0}, p);
    const bool ok = !sg.entries[0].coefficients_decay &&
                    sg.entries[0].flagged_blowup &&
                    sg.entries[2].coefficients_decay &&
                    !sg.entries[2].flagged_blowup;
    add_check(rep, "semigroup membership flags", ok ? 0.0 : 1.0, 0.0,
              "no probe decays for both signs of t");
  }
  return rep;
}

// --------------------------------------------------------------------------
// fock
// --------------------------------------------------------------------------

SuiteReport run_fock_suite(const SystemParams& p, int cutoff) {
  SuiteReport rep;
  rep.suite = "fock";
  const auto ops = fock::build(cutoff, p);

  const auto ccr = fock::ccr_residual(ops);
  add_check(rep, "CCR interior residual", ccr.interior, 1e-13);
  add_info(rep, "CCR boundary residual", ccr.boundary,
           "truncation artifact on the outermost shells");
  add_check(rep, "[A,B] = 0 everywhere", ccr.cross, 0.0);

  const auto su = fock::su11_residuals(ops);
  add_check(rep, "su(1,1) interior residual [J1,J2]-iJ3", su.r12, 1e-12);
  add_check(rep, "su(1,1) interior residual [J3,J2]-iJ1", su.r32, 1e-12);
  add_check(rep, "su(1,1) interior residual [J1,J3]-iJ2", su.r13, 1e-12);

  add_check(rep, "Casimir identity interior residual",
            fock::casimir_residual(ops), 1e-12);
  add_check(rep, "H0 = 2hw J0 and HI = 2hg J2 (exact)",
            fock::hamiltonian_equivalence_residual(ops), 0.0);

  double herm = 0.0;
  for (const auto* m : {&ops.j0, &ops.j1, &ops.j2, &ops.j3})
    herm = std::max(herm, fock::hermiticity_residual(*m));
  add_check(rep, "J0, J1, J2, J3 Hermitian on the truncated space", herm, 0.0);

  // spectrum labels against the spectral module
  double lab = 0.0;
  for (const auto& row : fock::label_spectrum(cutoff, p)) {
    const auto want = spectral::label_map_from_occupation(row.nA, row.nB, p);
    lab = std::max({lab, std::abs(row.e_plus - want.e_plus),
                    std::abs(row.e_minus - want.e_minus),
                    std::abs(row.j - want.j), std::abs(row.m - want.m)});
  }
  add_check(rep, "label spectrum matches the spectral module (exact)", lab, 0.0);
  return rep;
}

std::vector<SuiteReport> run_all_suites(const SystemParams& p,
                                        unsigned long long seed) {
  return {run_funcalg_suite(p, seed), run_classical_suite(p, seed),
          run_spectral_suite(p, seed), run_resonance_suite(p, seed),
          run_fock_suite(p)};
}

}  // namespace bateman::verify
