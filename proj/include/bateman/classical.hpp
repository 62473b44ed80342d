#ifndef BATEMAN_CLASSICAL_HPP
#define BATEMAN_CLASSICAL_HPP

#include <array>

#include <Eigen/Dense>

#include "bateman/types.hpp"

namespace bateman::classical {

enum class Chart { Bateman, Pontriagin, Polar };

// Classical state in one of the three charts:
//   Bateman    (x, y, p_x, p_y)
//   Pontriagin (x1, x2, p1, p2)
//   Polar      (r, phi, p_r, p_phi), r > 0
struct PhasePoint {
  Chart chart = Chart::Bateman;
  std::array<double, 4> q{};  // two positions then two momenta
};

// (x(t), xdot(t)) for xddot + 2 gamma xdot + kappa x = 0.
std::pair<double, double> damped_trajectory(const SystemParams& p, double x0,
                                            double v0, double t);

// (y(t), ydot(t)) for the dual (amplified) equation, gamma -> -gamma.
std::pair<double, double> dual_trajectory(const SystemParams& p, double y0,
                                          double w0, double t);

double hamiltonian_value(const PhasePoint& s, const SystemParams& p);

// Exact flow: rotation blocks e^{F t} / e^{-F^T t} in the Pontriagin chart,
// (r e^{-gamma t}, phi - omega t, p_r e^{gamma t}, p_phi) in polar, and the
// Bateman chart routed through the canonical map.
PhasePoint flow_evolve(const PhasePoint& s, double t, const SystemParams& p);

PhasePoint chart_transform(const PhasePoint& s, Chart target,
                           const SystemParams& p);

// Linear-field lift: H = p . X x with Hamilton equations
// xdot = X x, pdot = -X^T p.
struct LiftedRhs {
  Eigen::VectorXd xdot;
  Eigen::VectorXd pdot;
  double hamiltonian = 0.0;
};
LiftedRhs pontriagin_lift(const Eigen::MatrixXd& X, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& p_cov);

// F = [[-gamma, omega], [-omega, -gamma]] of the first-order damped system.
Eigen::Matrix2d flow_matrix(const SystemParams& p);

}  // namespace bateman::classical

#endif
