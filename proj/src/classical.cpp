#include "bateman/classical.hpp"

#include <cmath>

namespace bateman::classical {

std::pair<double, double> damped_trajectory(const SystemParams& p, double x0,
                                            double v0, double t) {
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  const double e = std::exp(-p.gamma * t);
  const double b = (v0 + p.gamma * x0) / p.omega;
  const double x = e * (x0 * c + b * s);
  const double xdot =
      e * (-p.gamma * (x0 * c + b * s) + (-x0 * p.omega * s + b * p.omega * c));
  return {x, xdot};
}

std::pair<double, double> dual_trajectory(const SystemParams& p, double y0,
                                          double w0, double t) {
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  const double e = std::exp(p.gamma * t);
  const double b = (w0 - p.gamma * y0) / p.omega;
  const double y = e * (y0 * c + b * s);
  const double ydot =
      e * (p.gamma * (y0 * c + b * s) + (-y0 * p.omega * s + b * p.omega * c));
  return {y, ydot};
}

double hamiltonian_value(const PhasePoint& s, const SystemParams& p) {
  const auto& q = s.q;
  switch (s.chart) {
    case Chart::Bateman: {
      const double x = q[0], y = q[1], px = q[2], py = q[3];
      return px * py - p.gamma * (x * px - y * py) + p.omega * p.omega * x * y;
    }
    case Chart::Pontriagin: {
      const double x1 = q[0], x2 = q[1], p1 = q[2], p2 = q[3];
      return p.omega * (p1 * x2 - p2 * x1) - p.gamma * (p1 * x1 + p2 * x2);
    }
    case Chart::Polar: {
      const double r = q[0], pr = q[2], pphi = q[3];
      return -p.omega * pphi - p.gamma * r * pr;
    }
  }
  return 0.0;
}

Eigen::Matrix2d flow_matrix(const SystemParams& p) {
  Eigen::Matrix2d F;
  F << -p.gamma, p.omega, -p.omega, -p.gamma;
  return F;
}

namespace {

PhasePoint pontriagin_flow(const PhasePoint& s, double t,
                           const SystemParams& p) {
  const double c = std::cos(p.omega * t);
  const double si = std::sin(p.omega * t);
  const double em = std::exp(-p.gamma * t);
  const double ep = std::exp(p.gamma * t);
  // e^{F t} = e^{-gamma t} R(omega t), e^{-F^T t} = e^{+gamma t} R(omega t)
  // with R the clockwise rotation [[c, s], [-s, c]].
  const double x1 = s.q[0], x2 = s.q[1], p1 = s.q[2], p2 = s.q[3];
  PhasePoint out = s;
  out.q[0] = em * (c * x1 + si * x2);
  out.q[1] = em * (-si * x1 + c * x2);
  out.q[2] = ep * (c * p1 + si * p2);
  out.q[3] = ep * (-si * p1 + c * p2);
  return out;
}

PhasePoint to_pontriagin(const PhasePoint& s, const SystemParams& p) {
  switch (s.chart) {
    case Chart::Pontriagin:
      return s;
    case Chart::Bateman: {
      const double x = s.q[0], y = s.q[1], px = s.q[2], py = s.q[3];
      const double sw = std::sqrt(p.omega);
      return {Chart::Pontriagin, {py / sw, -sw * x, -sw * y, -px / sw}};
    }
    case Chart::Polar: {
      const double r = s.q[0], phi = s.q[1], pr = s.q[2], pphi = s.q[3];
      if (!(r > 0.0)) throw ChartSingularityError("polar chart requires r > 0");
      const double c = std::cos(phi), si = std::sin(phi);
      return {Chart::Pontriagin,
              {r * c, r * si, pr * c - (pphi / r) * si,
               pr * si + (pphi / r) * c}};
    }
  }
  return s;
}

PhasePoint from_pontriagin(const PhasePoint& s, Chart target,
                           const SystemParams& p) {
  switch (target) {
    case Chart::Pontriagin:
      return s;
    case Chart::Bateman: {
      const double x1 = s.q[0], x2 = s.q[1], p1 = s.q[2], p2 = s.q[3];
      const double sw = std::sqrt(p.omega);
      // inverse of x1 = py/sw, x2 = -sw x, p1 = -sw y, p2 = -px/sw
      return {Chart::Bateman, {-x2 / sw, -p1 / sw, -sw * p2, sw * x1}};
    }
    case Chart::Polar: {
      const double x1 = s.q[0], x2 = s.q[1], p1 = s.q[2], p2 = s.q[3];
      const double r = std::hypot(x1, x2);
      if (!(r > 0.0))
        throw ChartSingularityError("polar chart undefined at the origin");
      const double phi = std::atan2(x2, x1);
      const double pr = (x1 * p1 + x2 * p2) / r;
      const double pphi = x1 * p2 - x2 * p1;
      return {Chart::Polar, {r, phi, pr, pphi}};
    }
  }
  return s;
}

}  // namespace

PhasePoint chart_transform(const PhasePoint& s, Chart target,
                           const SystemParams& p) {
  if (s.chart == target) return s;
  return from_pontriagin(to_pontriagin(s, p), target, p);
}

PhasePoint flow_evolve(const PhasePoint& s, double t, const SystemParams& p) {
  switch (s.chart) {
    case Chart::Pontriagin:
      return pontriagin_flow(s, t, p);
    case Chart::Polar: {
      PhasePoint out = s;
      out.q[0] = s.q[0] * std::exp(-p.gamma * t);
      out.q[1] = s.q[1] - p.omega * t;
      out.q[2] = s.q[2] * std::exp(p.gamma * t);
      // p_phi constant
      return out;
    }
    case Chart::Bateman: {
      const PhasePoint lifted = to_pontriagin(s, p);
      return from_pontriagin(pontriagin_flow(lifted, t, p), Chart::Bateman, p);
    }
  }
  return s;
}

LiftedRhs pontriagin_lift(const Eigen::MatrixXd& X, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& p_cov) {
  if (X.rows() != X.cols() || X.rows() != x.size() || x.size() != p_cov.size())
    throw DomainError("pontriagin_lift: dimension mismatch");
  LiftedRhs rhs;
  rhs.xdot = X * x;
  rhs.pdot = -X.transpose() * p_cov;
  rhs.hamiltonian = p_cov.dot(X * x);
  return rhs;
}

}  // namespace bateman::classical
