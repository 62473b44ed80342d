#ifndef BATEMAN_NUMERICS_HPP
#define BATEMAN_NUMERICS_HPP

#include <functional>

#include "bateman/types.hpp"

namespace bateman::numerics {

// Principal-branch log of the gamma function (Lanczos sum, reflection formula
// for Re z < 0.5). On the reflected half-plane the imaginary part is defined
// modulo 2*pi; exp(log_gamma(z)) is always the gamma function itself.
// Throws PoleError within 1e-8 of a non-positive integer.
Complex log_gamma(Complex z);

// exp(log_gamma(z)); same pole guard.
Complex gamma(Complex z);

struct QuadratureResult {
  Complex value{};
  double error_bound = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double split_radius = 10.0;  // [0, R] handled by adaptive panels, tail mapped
  int max_panels = 4000;
  double tail_range = 1e8;     // tail substitution covers r in [R, R + tail_range]
};

// Adaptive Gauss-Kronrod 7/15 on a finite interval.
QuadratureResult integrate_interval(const std::function<Complex(double)>& f,
                                    double a, double b, double tol,
                                    int max_panels = 4000);

// Integral over [0, inf): adaptive panels on [0, R] plus the sinh-mapped tail
// r = R + sinh(u). Throws DivergenceError (with partial estimate) if the
// refinement budget is exhausted before reaching tol.
QuadratureResult integrate_semiinfinite(const std::function<Complex(double)>& f,
                                        double tol,
                                        const QuadratureOptions& opts = {});

// Integral over (-inf, inf), both tails sinh-mapped.
QuadratureResult integrate_real_line(const std::function<Complex(double)>& f,
                                     double tol,
                                     const QuadratureOptions& opts = {});

enum class Orientation { Counterclockwise, Clockwise };

struct ContourSpec {
  Complex center{};
  double radius = 1.0;
  int points = 64;  // >= 16
  Orientation orientation = Orientation::Counterclockwise;
};

struct ContourResult {
  Complex value{};
  double accuracy_estimate = 0.0;  // |I_N - I_{N/2}|
  bool accuracy_warning = false;
};

// Closed circle integral by the periodic trapezoid rule (spectrally accurate
// for integrands analytic in a neighbourhood of the circle). The accuracy
// warning fires when halving the point count changes the result appreciably,
// i.e. the Fourier coefficients of f on the circle have not decayed.
ContourResult contour_integral(const std::function<Complex(Complex)>& f,
                               const ContourSpec& spec);

// (1/2pi) * Integral_0^{2pi} e^{i l phi} f(r, phi) dphi by the N-point
// periodic trapezoid rule, N >= max(min_points, 4|l| + 16).
Complex angular_project(const std::function<Complex(double, double)>& f, int l,
                        double r, int min_points = 0);

}  // namespace bateman::numerics

#endif
