#ifndef BATEMAN_TYPES_HPP
#define BATEMAN_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace bateman {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integral or series did not converge / does not exist. Carries the partial
// estimate when one is available.
struct DivergenceError : Error {
  DivergenceError(const std::string& msg, Complex partial_estimate = {},
                  bool has_partial_estimate = false)
      : Error(msg), partial(partial_estimate), has_partial(has_partial_estimate) {}
  Complex partial;
  bool has_partial;
};

// Evaluation requested at (or within 1e-8 of) a pole of the gamma function.
struct PoleError : Error {
  PoleError(const std::string& msg, double nearest)
      : Error(msg), nearest_pole(nearest) {}
  double nearest_pole;  // the offending non-positive integer
};

// Resolvent-type evaluation too close to a spectrum pole.
struct NearPoleError : Error {
  NearPoleError(const std::string& msg, Complex pole_, int l_, int n_)
      : Error(msg), pole(pole_), l(l_), n(n_) {}
  Complex pole;
  int l, n;
};

struct SingularEvaluationError : Error {
  using Error::Error;
};

struct ChartSingularityError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct UndefinedRatioError : Error {
  using Error::Error;
};

struct NoClosedFormError : Error {
  using Error::Error;
};

// Physical constants of the damped oscillator. Underdamped by construction:
// kappa > gamma^2 and omega = sqrt(kappa - gamma^2).
struct SystemParams {
  double hbar = 1.0;
  double gamma = 0.5;
  double kappa = 1.25;
  double omega = 1.0;

  static SystemParams make(double hbar, double gamma, double kappa);
  static SystemParams defaults() { return SystemParams{}; }
};

inline SystemParams SystemParams::make(double hbar, double gamma, double kappa) {
  if (!(hbar > 0.0)) throw DomainError("SystemParams: hbar must be positive");
  if (!(gamma > 0.0)) throw DomainError("SystemParams: gamma must be positive");
  if (!(kappa > gamma * gamma))
    throw DomainError("overdamped parameters rejected (kappa <= gamma^2)");
  SystemParams p;
  p.hbar = hbar;
  p.gamma = gamma;
  p.kappa = kappa;
  p.omega = std::sqrt(kappa - gamma * gamma);
  return p;
}

}  // namespace bateman

#endif
