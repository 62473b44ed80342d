#include "bateman/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace bateman::numerics {

namespace {

// Godfrey's Lanczos coefficients, g = 607/128, relative error < 1e-15 on the
// right half-plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;

Complex lanczos_log_gamma_right(Complex z) {
  // valid for Re z >= 0.5
  Complex sum = kLanczosC[0];
  for (int k = 1; k < 15; ++k) sum += kLanczosC[k] / (z + double(k - 1));
  const Complex t = z + (kLanczosG - 0.5);
  return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

// log(sin(pi z)) stable against overflow for large |Im z|; imaginary part
// modulo 2*pi.
Complex log_sin_pi(Complex z) {
  const Complex iPiZ = Complex(0.0, kPi) * z;
  if (z.imag() < 0.0) {
    // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2i)
    return iPiZ + std::log(1.0 - std::exp(-2.0 * iPiZ)) -
           std::log(Complex(0.0, 2.0));
  }
  // sin(pi z) = -e^{-i pi z} (1 - e^{+2 i pi z}) / (2i)
  return -iPiZ + std::log(1.0 - std::exp(2.0 * iPiZ)) -
         std::log(Complex(0.0, -2.0));
}

void check_gamma_pole(Complex z) {
  if (z.real() > 0.5) return;
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - nearest) < 1e-8)
    throw PoleError("log_gamma: argument within 1e-8 of a gamma pole", nearest);
}

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half, symmetric).
constexpr double kGK_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kGK_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss-7 weights attach to kGK_nodes[1], [3], [5], [7].
constexpr double kGK_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<Complex(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex kronrod{};
  Complex gauss{};
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kGK_nodes[i];
    const Complex fv =
        (i == 7) ? f(mid) : f(mid - dx) + f(mid + dx);
    kronrod += kGK_wk[i] * fv;
    if (i % 2 == 1) gauss += kGK_wg[i / 2] * fv;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = half * kronrod;
  p.error = std::abs(half * (kronrod - gauss));
  return p;
}

QuadratureResult adaptive(const std::function<Complex(double)>& f, double a,
                          double b, double tol, int max_panels,
                          bool throw_on_budget) {
  std::priority_queue<Panel> queue;
  Panel whole = gk15(f, a, b);
  Complex total = whole.value;
  double err = whole.error;
  std::size_t evals = 15;
  queue.push(whole);
  int splits = 0;
  while (err > tol * std::max(1.0, std::abs(total)) && splits < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted by rounding
      queue.push(Panel{worst.a, worst.b, worst.value, 0.0});
      continue;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    evals += 30;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  QuadratureResult res{total, err, evals};
  if (err > tol * std::max(1.0, std::abs(total)) && throw_on_budget)
    throw DivergenceError("adaptive quadrature: refinement budget exhausted",
                          total, true);
  return res;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (std::isnan(z.real()) || std::isnan(z.imag()))
    throw DomainError("log_gamma: NaN argument");
  check_gamma_pole(z);
  if (z.real() >= 0.5) return lanczos_log_gamma_right(z);
  // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
  return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma_right(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

QuadratureResult integrate_interval(const std::function<Complex(double)>& f,
                                    double a, double b, double tol,
                                    int max_panels) {
  if (a == b) return {Complex{}, 0.0, 0};
  return adaptive(f, a, b, tol, max_panels, true);
}

QuadratureResult integrate_semiinfinite(const std::function<Complex(double)>& f,
                                        double tol,
                                        const QuadratureOptions& opts) {
  const double R = opts.split_radius;
  QuadratureResult head = adaptive(f, 0.0, R, 0.5 * tol, opts.max_panels, false);
  // tail: r = R + sinh(u); Gaussian and exponential tails both become
  // doubly-exponentially small in u.
  const double umax = std::asinh(opts.tail_range);
  auto tail_f = [&](double u) {
    return f(R + std::sinh(u)) * std::cosh(u);
  };
  QuadratureResult tail =
      adaptive(tail_f, 0.0, umax, 0.5 * tol, opts.max_panels, false);
  QuadratureResult res;
  res.value = head.value + tail.value;
  res.error_bound = head.error_bound + tail.error_bound;
  res.evaluations = head.evaluations + tail.evaluations;
  if (res.error_bound > tol * std::max(1.0, std::abs(res.value)))
    throw DivergenceError("integrate_semiinfinite: did not converge", res.value,
                          true);
  // the mapped integrand must have died out by the far end of the tail
  // window, otherwise the value depends on the (arbitrary) cutoff
  const double leftover = std::abs(tail_f(0.9 * umax));
  if (leftover > std::max(tol, 1e-13) * std::max(1.0, std::abs(res.value)))
    throw DivergenceError(
        "integrate_semiinfinite: integrand has not decayed across the tail",
        res.value, true);
  return res;
}

QuadratureResult integrate_real_line(const std::function<Complex(double)>& f,
                                     double tol,
                                     const QuadratureOptions& opts) {
  QuadratureResult pos = integrate_semiinfinite(f, 0.5 * tol, opts);
  QuadratureResult neg = integrate_semiinfinite(
      [&](double r) { return f(-r); }, 0.5 * tol, opts);
  // the r = 0 point is measure zero; both halves include it with weight 0+
  QuadratureResult res;
  res.value = pos.value + neg.value;
  res.error_bound = pos.error_bound + neg.error_bound;
  res.evaluations = pos.evaluations + neg.evaluations;
  return res;
}

namespace {

Complex circle_trapezoid(const std::function<Complex(Complex)>& f,
                         const ContourSpec& spec, int n) {
  // compensated summation: the large-|f| cancellations on wide contours
  // otherwise eat the spectral accuracy
  Complex sum{};
  Complex comp{};
  for (int k = 0; k < n; ++k) {
    const double theta = kTwoPi * double(k) / double(n);
    const Complex e = std::polar(1.0, theta);
    const Complex z = spec.center + spec.radius * e;
    const Complex term = f(z) * Complex(0.0, 1.0) * spec.radius * e;
    const Complex y = term - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum * (kTwoPi / double(n));
}

}  // namespace

ContourResult contour_integral(const std::function<Complex(Complex)>& f,
                               const ContourSpec& spec) {
  if (spec.points < 16) throw DomainError("contour_integral: points must be >= 16");
  if (!(spec.radius > 0.0)) throw DomainError("contour_integral: radius must be > 0");
  const int n = spec.points;
  const int nh = std::max(16, n / 2);
  const Complex full = circle_trapezoid(f, spec, n);
  const Complex half = circle_trapezoid(f, spec, nh);
  ContourResult res;
  res.value = (spec.orientation == Orientation::Counterclockwise) ? full : -full;
  res.accuracy_estimate = std::abs(full - half);
  // geometric convergence makes |I_N - I_{N/2}| a gross overestimate of the
  // N-point error; anything above 1e-6 relative means the Fourier modes of f
  // on the circle had not decayed by mode N/2
  res.accuracy_warning =
      res.accuracy_estimate > 1e-6 * std::max(1.0, std::abs(full));
  return res;
}

Complex angular_project(const std::function<Complex(double, double)>& f, int l,
                        double r, int min_points) {
  const int n = std::max({min_points, 4 * std::abs(l) + 16});
  Complex sum{};
  for (int k = 0; k < n; ++k) {
    const double phi = kTwoPi * double(k) / double(n);
    sum += std::polar(1.0, double(l) * phi) * f(r, phi);
  }
  return sum / double(n);
}

}  // namespace bateman::numerics
