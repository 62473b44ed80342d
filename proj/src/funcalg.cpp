#include "bateman/funcalg.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <tuple>

namespace bateman {

namespace {

std::tuple<int, int, int, double> atom_key(const Atom& t) {
  return {t.l, t.sigma, t.a, t.beta};
}

}  // namespace

GphFunction::GphFunction(std::vector<Atom> terms) : terms_(std::move(terms)) {
  canonicalize();
}

void GphFunction::canonicalize() {
  for (auto& t : terms_) {
    if (t.sigma != 2 && t.sigma != -2)
      throw DomainError("Atom: sigma must be +2 or -2");
    if (t.sigma == -2 && !(t.beta > 0.0))
      throw DomainError("Atom: sigma=-2 requires beta > 0");
    if (t.beta < 0.0) throw DomainError("Atom: beta must be >= 0");
    if (t.beta == 0.0) t.sigma = +2;
  }
  std::stable_sort(terms_.begin(), terms_.end(), [](const Atom& x, const Atom& y) {
    return atom_key(x) < atom_key(y);
  });
  std::vector<Atom> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && atom_key(merged.back()) == atom_key(t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Atom& t) {
                                return t.coeff.real() == 0.0 &&
                                       t.coeff.imag() == 0.0;
                              }),
               merged.end());
  terms_ = std::move(merged);
}

GphFunction GphFunction::atom(Complex coeff, int l, int a, double beta,
                              int sigma) {
  return GphFunction({Atom{coeff, l, a, beta, sigma}});
}

bool GphFunction::is_zero(double tol) const {
  for (const auto& t : terms_)
    if (std::abs(t.coeff) > tol) return false;
  return true;
}

double GphFunction::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

std::set<int> GphFunction::sectors() const {
  std::set<int> s;
  for (const auto& t : terms_) s.insert(t.l);
  return s;
}

GphFunction GphFunction::sector(int l) const {
  std::vector<Atom> out;
  for (const auto& t : terms_)
    if (t.l == l) out.push_back(t);
  return GphFunction(std::move(out));
}

int GphFunction::max_power(int l) const {
  int m = INT_MIN;
  for (const auto& t : terms_)
    if (t.l == l) m = std::max(m, t.a);
  return m;
}

bool GphFunction::in_smooth_subfamily() const {
  for (const auto& t : terms_) {
    if (t.sigma != +2) return false;
    const int al = std::abs(t.l);
    if (t.a < al || (t.a - al) % 2 != 0) return false;
  }
  return true;
}

GphFunction GphFunction::operator+(const GphFunction& o) const {
  std::vector<Atom> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return GphFunction(std::move(all));
}

GphFunction GphFunction::operator-(const GphFunction& o) const {
  std::vector<Atom> all = terms_;
  for (const auto& t : o.terms_) {
    Atom m = t;
    m.coeff = -m.coeff;
    all.push_back(m);
  }
  return GphFunction(std::move(all));
}

GphFunction GphFunction::scaled(Complex c) const {
  std::vector<Atom> all = terms_;
  for (auto& t : all) t.coeff *= c;
  return GphFunction(std::move(all));
}

namespace funcalg {

namespace {

void push(std::vector<Atom>& out, const Atom& base, Complex factor, int da) {
  if (factor.real() == 0.0 && factor.imag() == 0.0) return;
  Atom t = base;
  t.coeff *= factor;
  t.a += da;
  out.push_back(t);
}

// radial-angular Laplacian d2/dr2 [+ (1/r) d/dr] + r^-2 d2/dphi2 acting on
// one atom; with_first_order selects the full form.
void laplacian_terms(std::vector<Atom>& out, const Atom& t, double prefactor,
                     bool with_first_order) {
  const double a = double(t.a);
  const double l2 = double(t.l) * double(t.l);
  const double sb = double(t.sigma) * t.beta;  // exact: sigma = +-2
  const double p2 =
      with_first_order ? (a * a - l2) : (a * (a - 1.0) - l2);
  const double p1 = with_first_order ? (2.0 * a + double(t.sigma))
                                     : (2.0 * a + double(t.sigma) - 1.0);
  push(out, t, prefactor * p2, -2);
  push(out, t, -prefactor * (sb * p1), t.sigma - 2);
  push(out, t, prefactor * (sb * sb), 2 * t.sigma - 2);
}

void apply_one(OperatorId op, const Atom& t, const SystemParams& p,
               std::vector<Atom>& out) {
  const double a = double(t.a);
  const double sb = double(t.sigma) * t.beta;
  switch (op) {
    case OperatorId::H0:
      push(out, t, Complex(h0_eigenvalue(t.l, p), 0.0), 0);
      break;
    case OperatorId::HI:
      push(out, t, Complex(0.0, decay_scale(t.a + 1, p)), 0);
      push(out, t, Complex(0.0, -p.hbar * p.gamma * sb), t.sigma);
      break;
    case OperatorId::H:
      apply_one(OperatorId::H0, t, p, out);
      apply_one(OperatorId::HI, t, p, out);
      break;
    case OperatorId::Pr:
      push(out, t, Complex(0.0, -p.hbar * (a + 0.5)), -1);
      push(out, t, Complex(0.0, p.hbar * sb), t.sigma - 1);
      break;
    case OperatorId::J0:
      push(out, t, Complex(0.5 * double(t.l), 0.0), 0);
      break;
    case OperatorId::J2:
      push(out, t, Complex(0.0, 0.5 * (a + 1.0)), 0);
      push(out, t, Complex(0.0, -0.5 * sb), t.sigma);
      break;
    case OperatorId::J1:
    case OperatorId::J1Reduced:
      laplacian_terms(out, t, -0.25 * p.hbar, op == OperatorId::J1);
      push(out, t, Complex(-0.25 / p.hbar, 0.0), 2);
      break;
    case OperatorId::J3:
      laplacian_terms(out, t, -0.25 * p.hbar, true);
      push(out, t, Complex(0.25 / p.hbar, 0.0), 2);
      break;
    case OperatorId::J3Reduced:
      laplacian_terms(out, t, -0.25 * p.hbar, false);
      push(out, t, Complex(0.25 / p.hbar, 0.0), 2);
      push(out, t, Complex(0.5 * double(t.l), 0.0), 0);
      break;
  }
}

}  // namespace

GphFunction apply_operator(OperatorId op, const GphFunction& psi,
                           const SystemParams& p) {
  std::vector<Atom> out;
  out.reserve(psi.terms().size() * 4);
  for (const auto& t : psi.terms()) apply_one(op, t, p, out);
  return GphFunction(std::move(out));
}

Complex inner_product(const GphFunction& psi, const GphFunction& phi) {
  Complex total{};
  for (const auto& tp : psi.terms()) {
    for (const auto& tq : phi.terms()) {
      if (tp.l != tq.l) continue;
      if (tp.sigma != +2 || tq.sigma != +2)
        throw DivergenceError(
            "inner_product: sigma=-2 atom pair at sector l=" +
            std::to_string(tp.l) + " is outside the gamma closed form");
      const double B = tp.beta + tq.beta;
      const int a = tp.a + tq.a;
      if (!(B > 0.0))
        throw DivergenceError("inner_product: pure-power pair (a_psi=" +
                              std::to_string(tp.a) + ", a_phi=" +
                              std::to_string(tq.a) + ", l=" +
                              std::to_string(tp.l) + ") is non-integrable");
      if (a + 2 <= 0)
        throw DivergenceError("inner_product: non-integrable origin power a=" +
                              std::to_string(a) + " at l=" +
                              std::to_string(tp.l));
      const double half_a2 = 0.5 * double(a + 2);
      total += kTwoPi * std::conj(tp.coeff) * tq.coeff * 0.5 *
               std::pow(B, -half_a2) * std::tgamma(half_a2);
    }
  }
  return total;
}

Complex taylor_coeff(const GphFunction& psi, int l, int k) {
  if (k < 0) return Complex{};
  Complex total{};
  for (const auto& t : psi.terms()) {
    if (t.l != l) continue;
    if (t.sigma == -2) continue;  // flat at the origin
    if (t.a < 0)
      throw SingularEvaluationError(
          "taylor_coeff: sector l=" + std::to_string(l) +
          " has a negative-power atom (a=" + std::to_string(t.a) + ")");
    if (t.a > k || (k - t.a) % 2 != 0) continue;
    const int j = (k - t.a) / 2;
    // c * (-beta)^j / j!
    double w = 1.0;
    for (int i = 1; i <= j; ++i) w *= -t.beta / double(i);
    total += t.coeff * w;
  }
  return total;
}

Complex moment(const GphFunction& phi, int l, int k) {
  Complex total{};
  for (const auto& t : phi.terms()) {
    if (t.l != l) continue;
    if (t.sigma != +2 || !(t.beta > 0.0))
      throw DivergenceError("moment: divergent moment at l=" +
                            std::to_string(l) + " (atom a=" +
                            std::to_string(t.a) + ", beta=" +
                            std::to_string(t.beta) + ")");
    if (k + t.a + 2 <= 0)
      throw DivergenceError("moment: non-integrable origin power at l=" +
                            std::to_string(l));
    const double s = 0.5 * double(k + t.a + 2);
    total += t.coeff * 0.5 * std::pow(t.beta, -s) * std::tgamma(s);
  }
  return total;
}

GphFunction evolve(const GphFunction& psi, double t, const SystemParams& p) {
  std::vector<Atom> out = psi.terms();
  for (auto& atom : out) {
    const double growth = std::exp(p.gamma * double(atom.a + 1) * t);
    const Complex phase = std::polar(1.0, -double(atom.l) * p.omega * t);
    atom.coeff *= growth * phase;
    atom.beta *= std::exp(double(atom.sigma) * p.gamma * t);
  }
  return GphFunction(std::move(out));
}

GphFunction time_reverse(const GphFunction& psi) {
  std::vector<Atom> out = psi.terms();
  for (auto& atom : out) {
    atom.coeff = std::conj(atom.coeff);
    atom.a = -atom.a - 2;
    if (atom.beta > 0.0) atom.sigma = -atom.sigma;
  }
  return GphFunction(std::move(out));
}

Complex eval_point(const GphFunction& psi, double r, double phi) {
  if (r < 0.0) throw DomainError("eval_point: r must be >= 0");
  Complex total{};
  for (const auto& t : psi.terms()) {
    if (r == 0.0) {
      if (t.a < 0 || t.sigma == -2)
        throw SingularEvaluationError(
            "eval_point: negative radial power at r=0");
      if (t.a > 0) continue;
      total += t.coeff;  // a == 0: exp(0) = 1
      continue;
    }
    const double radial =
        std::pow(r, double(t.a)) *
        std::exp(-t.beta * (t.sigma == +2 ? r * r : 1.0 / (r * r)));
    total += t.coeff * radial * std::polar(1.0, -double(t.l) * phi);
  }
  return total;
}

}  // namespace funcalg
}  // namespace bateman
