#ifndef BATEMAN_FUNCALG_HPP
#define BATEMAN_FUNCALG_HPP

#include <set>
#include <vector>

#include "bateman/types.hpp"

namespace bateman {

// One radial-harmonic atom  coeff * r^a * exp(-beta r^sigma) * exp(-i l phi),
// sigma in {+2, -2}. sigma = -2 requires beta > 0; a pure negative power is
// written as sigma = +2, beta = 0, a < 0.
struct Atom {
  Complex coeff{};
  int l = 0;
  int a = 0;
  double beta = 0.0;
  int sigma = +2;
};

// Finite sum of atoms in canonical form: terms sorted by (l, sigma, a, beta),
// equal keys merged, exact-zero coefficients removed. The algebra is closed
// under every operator this library applies.
class GphFunction {
 public:
  GphFunction() = default;
  explicit GphFunction(std::vector<Atom> terms);

  static GphFunction atom(Complex coeff, int l, int a, double beta = 0.0,
                          int sigma = +2);
  static GphFunction zero() { return GphFunction(); }

  const std::vector<Atom>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_zero(double tol) const;
  double max_abs_coeff() const;

  std::set<int> sectors() const;
  GphFunction sector(int l) const;
  // largest radial power among atoms at sector l; INT_MIN when empty
  int max_power(int l) const;
  bool in_smooth_subfamily() const;  // all atoms sigma=+2, a >= |l|, a == |l| (mod 2)

  GphFunction operator+(const GphFunction& o) const;
  GphFunction operator-(const GphFunction& o) const;
  GphFunction scaled(Complex c) const;

 private:
  std::vector<Atom> terms_;
  void canonicalize();
};

namespace funcalg {

enum class OperatorId {
  H0,        // i omega hbar d/dphi
  HI,        // i gamma hbar (r d/dr + 1)
  H,         // H0 + HI
  Pr,        // -i hbar (d/dr + 1/(2r))
  J0,        // (i/2) d/dphi
  J1,        // -(hbar/4) (d2/dr2 + (1/r) d/dr + r^-2 d2/dphi2) - r^2/(4 hbar)
  J2,        // (i/2) (r d/dr + 1)
  J3,        // -(hbar/4) (d2/dr2 + (1/r) d/dr + r^-2 d2/dphi2) + r^2/(4 hbar)
  J1Reduced, // J1 without the (1/r) d/dr term
  J3Reduced, // J3 without the (1/r) d/dr term, plus an extra (i/2) d/dphi
};

// Exact closed-form image; the algebra is closed under every listed operator.
GphFunction apply_operator(OperatorId op, const GphFunction& psi,
                           const SystemParams& p);

// <psi|phi> on L^2(R+, r dr) x L^2(S^1), antilinear in psi. Every cross pair
// must have sigma=+2, beta_psi + beta_phi > 0 and a_psi + a_phi + 2 > 0;
// otherwise DivergenceError naming the offending atoms.
Complex inner_product(const GphFunction& psi, const GphFunction& phi);

// Coefficient of r^k in the power series of the angular component psi_l(r).
// sigma=-2 atoms are flat at r=0 and contribute 0; sigma=+2 atoms with a < 0
// at sector l make the expansion undefined (SingularEvaluationError).
Complex taylor_coeff(const GphFunction& psi, int l, int k);

// Integral_0^inf r^{k+1} phi_l(r) dr in gamma closed form. Requires
// Gaussian decay (sigma=+2, beta>0) at sector l.
Complex moment(const GphFunction& phi, int l, int k);

// (U(t) psi)(r, phi) = e^{gamma t} psi(e^{gamma t} r, phi + omega t):
// per atom, coeff *= e^{gamma (a+1) t} e^{-i l omega t}, beta *= e^{sigma gamma t}.
GphFunction evolve(const GphFunction& psi, double t, const SystemParams& p);

// (T psi)(r, phi) = r^{-2} conj(psi)(1/r, -phi). Antiunitary involution:
// coeff -> conj(coeff), a -> -a-2, sigma -> -sigma (beta=0 keeps sigma=+2).
GphFunction time_reverse(const GphFunction& psi);

// Direct summation; r = 0 with negative powers raises
// SingularEvaluationError.
Complex eval_point(const GphFunction& psi, double r, double phi);

// Shared eigenvalue scalars, written once so closed-form routes and operator
// routes produce bitwise-identical doubles.
inline double h0_eigenvalue(int l, const SystemParams& p) {
  return p.hbar * p.omega * double(l);
}
inline double decay_scale(int m, const SystemParams& p) {
  return p.hbar * p.gamma * double(m);
}

}  // namespace funcalg
}  // namespace bateman

#endif
