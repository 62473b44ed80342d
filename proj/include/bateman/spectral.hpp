#ifndef BATEMAN_SPECTRAL_HPP
#define BATEMAN_SPECTRAL_HPP

#include <functional>
#include <vector>

#include "bateman/funcalg.hpp"
#include "bateman/numerics.hpp"
#include "bateman/types.hpp"

namespace bateman::spectral {

// Resonance label (l, n); k = |l| + 2n, pole lambda_{nl} = -i(k+1),
// E+- = hbar omega l +- i hbar gamma (k+1).
struct ResonanceIndex {
  int l = 0;
  int n = 0;

  int k() const { return std::abs(l) + 2 * n; }
  Complex lambda_pole() const { return Complex(0.0, -double(k() + 1)); }
  Complex energy_plus(const SystemParams& p) const {
    return Complex(funcalg::h0_eigenvalue(l, p), funcalg::decay_scale(k() + 1, p));
  }
  Complex energy_minus(const SystemParams& p) const {
    return Complex(funcalg::h0_eigenvalue(l, p), -funcalg::decay_scale(k() + 1, p));
  }
  bool operator==(const ResonanceIndex& o) const { return l == o.l && n == o.n; }
};

// All three label systems plus both energy formulas (which must agree).
struct Labels {
  int l = 0, n = 0;
  double j = 0.0, m = 0.0;
  int nA = 0, nB = 0;
  Complex e_plus, e_minus;        // hbar omega l +- i hbar gamma (|l|+2n+1)
  Complex e_plus_jm, e_minus_jm;  // 2 hbar omega j +- i hbar gamma (2m+1)
};
Labels label_map_from_ln(int l, int n, const SystemParams& p);
Labels label_map_from_jm(double j, double m, const SystemParams& p);
Labels label_map_from_occupation(int nA, int nB, const SystemParams& p);

// E_{l lambda} = hbar (l omega + lambda gamma); the complex overload is the
// formal continuation (turns into E- at lambda_{nl}).
double continuum_energy(int l, double lambda, const SystemParams& p);
Complex continuum_energy_continued(int l, Complex lambda, const SystemParams& p);

// Psi_{l lambda}(r, phi) = (1/2pi) e^{-il phi} r^{-(i lambda + 1)}.
Complex eigenfunction_eval(int l, Complex lambda, double r, double phi);

// Meromorphic function of lambda stored as a finite sum of gamma terms
//   prefactor * scale^{-z} * Gamma(z),  z = (power + 1 - dir * i lambda)/2.
// dir = +1 puts the pole string on the negative imaginary axis (bra-side
// pairing <phi|Psi_{l lambda}>), dir = -1 on the positive one.
class SpectralCoefficient {
 public:
  struct Term {
    Complex prefactor{};
    double scale = 1.0;  // > 0
    int power = 0;
    int dir = +1;
  };

  SpectralCoefficient() = default;
  SpectralCoefficient(int l, std::vector<Term> terms)
      : l_(l), terms_(std::move(terms)) {}

  int l() const { return l_; }
  const std::vector<Term>& terms() const { return terms_; }

  Complex eval(Complex lambda) const;

  // poles of dir=+1 terms: lambda = -i(power + 1 + 2j), j = 0..per_term-1
  std::vector<Complex> poles_below(int per_term) const;

  // residue in lambda at lambda_pole from the gamma-term data:
  // sum over terms with power + 1 + 2j = k+1 of prefactor scale^j 2i(-1)^j/j!
  Complex residue_closed_form(const ResonanceIndex& idx) const;

 private:
  int l_ = 0;
  std::vector<Term> terms_;
};

// <phi|Psi_{l lambda}> = Integral r^{-i lambda} conj(phi_l)(r) dr, exact gamma
// representation. Requires sigma=+2, beta>0 atoms at sector l
// (NoClosedFormError otherwise).
SpectralCoefficient spectral_coefficient(const GphFunction& phi, int l);

// <Psi_{l lambda}|phi> (the ket-side coefficient, linear in phi). Defined for
// sigma=+2 (mirror gamma terms) and sigma=-2 atoms (u = 1/r substitution).
SpectralCoefficient ket_coefficient(const GphFunction& phi, int l);

// conj(phi)_l^{(k)}(0) / k!  with k = |l| + 2n.
Complex residue_taylor(const GphFunction& phi, const ResonanceIndex& idx);

struct ResidueExtraction {
  Complex residue{};         // (1/2pi i) closed circle integral
  Complex laurent_minus2{};  // second Laurent coefficient (simple-pole check)
  double accuracy_estimate = 0.0;
  bool warning = false;
};
ResidueExtraction residue_contour(const GphFunction& phi,
                                  const ResonanceIndex& idx,
                                  double radius = 0.5, int points = 64);

struct ParityViolation {
  int l = 0, k = 0;
  double magnitude = 0.0;
};
struct ParityReport {
  // fitted |coefficient| of r^k in phi_l, for |l| <= lmax, 0 <= k <= kmax
  std::vector<std::vector<double>> coeff_abs;
  double norm_scale = 0.0;  // max |phi| over the sample disk
  std::vector<ParityViolation> violations;  // entries above tol with k < |l| or wrong parity
  bool conditioning_warning = false;
  double tolerance = 0.0;
};
// phi is a smooth Cartesian function phi(x1, x2); the fit verifies the
// phi_l(r) = a_l r^{|l|} + a_{l+2} r^{|l|+2} + ... structure.
ParityReport parity_check(const std::function<Complex(double, double)>& phi,
                          int lmax, int kmax, double rel_tol = 1e-8);

struct HardyReport {
  std::vector<double> radii;    // after any pole-avoiding shifts
  std::vector<double> arc_max;  // max |<Psi_{l lambda}|phi>| on the lower arc
  bool decaying = false;
  std::vector<std::string> notes;
};
// Decay diagnostic on lower semicircular arcs |lambda| = R (classification
// heuristic only; not a Hardy-class membership proof).
HardyReport hardy_diagnostic(const GphFunction& phi, int l,
                             std::vector<double> radii);

}  // namespace bateman::spectral

#endif
