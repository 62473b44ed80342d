#ifndef BATEMAN_RESONANCE_HPP
#define BATEMAN_RESONANCE_HPP

#include <string>
#include <vector>

#include "bateman/funcalg.hpp"
#include "bateman/spectral.hpp"
#include "bateman/types.hpp"

namespace bateman::resonance {

using spectral::ResonanceIndex;

enum class Sign { Plus, Minus };

// The normalization conventions the theory leaves free, fixed once:
//  - contour_over_taylor: measured ratio residue_contour / residue_taylor
//    (a single global constant; analytically i),
//  - t_phase: phase in T f+ = t_phase * (f- representative); pinned to 1 by
//    defining the f- representative as the time reversal of f+.
struct Conventions {
  Complex contour_over_taylor{};
  Complex t_phase{1.0, 0.0};
};
const Conventions& conventions();

// f+_{nl} = (2 pi k!)^{-1/2} r^k e^{-i l phi}, k = |l| + 2n.
double f_plus_coefficient(int k);
GphFunction f_plus(const ResonanceIndex& idx);

// Concrete E- eigenfunction representing f-: the time reversal of f+
// (a pure power r^{-k-2}); the delta-type functional itself is realized by
// pair_minus.
GphFunction f_minus_representative(const ResonanceIndex& idx);

// Taylor-type functional: taylor_coeff(psi, l, k) / f_plus_coefficient(k).
// Linear in psi; the biorthogonality pair_minus(f_plus(idx), idx) = 1 is
// exact by construction.
Complex pair_minus(const GphFunction& psi, const ResonanceIndex& idx);

// Moment-type functional <f+_{idx}|phi> = sqrt(2 pi / k!) moment(phi, l, k).
Complex pair_plus(const GphFunction& phi, const ResonanceIndex& idx);

// <psi|P^sign_idx phi>:
//   minus: conj(pair_minus(psi)) * pair_plus(phi)
//   plus:  conj(pair_plus(psi)) * pair_minus(phi)   ( P+ = (P-)^dag )
Complex projector_element(const GphFunction& psi, const GphFunction& phi,
                          const ResonanceIndex& idx, Sign sign);

// |pair_minus(f_plus(idx2), idx1) - delta_{idx1, idx2}|
double biorthogonality_residual(const ResonanceIndex& idx1,
                                const ResonanceIndex& idx2);

// One term 2 pi conj(t_{l,k}(psi)) m_{l,k}(phi) of the resonance expansion,
// evaluated stably (log-gamma form) for large n.
Complex expansion_term(const GphFunction& psi, const GphFunction& phi,
                       const ResonanceIndex& idx);

struct AbelOptions {
  double x = 1.0 - 1e-4;      // finest regularization parameter
  int richardson_points = 4;  // extrapolation in h = 1-x with h, 2h, 4h, ...
  long max_terms = 400000;
  double tail_tol = 1e-13;
};

struct WeakIdentityReport {
  Complex target{};                  // <psi|phi>
  std::vector<Complex> partial;      // S_0 .. S_N (sum over n <= N, all shared l)
  std::vector<double> abs_error;     // |S_N - target|
  bool oscillatory = false;
  int exact_from = -1;               // first N with relative error <= 1e-12, -1 if none
  Complex abel_value{};              // Abel sum at x = opts.x
  Complex abel_limit{};              // Richardson extrapolation of the Abel sums to x -> 1
  double abel_x = 0.0;
};
WeakIdentityReport weak_identity_sum(const GphFunction& psi,
                                     const GphFunction& phi, int nmax,
                                     const AbelOptions& opts = {});

// Same sum weighted by E-_{nl}; equals <psi|H phi> exactly when psi has a
// finite Taylor expansion in every shared sector.
Complex spectral_sum_H(const GphFunction& psi, const GphFunction& phi,
                       int nmax, const SystemParams& p);

struct CoefficientEvolution {
  Complex measured{};   // pair_plus(evolve(phi, t), idx) / pair_plus(phi, idx)
  Complex predicted{};  // exp(-i E-_{nl} t / hbar)
};
CoefficientEvolution coefficient_evolution(const GphFunction& phi,
                                           const ResonanceIndex& idx, double t,
                                           const SystemParams& p);

struct PropagatorReport {
  double group_law_residual = 0.0;   // evolve(evolve(phi,t),s) vs evolve(phi,t+s)
  double kernel_map_residual = 0.0;  // pullback kernel action vs evolve, pointwise
};
PropagatorReport propagator_consistency(const GphFunction& phi, double t,
                                        double s, const SystemParams& p);

enum class ResolventMethod { SpectralIntegral, ResonanceSum, OdeSolve };

struct ResolventOptions {
  double quad_tol = 1e-11;
  double lambda_cut = 60.0;  // spectral-integral window [-cut, cut]
  int nmax = -1;             // ResonanceSum truncation for non-polynomial psi
};

struct ResolventValue {
  Complex value{};
  double bound = 0.0;  // reported error bound (SpectralIntegral only)
};

// <psi | (H - z)^{-1} phi> by three routes:
//  (a) SpectralIntegral: sum_l Int d lambda <psi|Psi><Psi|phi> / (E - z);
//      needs Gaussian-decaying psi and z off the real axis,
//  (b) ResonanceSum: sum 2 pi conj(t) m / (E-_{nl} - z); finite (exact) when
//      psi is polynomial-type; equals (a) for Im z > 0, continues it below,
//  (c) OdeSolve: closed-form first-order radial ODE solution (regular at 0
//      for Im z < 0, integrated from infinity for Im z > 0), then <psi|u>
//      by adaptive quadrature.
ResolventValue resolvent_element(const GphFunction& psi, const GphFunction& phi,
                                 Complex z, ResolventMethod method,
                                 const SystemParams& p,
                                 const ResolventOptions& opts = {});

// Meromorphic continuation of the restricted resolvents R-+ across the real
// axis: quadrature term plus the closed-form homogeneous-multiple term whose
// gamma poles are exactly the E-+ lattices. For branch Minus this equals the
// plain matrix element when Im z > 0 and continues it to Im z < 0 where the
// E- poles live (and mirrored for Plus).
ResolventValue resolvent_element_continued(const GphFunction& psi,
                                           const GphFunction& phi, Complex z,
                                           Sign branch, const SystemParams& p,
                                           const ResolventOptions& opts = {});

struct ContourOptions {
  double radius = 0.4;
  int points = 64;
  bool use_resonance_sum = false;  // default: continued ODE-route integrand
};

// (1/2 pi i) closed ccw circle integral of the continued resolvent around
// E^{sign}_{idx}; equals -<psi|P^{sign}_{idx} phi>.
Complex projector_from_contour(const GphFunction& psi, const GphFunction& phi,
                               const ResonanceIndex& idx, Sign sign,
                               const SystemParams& p,
                               const ContourOptions& opts = {});

struct TimeReversalReport {
  double involution_residual = 0.0;       // T^2 = 1, atom level
  double semigroup_exchange_residual = 0.0;  // T U-(t) T = U+(-t), atom level
  double tf_eigenvalue_residual = 0.0;    // H (T f+) = E- (T f+), J2 flip
  double adjoint_residual = 0.0;          // <psi|P+ phi> = conj(<phi|P- psi>)
  double antiunitary_j0_residual = 0.0;   // J0 T = T J0 pointwise
  double antiunitary_j2_residual = 0.0;   // J2 T = T J2 pointwise
  double schwarz_residual = 0.0;          // <psi|R(z)phi> = conj(<phi|R(conj z)psi>)
};
TimeReversalReport time_reversal_relations(const std::vector<GphFunction>& probes,
                                           double t, const SystemParams& p);

struct SemigroupEntry {
  double t = 0.0;
  double beta_scale = 0.0;           // e^{2 gamma t}: Gaussian decay-rate factor
  double max_coeff_growth = 0.0;     // max over grid of |measured ratio|
  bool coefficients_decay = false;   // all ratios <= 1
  bool flagged_blowup = false;       // t < 0 with growing coefficients
};
struct SemigroupReport {
  std::vector<SemigroupEntry> entries;
};
SemigroupReport semigroup_membership(const GphFunction& phi,
                                     const std::vector<double>& tlist,
                                     const SystemParams& p, int lmax = 5,
                                     int nmax = 5);

}  // namespace bateman::resonance

#endif
