#ifndef BATEMAN_FOCK_HPP
#define BATEMAN_FOCK_HPP

#include <vector>

#include <Eigen/SparseCore>

#include "bateman/types.hpp"

namespace bateman::fock {

using SpMat = Eigen::SparseMatrix<Complex>;

// Two-mode ladder algebra truncated at occupation cutoff N per mode.
// Basis index = nA * (N+1) + nB. Interior states (both occupations
// <= N-2) see no truncation artifacts in quadratic expressions.
struct OperatorSet {
  int cutoff = 0;
  SystemParams params;
  SpMat a, b, a_dag, b_dag;
  SpMat j0, j1, j2, j3;
  SpMat h0, hi;

  int dim() const { return (cutoff + 1) * (cutoff + 1); }
  int index(int nA, int nB) const { return nA * (cutoff + 1) + nB; }
  bool interior(int basis_index, int margin = 2) const {
    const int nA = basis_index / (cutoff + 1);
    const int nB = basis_index % (cutoff + 1);
    return nA <= cutoff - margin && nB <= cutoff - margin;
  }
};

OperatorSet build(int cutoff, const SystemParams& p);

// max |entry| of M over entries whose row and column are both interior
double interior_max_abs(const SpMat& m, const OperatorSet& ops, int margin = 2);

struct CcrReport {
  double interior = 0.0;   // max over [A,A+]-1 and [B,B+]-1, interior block
  double boundary = 0.0;   // same residuals on the full truncated space
  double cross = 0.0;      // max |[A,B]| everywhere (exactly zero)
};
CcrReport ccr_residual(const OperatorSet& ops);

struct Su11Residuals {
  double r12 = 0.0;  // [J1,J2] - iJ3
  double r32 = 0.0;  // [J3,J2] - iJ1
  double r13 = 0.0;  // [J1,J3] - iJ2
};
Su11Residuals su11_residuals(const OperatorSet& ops);

// J0^2 - (1/4 + J3^2 - J1^2 - J2^2), interior block
double casimir_residual(const OperatorSet& ops);

// max of |H0 - 2 hbar omega J0| and |HI - 2 hbar gamma J2| over all entries
double hamiltonian_equivalence_residual(const OperatorSet& ops);

double hermiticity_residual(const SpMat& m);

struct SpectrumRow {
  int nA = 0, nB = 0;
  double j = 0.0, m = 0.0;
  int l = 0, n = 0;
  Complex e_plus, e_minus;
};
std::vector<SpectrumRow> label_spectrum(int cutoff, const SystemParams& p);

}  // namespace bateman::fock

#endif
