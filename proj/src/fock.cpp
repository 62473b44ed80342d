#include "bateman/fock.hpp"

#include <cmath>

#include "bateman/spectral.hpp"

namespace bateman::fock {

namespace {

using Triplets = std::vector<Eigen::Triplet<Complex>>;

SpMat from_triplets(Triplets& t, int dim) {
  SpMat m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

SpMat identity(int dim) {
  SpMat m(dim, dim);
  m.setIdentity();
  return m;
}

}  // namespace

OperatorSet build(int cutoff, const SystemParams& p) {
  if (cutoff < 4) throw DomainError("fock::build: cutoff must be >= 4");
  OperatorSet ops;
  ops.cutoff = cutoff;
  ops.params = p;
  const int dim = ops.dim();

  Triplets ta, tb;
  for (int nA = 0; nA <= cutoff; ++nA) {
    for (int nB = 0; nB <= cutoff; ++nB) {
      if (nA >= 1)
        ta.emplace_back(ops.index(nA - 1, nB), ops.index(nA, nB),
                        std::sqrt(double(nA)));
      if (nB >= 1)
        tb.emplace_back(ops.index(nA, nB - 1), ops.index(nA, nB),
                        std::sqrt(double(nB)));
    }
  }
  ops.a = from_triplets(ta, dim);
  ops.b = from_triplets(tb, dim);
  ops.a_dag = SpMat(ops.a.adjoint());
  ops.b_dag = SpMat(ops.b.adjoint());

  const SpMat ada = SpMat(ops.a_dag * ops.a);
  const SpMat bdb = SpMat(ops.b_dag * ops.b);
  const SpMat bbd = SpMat(ops.b * ops.b_dag);
  const SpMat adbd = SpMat(ops.a_dag * ops.b_dag);
  const SpMat ab = SpMat(ops.a * ops.b);

  const Complex i{0.0, 1.0};
  ops.j0 = SpMat(0.5 * (ada - bdb));
  ops.j1 = SpMat(0.5 * (adbd + ab));
  ops.j2 = SpMat(0.5 * i * (adbd - ab));
  ops.j3 = SpMat(0.5 * (ada + bbd));
  ops.h0 = SpMat(p.hbar * p.omega * (ada - bdb));
  ops.hi = SpMat(i * p.hbar * p.gamma * (adbd - ab));
  return ops;
}

double interior_max_abs(const SpMat& m, const OperatorSet& ops, int margin) {
  double mx = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SpMat::InnerIterator it(m, k); it; ++it) {
      if (ops.interior(int(it.row()), margin) &&
          ops.interior(int(it.col()), margin))
        mx = std::max(mx, std::abs(it.value()));
    }
  }
  return mx;
}

namespace {

double full_max_abs(const SpMat& m) {
  double mx = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      mx = std::max(mx, std::abs(it.value()));
  return mx;
}

}  // namespace

CcrReport ccr_residual(const OperatorSet& ops) {
  const SpMat one = identity(ops.dim());
  const SpMat ra = SpMat(SpMat(ops.a * ops.a_dag) - SpMat(ops.a_dag * ops.a) - one);
  const SpMat rb = SpMat(SpMat(ops.b * ops.b_dag) - SpMat(ops.b_dag * ops.b) - one);
  const SpMat rc = SpMat(SpMat(ops.a * ops.b) - SpMat(ops.b * ops.a));
  CcrReport rep;
  rep.interior = std::max(interior_max_abs(ra, ops), interior_max_abs(rb, ops));
  rep.boundary = std::max(full_max_abs(ra), full_max_abs(rb));
  rep.cross = full_max_abs(rc);
  return rep;
}

namespace {

SpMat commutator(const SpMat& x, const SpMat& y) {
  return SpMat(SpMat(x * y) - SpMat(y * x));
}

}  // namespace

Su11Residuals su11_residuals(const OperatorSet& ops) {
  const Complex i{0.0, 1.0};
  Su11Residuals r;
  r.r12 = interior_max_abs(SpMat(commutator(ops.j1, ops.j2) - SpMat(i * ops.j3)), ops);
  r.r32 = interior_max_abs(SpMat(commutator(ops.j3, ops.j2) - SpMat(i * ops.j1)), ops);
  r.r13 = interior_max_abs(SpMat(commutator(ops.j1, ops.j3) - SpMat(i * ops.j2)), ops);
  return r;
}

double casimir_residual(const OperatorSet& ops) {
  const SpMat lhs = SpMat(ops.j0 * ops.j0);
  const SpMat rhs = SpMat(SpMat(0.25 * identity(ops.dim())) +
                          SpMat(ops.j3 * ops.j3) - SpMat(ops.j1 * ops.j1) -
                          SpMat(ops.j2 * ops.j2));
  return interior_max_abs(SpMat(lhs - rhs), ops);
}

double hamiltonian_equivalence_residual(const OperatorSet& ops) {
  const SpMat r0 =
      SpMat(ops.h0 - SpMat((2.0 * ops.params.hbar * ops.params.omega) * ops.j0));
  const SpMat ri =
      SpMat(ops.hi - SpMat((2.0 * ops.params.hbar * ops.params.gamma) * ops.j2));
  return std::max(full_max_abs(r0), full_max_abs(ri));
}

double hermiticity_residual(const SpMat& m) {
  return full_max_abs(SpMat(m - SpMat(m.adjoint())));
}

std::vector<SpectrumRow> label_spectrum(int cutoff, const SystemParams& p) {
  std::vector<SpectrumRow> rows;
  rows.reserve((cutoff + 1) * (cutoff + 1));
  for (int nA = 0; nA <= cutoff; ++nA) {
    for (int nB = 0; nB <= cutoff; ++nB) {
      const auto lab = spectral::label_map_from_occupation(nA, nB, p);
      SpectrumRow row;
      row.nA = nA;
      row.nB = nB;
      row.j = lab.j;
      row.m = lab.m;
      row.l = lab.l;
      row.n = lab.n;
      row.e_plus = lab.e_plus;
      row.e_minus = lab.e_minus;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace bateman::fock
