#ifndef BATEMAN_VERIFY_HPP
#define BATEMAN_VERIFY_HPP

#include <string>
#include <vector>

#include "bateman/funcalg.hpp"
#include "bateman/types.hpp"

namespace bateman::verify {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Deterministic probe generators (seeded). Gaussian-subfamily probes carry
// one atom per sector with a = |l| and dyadic beta/coefficients, so that the
// exact-zero operator identities hold bitwise at dyadic parameters.
std::vector<GphFunction> random_gaussian_probes(unsigned long long seed,
                                                int count, int lmax,
                                                bool dyadic = true);
GphFunction random_smooth_function(unsigned long long seed, int lmax,
                                   int extra_terms, bool dyadic = true);

SuiteReport run_funcalg_suite(const SystemParams& p, unsigned long long seed);
SuiteReport run_classical_suite(const SystemParams& p, unsigned long long seed);
SuiteReport run_spectral_suite(const SystemParams& p, unsigned long long seed);
SuiteReport run_resonance_suite(const SystemParams& p, unsigned long long seed);
SuiteReport run_fock_suite(const SystemParams& p, int cutoff = 12);

std::vector<SuiteReport> run_all_suites(const SystemParams& p,
                                        unsigned long long seed);

}  // namespace bateman::verify

#endif
