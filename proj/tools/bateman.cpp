// Command-line driver: resonance tables, verification suites, decay and
// reconstruction sweeps, resolvent scans, classical trajectories, residues.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bateman/classical.hpp"
#include "bateman/io.hpp"
#include "bateman/resonance.hpp"
#include "bateman/spectral.hpp"
#include "bateman/verify.hpp"

using namespace bateman;
using io::OutputFormat;
using io::Table;
using spectral::ResonanceIndex;

namespace {

struct CommonOpts {
  double hbar = 1.0;
  double gamma = 0.5;
  double kappa = 1.25;
  std::string config_path;
  std::string output_path;
  std::string format = "csv";
  unsigned long long seed = 12345;
};

SystemParams make_params(CommonOpts& opt, CLI::App& app) {
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw DomainError("config: cannot open " + opt.config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto kv = io::parse_config(ss.str());
    auto get = [&](const char* key, double& slot) {
      auto it = kv.find(key);
      if (it != kv.end()) slot = std::stod(it->second);
    };
    // flags override config values: only fill slots the user did not set
    if (app.count("--hbar") == 0) get("hbar", opt.hbar);
    if (app.count("--gamma") == 0) get("gamma", opt.gamma);
    if (app.count("--kappa") == 0) get("kappa", opt.kappa);
    if (app.count("--seed") == 0) {
      auto it = kv.find("seed");
      if (it != kv.end()) opt.seed = std::stoull(it->second);
    }
    if (app.count("--format") == 0) {
      auto it = kv.find("format");
      if (it != kv.end()) opt.format = it->second;
    }
  }
  return SystemParams::make(opt.hbar, opt.gamma, opt.kappa);
}

OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return OutputFormat::Csv;
  if (f == "json") return OutputFormat::Json;
  throw DomainError("format must be csv or json");
}

void emit(const Table& table, const CommonOpts& opt) {
  const OutputFormat fmt = parse_format(opt.format);
  if (opt.output_path.empty()) {
    table.write(std::cout, fmt);
    return;
  }
  std::ofstream out(opt.output_path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file " + opt.output_path);
  table.write(out, fmt);
}

GphFunction load_function(const std::string& spec, const GphFunction& fallback) {
  if (spec.empty()) return fallback;
  if (!spec.empty() && spec.front() == '[') return io::parse_function_spec(spec);
  std::ifstream in(spec);
  if (!in) throw DomainError("cannot open function-spec file " + spec);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse_function_spec(ss.str());
}

int run_resonances(const SystemParams& p, int lmax, int nmax,
                   const CommonOpts& opt) {
  Table table({"l", "n", "k", "lambda_re", "lambda_im", "Eminus_re",
               "Eminus_im", "Eplus_re", "Eplus_im"});
  for (int l = -lmax; l <= lmax; ++l) {
    for (int n = 0; n <= nmax; ++n) {
      const ResonanceIndex idx{l, n};
      const Complex lam = idx.lambda_pole();
      const Complex em = idx.energy_minus(p);
      const Complex ep = idx.energy_plus(p);
      table.add_row({double(l), double(n), double(idx.k()), lam.real(),
                     lam.imag(), em.real(), em.imag(), ep.real(), ep.imag()});
    }
  }
  emit(table, opt);
  return 0;
}

int run_verify(const SystemParams& p, const std::string& suite,
               const CommonOpts& opt) {
  std::vector<verify::SuiteReport> reports;
  if (suite == "all") {
    reports = verify::run_all_suites(p, opt.seed);
  } else if (suite == "funcalg") {
    reports = {verify::run_funcalg_suite(p, opt.seed)};
  } else if (suite == "classical") {
    reports = {verify::run_classical_suite(p, opt.seed)};
  } else if (suite == "spectral") {
    reports = {verify::run_spectral_suite(p, opt.seed)};
  } else if (suite == "resonance") {
    reports = {verify::run_resonance_suite(p, opt.seed)};
  } else if (suite == "fock") {
    reports = {verify::run_fock_suite(p)};
  } else {
    throw DomainError("unknown suite: " + suite);
  }

  nlohmann::json doc = nlohmann::json::array();
  bool all_pass = true;
  std::string first_failure;
  for (const auto& rep : reports) {
    nlohmann::json jrep;
    jrep["suite"] = rep.suite;
    jrep["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks) {
      nlohmann::json jc = {{"name", c.name},
                           {"residual", c.residual},
                           {"pass", c.pass},
                           {"note", c.note}};
      if (std::isfinite(c.tolerance)) jc["tolerance"] = c.tolerance;
      jrep["checks"].push_back(jc);
      if (!c.pass && first_failure.empty())
        first_failure = rep.suite + ": " + c.name;
      all_pass = all_pass && c.pass;
    }
    doc.push_back(jrep);
  }
  if (opt.output_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(opt.output_path, std::ios::binary);
    out << doc.dump(2) << "\n";
  }
  if (!all_pass) {
    std::cerr << "verification failed: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

int run_decay(const SystemParams& p, int l, int n, std::vector<double> ts,
              const std::string& phi_spec, const CommonOpts& opt) {
  const ResonanceIndex idx{l, n};
  const GphFunction fallback =
      GphFunction::atom(1.0, l, std::abs(l), 1.0);
  const GphFunction phi = load_function(phi_spec, fallback);
  if (ts.empty()) ts = {0.1, 1.0, 3.0};
  Table table({"l", "n", "k", "t", "measured_re", "measured_im", "measured_abs",
               "predicted_re", "predicted_im", "predicted_abs", "rel_error"});
  for (double t : ts) {
    const auto ev = resonance::coefficient_evolution(phi, idx, t, p);
    table.add_row({double(l), double(n), double(idx.k()), t, ev.measured.real(),
                   ev.measured.imag(), std::abs(ev.measured),
                   ev.predicted.real(), ev.predicted.imag(),
                   std::abs(ev.predicted),
                   std::abs(ev.measured / ev.predicted - 1.0)});
  }
  emit(table, opt);
  return 0;
}

int run_reconstruct(const SystemParams&, int nmax, const std::string& psi_spec,
                    const std::string& phi_spec, const CommonOpts& opt) {
  const GphFunction psi =
      load_function(psi_spec, GphFunction::atom(1.0, 0, 2, 0.0));
  const GphFunction phi =
      load_function(phi_spec, GphFunction::atom(1.0, 0, 0, 1.0));
  const auto rep = resonance::weak_identity_sum(psi, phi, nmax);
  const double abel_err = std::abs(rep.abel_limit - rep.target);
  Table table({"N", "raw_error", "abel_error"});
  for (std::size_t i = 0; i < rep.abs_error.size(); ++i)
    table.add_row({double(i), rep.abs_error[i], abel_err});
  emit(table, opt);
  return 0;
}

int run_resolvent_scan(const SystemParams& p, std::vector<double> zre,
                       std::vector<double> zim, const CommonOpts& opt) {
  if (zre.empty()) zre = {1.0};
  if (zim.empty()) zim = {0.1};
  if (zre.size() != zim.size())
    throw DomainError("resolvent-scan: --z-re and --z-im must pair up");
  const GphFunction poly = GphFunction::atom(1.0, 0, 2, 0.0);
  const GphFunction gauss = GphFunction::atom(1.0, 0, 0, 1.0);
  const GphFunction gauss2 = GphFunction::atom(1.0, 0, 0, 2.0);
  using resonance::ResolventMethod;
  Table table({"z_re", "z_im", "resonance_re", "resonance_im", "ode_poly_re",
               "ode_poly_im", "bc_diff", "spectral_re", "spectral_im",
               "spectral_bound", "ode_gauss_re", "ode_gauss_im", "ac_diff"});
  for (std::size_t i = 0; i < zre.size(); ++i) {
    const Complex z(zre[i], zim[i]);
    const auto vb = resonance::resolvent_element(
        poly, gauss, z, ResolventMethod::ResonanceSum, p);
    const auto vc = resonance::resolvent_element(poly, gauss, z,
                                                 ResolventMethod::OdeSolve, p);
    const auto va = resonance::resolvent_element(
        gauss2, gauss, z, ResolventMethod::SpectralIntegral, p);
    const auto vg = resonance::resolvent_element(gauss2, gauss, z,
                                                 ResolventMethod::OdeSolve, p);
    table.add_row({z.real(), z.imag(), vb.value.real(), vb.value.imag(),
                   vc.value.real(), vc.value.imag(),
                   std::abs(vb.value - vc.value), va.value.real(),
                   va.value.imag(), va.bound, vg.value.real(),
                   vg.value.imag(), std::abs(va.value - vg.value)});
  }
  emit(table, opt);
  return 0;
}

int run_trajectory(const SystemParams& p, const std::string& chart_name,
                   std::vector<double> q0, double t1, int steps,
                   const CommonOpts& opt) {
  classical::Chart chart;
  if (chart_name == "bateman") chart = classical::Chart::Bateman;
  else if (chart_name == "pontriagin") chart = classical::Chart::Pontriagin;
  else if (chart_name == "polar") chart = classical::Chart::Polar;
  else throw DomainError("unknown chart: " + chart_name);
  if (q0.size() != 4) throw DomainError("--q0 needs exactly 4 values");
  classical::PhasePoint s{chart, {q0[0], q0[1], q0[2], q0[3]}};
  Table table({"t", "q1", "q2", "q3", "q4", "H"});
  for (int i = 0; i <= steps; ++i) {
    const double t = t1 * double(i) / double(std::max(1, steps));
    const auto m = classical::flow_evolve(s, t, p);
    table.add_row({t, m.q[0], m.q[1], m.q[2], m.q[3],
                   classical::hamiltonian_value(m, p)});
  }
  emit(table, opt);
  return 0;
}

int run_residues(const SystemParams&, int lmax, int nmax,
                 const std::string& probe_spec, const CommonOpts& opt) {
  const GphFunction fallback =
      verify::random_gaussian_probes(opt.seed, 1, lmax, false)[0];
  const GphFunction probe = load_function(probe_spec, fallback);
  Table table({"l", "n", "k", "taylor_re", "taylor_im", "contour_re",
               "contour_im", "ratio_re", "ratio_im", "laurent2_abs"});
  for (int l = -lmax; l <= lmax; ++l) {
    for (int n = 0; n <= nmax; ++n) {
      const ResonanceIndex idx{l, n};
      const Complex taylor = spectral::residue_taylor(probe, idx);
      const auto ext = spectral::residue_contour(probe, idx);
      const Complex ratio =
          std::abs(taylor) > 0.0 ? ext.residue / taylor : Complex{};
      table.add_row({double(l), double(n), double(idx.k()), taylor.real(),
                     taylor.imag(), ext.residue.real(), ext.residue.imag(),
                     ratio.real(), ratio.imag(), std::abs(ext.laurent_minus2)});
    }
  }
  emit(table, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for the quantized damped oscillator "
               "(Bateman dual system)"};
  app.require_subcommand(1);

  CommonOpts opt;
  app.add_option("--hbar", opt.hbar, "action constant");
  app.add_option("--gamma", opt.gamma, "damping constant");
  app.add_option("--kappa", opt.kappa, "spring constant (must exceed gamma^2)");
  app.add_option("--config", opt.config_path, "flat key = value config file");
  app.add_option("--output", opt.output_path, "output file (default stdout)");
  app.add_option("--format", opt.format, "csv or json");
  app.add_option("--seed", opt.seed, "probe-generation seed");
  app.fallthrough();

  int lmax = 3, nmax = 3, steps = 100;
  int decay_l = 0, decay_n = 0;
  std::vector<double> ts, zre, zim, q0{1.0, 0.0, 0.0, 0.0};
  std::string suite = "all", phi_spec, psi_spec, probe_spec, chart = "bateman";
  double t1 = 5.0;
  int recon_nmax = 20;

  auto* c_res = app.add_subcommand("resonances", "resonance index table");
  c_res->add_option("--lmax", lmax);
  c_res->add_option("--nmax", nmax);

  auto* c_ver = app.add_subcommand("verify", "run module invariant suites");
  c_ver->add_option("--suite", suite,
                    "funcalg|classical|spectral|resonance|fock|all");

  auto* c_dec = app.add_subcommand("decay", "expansion-coefficient decay");
  c_dec->add_option("--l", decay_l);
  c_dec->add_option("--n", decay_n);
  c_dec->add_option("--t", ts, "time points (repeatable)");
  c_dec->add_option("--phi", phi_spec, "function-spec JSON (inline or file)");

  auto* c_rec = app.add_subcommand("reconstruct", "weak resolution of identity");
  c_rec->add_option("--nmax", recon_nmax);
  c_rec->add_option("--psi", psi_spec, "function-spec JSON (inline or file)");
  c_rec->add_option("--phi", phi_spec, "function-spec JSON (inline or file)");

  auto* c_rsc = app.add_subcommand("resolvent-scan",
                                   "three-route resolvent comparison");
  c_rsc->add_option("--z-re", zre, "real parts (repeatable)");
  c_rsc->add_option("--z-im", zim, "imaginary parts (repeatable)");

  auto* c_tra = app.add_subcommand("classical-trajectory", "closed-form flow");
  c_tra->add_option("--chart", chart, "bateman|pontriagin|polar");
  c_tra->add_option("--q0", q0, "initial point (4 values)")->expected(4);
  c_tra->add_option("--t1", t1, "final time");
  c_tra->add_option("--steps", steps);

  auto* c_rsd = app.add_subcommand("residues", "taylor vs contour residues");
  c_rsd->add_option("--lmax", lmax);
  c_rsd->add_option("--nmax", nmax);
  c_rsd->add_option("--probe", probe_spec, "function-spec JSON (inline or file)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const SystemParams p = make_params(opt, app);
    if (c_res->parsed()) return run_resonances(p, lmax, nmax, opt);
    if (c_ver->parsed()) return run_verify(p, suite, opt);
    if (c_dec->parsed()) return run_decay(p, decay_l, decay_n, ts, phi_spec, opt);
    if (c_rec->parsed())
      return run_reconstruct(p, recon_nmax, psi_spec, phi_spec, opt);
    if (c_rsc->parsed()) return run_resolvent_scan(p, zre, zim, opt);
    if (c_tra->parsed()) return run_trajectory(p, chart, q0, t1, steps, opt);
    if (c_rsd->parsed()) return run_residues(p, lmax, nmax, probe_spec, opt);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
