#pragma once

// entropic-lab command line: subcommand dispatch, CSV + run-record output,
// exit-code mapping.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "entropic/cli/config.hpp"
#include "entropic/cli/format.hpp"
#include "entropic/cli/invariants.hpp"
#include "entropic/cli/report.hpp"

namespace entropic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitInvariant = 4;

using ojson = nlohmann::ordered_json;

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw OutputError("cannot write " + path.string());
}

inline int check_all_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return kExitInvariant;
  return kExitOk;
}

// What a physics subcommand hands back for writing.
struct SubcommandOutput {
  std::string csv;
  ojson steps = ojson::array();
  ojson results = ojson::object();
  std::vector<CheckResult> checks;
};

namespace run_detail {

inline const json& required_section(const RunConfig& cfg, const char* name, const char* subcommand) {
  if (!cfg.has(name)) throw ConfigError(std::string(subcommand) + " needs a '" + name + "' section in the config");
  return cfg.section(name);
}

inline std::vector<std::string> amplitude_columns(std::vector<std::string> head, Index dim) {
  for (Index k = 0; k < dim; ++k) {
    head.push_back("re_" + std::to_string(k));
    head.push_back("im_" + std::to_string(k));
  }
  return head;
}

inline void amplitudes(Csv& csv, const StateVector& psi) {
  for (Index k = 0; k < psi.dim(); ++k) csv.field(psi.amplitudes()(k).real()).field(psi.amplitudes()(k).imag());
}

inline CheckResult check(int id, std::string name, double measured, double tol, bool upper, std::string detail = {}) {
  const bool ok = upper ? measured <= tol : measured >= tol;
  return {id, std::move(name), ok, measured, tol, upper ? "<=" : ">=", std::move(detail)};
}

inline ojson estimate_json(const fluctuations::Estimate& e) {
  return {{"mean", e.mean}, {"std_error", e.std_error}, {"n", e.n}};
}

}  // namespace run_detail

inline SubcommandOutput run_evolve_h(RunConfig& cfg) {
  using namespace run_detail;
  const json& e = required_section(cfg, "evolve_h", "evolve-h");
  const auto h = hamiltonian_from(cfg);
  const auto psi0 = initial_state_from(cfg, h.dim());
  const auto grid = uniform_grid(e["t_end"].get<double>(), e["steps"].get<int>());
  const double eps_prime = e.value("eps_prime", 0.0);
  std::string mode = e.value("mode", "exact");
  if (cfg.paper_mode && mode != "first_order") {
    mode = "first_order";
    cfg.notes.push_back("paper_mode: perturbed evolution uses the first-order exponent");
  }
  const auto traj = eps_prime == 0.0 ? evolve_h(psi0, h, grid, cfg.constants)
                                     : evolve_h_perturbed(psi0, h, grid, eps_prime, parse_perturbed_mode(mode), cfg.constants);

  SubcommandOutput out;
  Csv csv("evolve-h", amplitude_columns({"step", "t", "norm", "expect_H"}, h.dim()));
  double norm_dev = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    csv.field(k).field(traj.times[k]).field(traj.norms[k]).field(traj.energy_expectations[k]);
    amplitudes(csv, traj.states[k]);
    csv.end_row();
    out.steps.push_back({{"step", k}, {"t", traj.times[k]}, {"norm", traj.norms[k]}, {"expect_H", traj.energy_expectations[k]}});
    norm_dev = std::max(norm_dev, std::abs(traj.norms[k] / traj.norms[0] - 1.0));
  }
  out.csv = csv.str();
  out.results = {{"dim", h.dim()}, {"eps_prime", eps_prime}, {"mode", mode}, {"energy_drift", noether_energy_drift(traj)}};
  if (eps_prime == 0.0) {
    out.checks.push_back(check(1, "norm_conserved", norm_dev, 1e-12, true, "max |norm/norm0 - 1|"));
    const double scale = 1.0 + std::abs(traj.energy_expectations.front());
    out.checks.push_back(check(2, "energy_conserved", noether_energy_drift(traj) / scale, 1e-10, true,
                               "max |<H>(t) - <H>(0)| / (1 + |<H>(0)|)"));
  }
  return out;
}

inline SubcommandOutput run_evolve_s(RunConfig& cfg) {
  using namespace run_detail;
  const json& e = required_section(cfg, "evolve_s", "evolve-s");
  const auto h = hamiltonian_from(cfg);
  const auto psi0 = initial_state_from(cfg, h.dim());
  const double temperature = e.value("temperature", 1.0);
  const auto sop = entropy_operator(h, temperature);
  const double eps = epsilon_from(e, "evolve_s");
  EvolveSOptions opts;
  opts.flow = parse_sflow(e.value("flow", "semigroup"));
  if (cfg.paper_mode && opts.flow != SFlow::semigroup) {
    opts.flow = SFlow::semigroup;
    cfg.notes.push_back("paper_mode: flow forced to semigroup");
  }
  opts.allow_antidissipative = e.value("allow_antidissipative", false);
  opts.rtol = e.value("rtol", opts.rtol);
  const bool chart = e.value("schedule", "constant") == "chart";
  const auto schedule = chart ? chart_schedule(h, temperature) : GeneratorSchedule::constant(sop.S);
  const auto grid = uniform_grid(e["tau_end"].get<double>(), e["steps"].get<int>());
  const auto traj = evolve_s(psi0, schedule, grid, eps, cfg.constants, opts);

  SubcommandOutput out;
  Csv csv("evolve-s", amplitude_columns({"step", "tau", "norm", "expect_S"}, h.dim()));
  for (std::size_t k = 0; k < traj.size(); ++k) {
    csv.field(k).field(traj.taus[k]).field(traj.norms[k]).field(traj.entropy_expectations[k]);
    amplitudes(csv, traj.states[k]);
    csv.end_row();
    out.steps.push_back({{"step", k}, {"tau", traj.taus[k]}, {"norm", traj.norms[k]}, {"expect_S", traj.entropy_expectations[k]}});
  }
  out.csv = csv.str();
  out.results = {{"dim", h.dim()},
                 {"temperature", temperature},
                 {"epsilon", eps},
                 {"flow", opts.flow == SFlow::semigroup ? "semigroup" : "entropic_schrodinger"},
                 {"schedule", chart ? "chart" : "constant"}};

  if (eps == 0.0) {
    double dev = 0.0;
    for (double n : traj.norms) dev = std::max(dev, std::abs(n / traj.norms[0] - 1.0));
    out.checks.push_back(check(1, "unitary_norm", dev, 1e-12, true, "max |norm/norm0 - 1|"));
  } else if (spectral_decompose(schedule.at(0.0)).eigenvalues.minCoeff() >= 0.0) {
    // S >= 0 at every tau for both schedules when H >= 0
    double against = 0.0;
    for (std::size_t k = 1; k < traj.size(); ++k) {
      const double step = (traj.norms[k] - traj.norms[k - 1]) / traj.norms[k - 1];
      against = std::max(against, eps < 0.0 ? -step : step);
    }
    out.checks.push_back(check(1, eps < 0.0 ? "dilatation" : "contraction", against, 1e-14, true,
                               "largest relative norm step against the expected direction"));
  }
  return out;
}

inline SubcommandOutput run_compare_pictures(RunConfig& cfg) {
  using namespace run_detail;
  const json& e = required_section(cfg, "compare_pictures", "compare-pictures");
  const auto h = hamiltonian_from(cfg);
  const auto psi0 = initial_state_from(cfg, h.dim());
  const double T0 = e.value("T0", 1.0);
  const auto mode = parse_picture_mode(e.value("mode", "real_C"));
  const double eps = epsilon_from(e, "compare_pictures");
  const auto grid = uniform_grid(e["tau_end"].get<double>(), e["steps"].get<int>());
  const auto cmp = picture_consistency(psi0, h, T0, mode, grid, eps, cfg.constants);

  SubcommandOutput out;
  Csv csv("compare-pictures", {"step", "tau", "re_t", "im_t", "deviation", "ray_deviation"});
  for (std::size_t k = 0; k < cmp.taus.size(); ++k) {
    csv.field(k).field(cmp.taus[k]).field(cmp.times[k].real()).field(cmp.times[k].imag());
    csv.field(cmp.deviations[k]).field(cmp.ray_deviations[k]).end_row();
    out.steps.push_back({{"step", k}, {"tau", cmp.taus[k]}, {"deviation", cmp.deviations[k]}, {"ray_deviation", cmp.ray_deviations[k]}});
  }
  out.csv = csv.str();
  out.results = {{"mode", std::string(to_string(mode))},
                 {"T0", T0},
                 {"epsilon", eps},
                 {"max_deviation", cmp.max_deviation},
                 {"max_ray_deviation", cmp.max_ray_deviation}};
  out.checks.push_back(check(1, "picture_deviation", cmp.max_deviation, 1e-8, true, "max deviation over the tau grid"));
  return out;
}

inline SubcommandOutput run_gravity(RunConfig& cfg) {
  using namespace run_detail;
  const json& g = required_section(cfg, "gravity", "gravity");
  const auto src = gravity_source_from(cfg);

  SubcommandOutput out;
  Csv csv("gravity", {"x", "y", "z", "h"});
  for (const auto& p : g.value("probes", json::array())) {
    const auto v = config_detail::vec3(p);
    const double h = gravity::trace_potential(src, v);
    csv.field(v.x()).field(v.y()).field(v.z()).field(h).end_row();
    out.steps.push_back({{"x", v.x()}, {"y", v.y()}, {"z", v.z()}, {"h", h}});
  }
  out.csv = csv.str();
  out.results = {{"total_mass", src.total_mass()}, {"support_cells", src.support().size()}};
  if (g.contains("region")) {
    const double x = gravity::mean_h(src, region_from(g["region"]), cfg.seed, cfg.workers);
    const auto w = wick_factor(x);
    out.results["mean_h"] = x;
    out.results["wick"] = {{"x", w.x}, {"phi", w.phi}, {"epsilon", w.epsilon}};
  }
  if (g.contains("laplacian_probe")) {
    const auto p = config_detail::vec3(g["laplacian_probe"]);
    out.results["laplacian_residual"] = g.contains("laplacian_step")
                                            ? gravity::laplacian_spot_check(src, p, g["laplacian_step"].get<double>())
                                            : gravity::laplacian_spot_check(src, p);
  }
  return out;
}

inline SubcommandOutput run_onsager(RunConfig& cfg) {
  using namespace run_detail;
  const json& o = required_section(cfg, "onsager", "onsager");
  const auto sys = onsager_system_from(cfg);
  const auto traj = onsager::relax(sys, uniform_grid(o["t_end"].get<double>(), o["steps"].get<int>()));

  SubcommandOutput out;
  std::vector<std::string> cols{"step", "tprime", "entropy", "entropy_rate"};
  for (Index k = 0; k < sys.dim(); ++k) cols.push_back("y_" + std::to_string(k));
  Csv csv("onsager", cols);
  double min_rate = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < traj.size(); ++k) {
    csv.field(k).field(traj.tprimes[k]).field(traj.entropies[k]).field(traj.entropy_rates[k]);
    for (Index i = 0; i < sys.dim(); ++i) csv.field(traj.ys[k](i));
    csv.end_row();
    out.steps.push_back({{"step", k}, {"tprime", traj.tprimes[k]}, {"entropy", traj.entropies[k]}, {"entropy_rate", traj.entropy_rates[k]}});
    min_rate = std::min(min_rate, traj.entropy_rates[k]);
  }
  out.csv = csv.str();
  const auto rec = onsager::reciprocity_check(sys.L());
  const auto rate = onsager::entropy_rate(sys, sys.y0());
  const double scale = std::max(std::abs(rate.via_velocities), std::abs(rate.via_forces));
  const double form_diff = scale == 0.0 ? 0.0 : std::abs(rate.via_velocities - rate.via_forces) / scale;
  out.results = {{"dim", sys.dim()},
                 {"reciprocity", {{"symmetric", rec.symmetric}, {"asymmetry_norm", rec.asymmetry_norm}}},
                 {"lyapunov_rate", onsager::lyapunov_rate(sys)},
                 {"entropy_rate_y0", {{"via_velocities", rate.via_velocities}, {"via_forces", rate.via_forces}}}};
  out.checks.push_back(check(1, "entropy_forms_agree", form_diff, 1e-12, true, "relative difference at y0"));
  out.checks.push_back(check(2, "entropy_production_nonnegative", min_rate, 0.0, false, "min Sdot along the trajectory"));
  return out;
}

inline SubcommandOutput run_fluct(RunConfig& cfg) {
  using namespace run_detail;
  const json& f = required_section(cfg, "fluct", "fluct");
  const auto ref = thermo_reference_from(cfg);
  const auto n = f["n"].get<std::size_t>();
  const auto samples = fluctuations::gaussian_sample(ref, n, cfg.seed, cfg.constants, cfg.workers);
  const std::size_t dump = std::min(n, f.value("dump", n));

  SubcommandOutput out;
  Csv csv("fluct", {"dp", "dV", "dT", "dS"});
  for (std::size_t i = 0; i < dump; ++i) csv.field(samples[i].dp).field(samples[i].dV).field(samples[i].dT).field(samples[i].dS).end_row();
  out.csv = csv.str();
  out.results = {{"reference",
                  {{"p0", ref.p0()}, {"V0", ref.V0()}, {"T0", ref.T0()}, {"S0", ref.S0()}, {"cv", ref.cv()},
                   {"compressibility_term", ref.compressibility_term()}}},
                 {"n", n},
                 {"dumped", dump}};
  if (n >= fluctuations::kMinReportSamples) {
    const auto rep = fluctuations::covariance_report(samples, ref, cfg.constants);
    out.results["covariance"] = {{"ds_dt_over_kBT", estimate_json(rep.ds_dt_over_kBT)},
                                 {"dp_dV_over_kBT", estimate_json(rep.dp_dV_over_kBT)},
                                 {"dT_dV", estimate_json(rep.dT_dV)},
                                 {"ds_dtau_over_kB", estimate_json(rep.ds_dtau_over_kB)},
                                 {"quadratic_form", estimate_json(rep.quadratic_form)}};
    auto z = [](const fluctuations::Estimate& e) { return std::abs(e.mean - 1.0) / e.std_error; };
    out.checks.push_back(check(1, "ds_dt_over_kBT", z(rep.ds_dt_over_kBT), 3.0, true, "|mean - 1| in standard errors"));
    out.checks.push_back(check(2, "ds_dtau_over_kB", z(rep.ds_dtau_over_kB), 3.0, true, "|mean - 1| in standard errors"));
  } else {
    cfg.notes.push_back("fluct: fewer than " + std::to_string(fluctuations::kMinReportSamples) +
                        " samples, covariance report skipped");
  }
  return out;
}

inline SubcommandOutput run_stokes(RunConfig& cfg) {
  using namespace run_detail;
  const json& s = required_section(cfg, "stokes", "stokes");
  const auto patch = patch_from(cfg);
  const int base = s.value("base_resolution", 64);
  const int levels = s.value("levels", 3);
  const auto study = symplectic::stokes_convergence(patch, base, levels);

  SubcommandOutput out;
  Csv csv("stokes", {"resolution", "area", "boundary_action", "error", "order"});
  for (std::size_t k = 0; k < study.resolutions.size(); ++k) {
    const int res = study.resolutions[k];
    const double area = symplectic::symplectic_area(patch, res);
    const double action = symplectic::boundary_action(patch, res);
    csv.field(res).field(area).field(action).field(study.errors[k]);
    if (k == 0)
      csv.field("");
    else
      csv.field(study.orders[k - 1]);
    csv.end_row();
    out.steps.push_back({{"resolution", res}, {"area", area}, {"boundary_action", action}, {"error", study.errors[k]}});
  }
  out.csv = csv.str();
  out.results = {{"base_resolution", base}, {"levels", levels}, {"min_order", study.min_order()}};
  // Patches whose quadrature is exact (rectangles, planes) have no measurable order.
  if (study.errors.back() <= 1e-12)
    out.checks.push_back(check(1, "stokes_error", study.errors.back(), 1e-12, true, "quadrature exact to rounding"));
  else
    out.checks.push_back(check(1, "stokes_order", study.min_order(), 1.9, false, "min observed order"));
  return out;
}

struct CheckAllOptions {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::filesystem::path out_dir = "check-all-out";
  std::optional<std::filesystem::path> config;
};

inline int run_check_all(const CheckAllOptions& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = o.config ? load_config(*o.config) : config_from_json(json::object());
  SuiteOptions opt;
  opt.seed = o.seed.value_or(cfg.raw.contains("seed") ? cfg.seed : opt.seed);
  opt.workers = o.workers.value_or(cfg.workers);
  opt.constants = cfg.constants;

  const auto outcomes = run_suite(opt);
  std::vector<CheckResult> results;
  ojson artifacts = ojson::array();
  for (const auto& oc : outcomes) {
    results.push_back(oc.result);
    for (const auto& a : oc.artifacts) {
      write_text(o.out_dir / a.file, a.content);
      artifacts.push_back(a.file);
    }
  }
  Csv checks("checks", {"id", "check", "verdict", "measured", "relation", "tolerance"});
  for (const auto& r : results)
    checks.field(r.id).field(r.name).field(r.passed ? "pass" : "fail").field(r.measured).field(r.relation).field(r.tolerance).end_row();
  write_text(o.out_dir / "checks.csv", checks.str());
  artifacts.push_back("checks.csv");
  const Report rep = emit_report(results);
  write_text(o.out_dir / "report.json", rep.json.dump(2) + "\n");
  artifacts.push_back("report.json");

  // The echo reproduces this run: seed and workers as actually used.
  json echo = cfg.raw;
  echo["scenario"] = "check-all";
  echo["seed"] = opt.seed;
  echo["workers"] = opt.workers;
  ojson record = {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"subcommand", "check-all"},
                  {"config", echo},
                  {"notes", cfg.notes},
                  {"checks", rep.json["rows"]},
                  {"passed", rep.passed},
                  {"failed", rep.failed},
                  {"artifacts", artifacts},
                  {"wall_clock_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  write_text(o.out_dir / "run_record.json", record.dump(2) + "\n");
  out << rep.text;
  return check_all_exit_code(results);
}

inline SubcommandOutput run_physics(const std::string& subcommand, RunConfig& cfg) {
  if (subcommand == "evolve-h") return run_evolve_h(cfg);
  if (subcommand == "evolve-s") return run_evolve_s(cfg);
  if (subcommand == "compare-pictures") return run_compare_pictures(cfg);
  if (subcommand == "gravity") return run_gravity(cfg);
  if (subcommand == "onsager") return run_onsager(cfg);
  if (subcommand == "fluct") return run_fluct(cfg);
  if (subcommand == "stokes") return run_stokes(cfg);
  throw ConfigError("unknown subcommand " + subcommand);
}

inline int run_subcommand(const std::string& subcommand, const std::filesystem::path& config_path,
                          std::optional<std::filesystem::path> csv_path, std::optional<std::filesystem::path> record_path,
                          std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = load_config(config_path);
  if (cfg.raw.contains("scenario") && cfg.raw["scenario"] != subcommand)
    throw ConfigError("config scenario '" + cfg.raw["scenario"].get<std::string>() + "' does not match subcommand " + subcommand);
  const json& output = cfg.section("output");
  if (!csv_path) csv_path = output.contains("csv") ? cfg.base / output["csv"].get<std::string>() : std::filesystem::path(subcommand + ".csv");
  if (!record_path)
    record_path = output.contains("record") ? cfg.base / output["record"].get<std::string>()
                                            : std::filesystem::path(csv_path->string() + ".record.json");

  const SubcommandOutput res = run_physics(subcommand, cfg);
  write_text(*csv_path, res.csv);
  ojson checks = ojson::array();
  for (const auto& c : res.checks) checks.push_back(to_json(c));
  ojson record = {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"subcommand", subcommand},
                  {"config", cfg.raw},
                  {"notes", cfg.notes},
                  {"results", res.results},
                  {"steps", res.steps},
                  {"checks", checks},
                  {"artifacts", {csv_path->string()}},
                  {"wall_clock_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  write_text(*record_path, record.dump(2) + "\n");
  if (!res.checks.empty()) out << emit_report(res.checks).text;
  out << "wrote " << csv_path->string() << " and " << record_path->string() << "\n";
  return kExitOk;
}

inline const std::vector<std::pair<std::string, std::string>>& physics_subcommands() {
  static const std::vector<std::pair<std::string, std::string>> list{
      {"evolve-h", "evolve a state under H in clock time t"},
      {"evolve-s", "evolve a state under S = H/T in thermal time tau"},
      {"compare-pictures", "compare tau integration against the t picture"},
      {"gravity", "trace potential, region averages and Laplacian spot check of a source"},
      {"onsager", "relax a linear Onsager system"},
      {"fluct", "sample Gaussian thermodynamic fluctuations"},
      {"stokes", "symplectic area vs boundary action under refinement"}};
  return list;
}

// argv-style entry point; args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entropic-lab: entropy-picture dynamics, Onsager relaxation, fluctuations, symplectic and gravity checks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string csv_path;
  std::string record_path;
  for (const auto& [name, desc] : physics_subcommands()) {
    auto* sc = app.add_subcommand(name, desc);
    sc->add_option("--config", config_path, "run configuration (JSON)")->required();
    sc->add_option("--out", csv_path, "CSV output path");
    sc->add_option("--record", record_path, "run record path (default <out>.record.json)");
  }
  CheckAllOptions ca;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out_dir = ca.out_dir.string();
  std::string ca_config;
  auto* check_all = app.add_subcommand("check-all", "run the full invariant suite");
  auto* seed_opt = check_all->add_option("--seed", seed, "suite seed");
  auto* workers_opt = check_all->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));
  check_all->add_option("--out-dir", out_dir, "directory for artifacts");
  check_all->add_option("--config", ca_config, "optional run configuration (seed, workers, constants)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (check_all->parsed()) {
      if (*seed_opt) ca.seed = seed;
      if (*workers_opt) ca.workers = workers;
      ca.out_dir = out_dir;
      if (!ca_config.empty()) ca.config = ca_config;
      return run_check_all(ca, out);
    }
    const std::string name = app.get_subcommands().front()->get_name();
    return run_subcommand(name, config_path, csv_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(csv_path),
                          record_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(record_path), out);
  } catch (const NumericalError& e) {
    err << "entropic-lab: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConfigError& e) {
    err << "entropic-lab: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    err << "entropic-lab: invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const json::exception& e) {
    err << "entropic-lab: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const OutputError& e) {
    err << "entropic-lab: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace entropic::cli
