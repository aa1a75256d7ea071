// clone_sim: run, trace, sweep and validate the three-SQUID cloning sequence.
//
// Exit status: 0 success, 1 tolerance gate or validation failure,
// 2 configuration error, 3 physics precondition (leakage) failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uqcm/config.hpp"
#include "uqcm/io.hpp"
#include "uqcm/protocol.hpp"
#include "uqcm/validate.hpp"
#include "uqcm/verify.hpp"

namespace {

using namespace uqcm;

constexpr int kExitGate = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPhysics = 3;

struct Flags {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string trace_path;
  std::string schedule_path;
  std::string summary_path;
  int samples = 100;
  bool verbose = false;
};

/// Flags are collected as raw strings and applied after the config file so
/// they override it and share its parser.
void add_setting(CLI::App* app, Flags& flags, const std::string& name, const std::string& key,
                 const std::string& help) {
  app->add_option_function<std::string>(
      name, [&flags, key](const std::string& v) { flags.overrides.emplace_back(key, v); }, help);
}

void add_common(CLI::App* app, Flags& flags) {
  app->add_option("--config", flags.config_path, "key = value config file (default: $CLONE_SIM_CONFIG)");
  add_setting(app, flags, "--theta", "theta", "input polar angle on the |+>/|-> Bloch sphere");
  add_setting(app, flags, "--phi", "phi", "input azimuth");
  add_setting(app, flags, "--alpha", "alpha", "amplitude of |+> as re[,im]");
  add_setting(app, flags, "--beta", "beta", "amplitude of |-> as re[,im]");
  add_setting(app, flags, "--seed", "seed", "sampling and jitter seed");
  add_setting(app, flags, "--jobs", "jobs", "worker threads for sweeps");
  add_setting(app, flags, "--timing-jitter", "timing_jitter", "fractional slot-duration error");
  add_setting(app, flags, "--fock-cutoff", "fock_cutoff", "maximum photon number kept");
  add_setting(app, flags, "--tolerance", "tolerance", "acceptance tolerance");
}

RunConfig resolve(const Flags& flags) {
  std::string path = flags.config_path;
  if (path.empty())
    if (const char* env = std::getenv("CLONE_SIM_CONFIG"); env && *env) path = env;
  RunConfig cfg = path.empty() ? RunConfig{} : load_config_file(path);
  for (const auto& [key, value] : flags.overrides) apply_setting(cfg, key, value);
  cfg.finalize();
  return cfg;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

int cmd_run(const Flags& flags) {
  const RunConfig cfg = resolve(flags);
  RunOptions opts;
  opts.fock_cutoff = cfg.fock_cutoff;
  opts.timing_jitter = cfg.timing_jitter;
  opts.jitter_seed = cfg.seed;
  const RunResult run = run_uqcm(cfg.input, cfg.couplings, opts);
  const CloneReport report = clone_fidelities(run.final_state, cfg.input);
  const double tol = cfg.tolerance;
  const bool pass = std::abs(report.fidelity_squid2 - 5.0 / 6.0) < tol &&
                    std::abs(report.fidelity_squid3 - 5.0 / 6.0) < tol && report.target_overlap >= 1 - tol &&
                    !report.leakage_flagged;
  Json out = report_to_json(report);
  out["input"] = input_to_json(cfg.input);
  out["total_duration"] = round_sig12(total_duration(run.schedule));
  out["pass"] = pass;
  std::cout << out.dump(2) << '\n';
  if (!flags.trace_path.empty()) write_json(flags.trace_path, trace_to_json(run.trace));
  return pass ? 0 : kExitGate;
}

int cmd_trace(const Flags& flags) {
  const RunConfig cfg = resolve(flags);
  RunOptions opts;
  opts.fock_cutoff = cfg.fock_cutoff;
  opts.timing_jitter = cfg.timing_jitter;
  opts.jitter_seed = cfg.seed;
  const RunResult run = run_uqcm(cfg.input, cfg.couplings, opts);
  const Json trace = trace_to_json(run.trace);
  if (flags.trace_path.empty())
    std::cout << trace.dump(2) << '\n';
  else
    write_json(flags.trace_path, trace);
  if (!flags.schedule_path.empty()) write_json(flags.schedule_path, schedule_to_json(run.schedule));
  return 0;
}

int cmd_sweep(const Flags& flags) {
  const RunConfig cfg = resolve(flags);
  if (flags.samples < 1) throw ConfigError("sweep: -n must be >= 1");
  SweepOptions opts;
  opts.jobs = cfg.jobs;
  opts.fock_cutoff = cfg.fock_cutoff;
  opts.timing_jitter = cfg.timing_jitter;
  const SweepReport report = universality_sweep(flags.samples, cfg.seed, cfg.couplings, opts);
  std::cout << sweep_csv(report);
  if (!flags.summary_path.empty()) write_json(flags.summary_path, sweep_summary_json(report));
  return 0;
}

int cmd_validate(const Flags& flags) {
  const RunConfig cfg = resolve(flags);
  const std::vector<CheckResult> checks = run_validation(cfg.couplings, cfg.fock_cutoff, cfg.seed);
  bool ok = true;
  for (const CheckResult& c : checks) {
    if (flags.verbose || (!c.passed() && ok))
      std::cout << (c.passed() ? "PASS " : "FAIL ") << c.module << ' ' << c.op
                << " deviation=" << format_sig12(c.deviation) << " tolerance=" << format_sig12(c.tolerance) << '\n';
    ok = ok && c.passed();
  }
  if (ok && !flags.verbose) std::cout << "all " << checks.size() << " checks passed\n";
  return ok ? 0 : kExitGate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-SQUID universal cloning simulator"};
  app.require_subcommand(1);
  Flags flags;

  auto* run = app.add_subcommand("run", "run one clone and print the JSON report");
  add_common(run, flags);
  run->add_option("--trace", flags.trace_path, "also write the step trace to this file");

  auto* trace = app.add_subcommand("trace", "print the step trace as JSON");
  add_common(trace, flags);
  trace->add_option("--trace", flags.trace_path, "write the trace here instead of standard output");
  trace->add_option("--schedule", flags.schedule_path, "write the executed schedule to this file");

  auto* sweep = app.add_subcommand("sweep", "seeded Bloch-sphere sweep, CSV on standard output");
  add_common(sweep, flags);
  sweep->add_option("-n,--samples", flags.samples, "number of inputs");
  sweep->add_option("--summary", flags.summary_path, "write the summary JSON to this file");

  auto* validate = app.add_subcommand("validate", "closed forms vs exact evolution and protocol tables");
  add_common(validate, flags);
  validate->add_flag("--verbose", flags.verbose, "list every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(flags);
    if (*trace) return cmd_trace(flags);
    if (*sweep) return cmd_sweep(flags);
    return cmd_validate(flags);
  } catch (const LeakageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitPhysics;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitPhysics;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitConfig;
  }
}
