// Command-line driver: one subcommand per experiment, all reading a JSON
// run configuration.
//
// Exit codes: 0 success, 2 a solve did not converge or the eigenvalue
// iteration failed (outputs are still written), 3 invalid configuration.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arcwave/config.hpp"
#include "arcwave/experiments.hpp"

namespace fs = std::filesystem;
using namespace arcwave;

namespace {

constexpr int kOk = 0;
constexpr int kNotConverged = 2;
constexpr int kBadConfig = 3;

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.output_dir);
  const fs::path p = cfg.output_dir / name;
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  std::cerr << "wrote " << p.string() << '\n';
  return out;
}

int cmd_solve(const RunConfig& cfg) {
  const SolveRun run = run_solve(cfg);
  {
    auto out = open_output(cfg, "density.csv");
    write_density_csv(out, run.grid, run.solution.density);
  }
  {
    auto out = open_output(cfg, "report.json");
    write_report_json(out, run);
  }
  if (cfg.field) {
    auto out = open_output(cfg, "field.csv");
    write_field_csv(out, run.field_points, run.field);
  }
  const SolveReport& r = run.solution.report;
  std::cerr << formulation_name(run.formulation) << ": " << r.iterations << " iterations, residual "
            << r.final_residual << (r.converged ? "" : " (not converged)") << '\n';
  return r.converged ? kOk : kNotConverged;
}

int cmd_convergence(const RunConfig& cfg) {
  const auto rows = convergence_table(cfg);
  auto out = open_output(cfg, "convergence.csv");
  write_convergence_csv(out, rows);
  for (const auto& r : rows)
    if (!r.converged) return kNotConverged;
  return kOk;
}

int cmd_iterations(const RunConfig& cfg) {
  const auto rows = iterations_table(cfg);
  auto out = open_output(cfg, "iterations.csv");
  write_iterations_csv(out, rows);
  for (const auto& r : rows)
    if (!r.converged) return kNotConverged;
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg) {
  SpectrumResult s;
  try {
    s = spectrum_study(cfg);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotConverged;
  }
  {
    auto out = open_output(cfg, "spectrum.csv");
    write_spectrum_csv(out, s);
  }
  auto out = open_output(cfg, "spectrum.json");
  write_spectrum_json(out, s, cfg);
  std::cerr << s.op << ": " << s.values.size() << " eigenvalues, |lambda| in [" << s.min_abs << ", " << s.max_abs
            << "]\n";
  return kOk;
}

int cmd_strip_limit(const RunConfig& cfg) {
  const StripLimitResult r = strip_limit(cfg);
  {
    auto out = open_output(cfg, "strip_limit.csv");
    write_strip_limit_csv(out, r);
  }
  auto out = open_output(cfg, "strip_limit.json");
  write_strip_limit_json(out, r);
  for (std::size_t k = 0; k < r.a.size(); ++k)
    std::cerr << "a = " << r.a[k] << ": relative gap " << r.gap_magnitude[k] << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elastic scattering by open arcs and closed curves"};
  app.require_subcommand(1);

  std::string config_path;
  std::function<int(const RunConfig&)> action;
  auto add = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->callback([&action, fn] { action = fn; });
  };
  add("solve", "single solve: density.csv, report.json, optional field.csv", cmd_solve);
  add("convergence-table", "near-field errors over an N sweep", cmd_convergence);
  add("iterations-table", "GMRES iterations and solve times over an omega sweep", cmd_iterations);
  add("spectrum", "eigenvalues of a discrete operator", cmd_spectrum);
  add("strip-limit", "far fields of thin ellipses against the flat strip", cmd_strip_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const RunConfig cfg = load_config(config_path);
    return action(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kBadConfig;
  } catch (const ConstraintError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
