// Command-line front end for the M->1 GHZ entanglement-swapping protocol
// simulator. See README.md for the flag reference and file formats.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "qsdc/report.hpp"
#include "qsdc/runner.hpp"

namespace {

int run_report(const std::string& path) {
  try {
    const qsdc::ReportStats stats = qsdc::report_stats(path);
    std::cout << qsdc::report_document(stats);
    return qsdc::kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "report failed: " << e.what() << "\n";
    return qsdc::kExitConfigError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator for simultaneous M->1 quantum secure direct communication"};
  app.require_subcommand(0, 1);

  std::string report_path;
  CLI::App* report = app.add_subcommand("report", "recompute statistics from a transcript");
  report->add_option("path", report_path, "transcript file")->required();

  qsdc::SimulationConfig config;
  std::string mode = "qsdc";
  std::string noise_spec;
  std::string noise_targets;
  std::string eavesdrop_spec = "off";
  std::string message_spec = "cyclic";
  std::string verify_mode = "expectation";
  std::string sweep_points;

  app.add_option("--parties", config.parties, "sender count M (2..6)")
      ->capture_default_str();
  app.add_option("--groups", config.groups, "group count N")->capture_default_str();
  app.add_option("--seed", config.seed, "64-bit master seed")->capture_default_str();
  app.add_option("--mode", mode, "qsdc | qkd | verify | sweep")->capture_default_str();
  app.add_option("--noise", noise_spec, "Pauli channel probabilities px,py,pz");
  app.add_option("--noise-targets", noise_targets,
                 "comma-separated particle indices the noise touches (default: all)");
  app.add_option("--eavesdrop", eavesdrop_spec,
                 "off | qubit:<list> | party:<k> | all, with optional @fraction")
      ->capture_default_str();
  app.add_option("--test-fraction", config.test_fraction,
                 "fraction of groups sacrificed to verification")
      ->capture_default_str();
  app.add_option("--messages", message_spec, "fixed:<bits> | cyclic | random")
      ->capture_default_str();
  app.add_option("--verify-mode", verify_mode, "expectation | sampled")
      ->capture_default_str();
  app.add_option("--failure-threshold", config.failure_threshold,
                 "decode-failure fraction above which the run exits with code 4")
      ->capture_default_str();
  app.add_option("--sweep-points", sweep_points,
                 "comma-separated strengths in [0,1] for sweep mode");
  app.add_option("--out", config.out_path, "transcript path; summary goes to <out>.summary")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (report->parsed()) return run_report(report_path);

  try {
    config.mode = qsdc::parse_sim_mode(mode);
    if (!noise_spec.empty()) config.noise = qsdc::parse_noise_spec(noise_spec);
    if (!noise_targets.empty()) config.noise_targets = qsdc::parse_index_list(noise_targets);
    config.eavesdrop = qsdc::parse_eavesdrop_spec(eavesdrop_spec);
    config.messages = qsdc::parse_message_source(message_spec);
    config.verify_mode = qsdc::parse_verify_mode(verify_mode);
    if (!sweep_points.empty()) config.sweep_points = qsdc::parse_sweep_points(sweep_points);
    config.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return qsdc::kExitConfigError;
  }

  try {
    const qsdc::RunResult result = qsdc::run_simulation(config);
    std::cout << result.summary_document();
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "simulation failed: " << e.what() << "\n";
    return 1;
  }
}
