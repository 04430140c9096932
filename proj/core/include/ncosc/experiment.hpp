#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncosc/config.hpp"
#include "ncosc/ep.hpp"

namespace ncosc {

struct RunReport {
  nlohmann::ordered_json manifest;
  std::filesystem::path output_dir;
  bool checks_passed = true;
};

// Background + EP solution resolved from a configuration.
struct PreparedRun {
  BackgroundSpec background;
  EPSolution ep;
  std::string ep_method;
};

PreparedRun prepare_run(const ExperimentConfig& cfg);

// Executes a full experiment: one CSV per analysis item, the EP solution
// CSV, and a manifest. Returns with checks_passed = false when an embedded
// invariant check fails (CLI maps that to exit code 2).
RunReport run_experiment(const ExperimentConfig& cfg,
                         const std::filesystem::path& output_override = {});

// EP layer only: ep_solution.csv plus manifest.
RunReport run_ep_solve(const ExperimentConfig& cfg,
                       const std::filesystem::path& output_override = {});

std::vector<std::string> figure_ids();

// Emits the plot-ready two-column series of one of the canned figures
// (fig1a ... fig6b) into output_dir.
RunReport reproduce_figure(const std::string& id, const std::filesystem::path& output_dir);

// Runs independent configs with doc[param_path] replaced by each value
// (in parallel), aggregating one wide CSV keyed by (value, t).
RunReport run_sweep(const nlohmann::json& config_doc, const std::string& param_path,
                    const std::vector<std::string>& values,
                    const std::filesystem::path& output_dir, bool parallel = true);

// Self-contained invariant battery; prints one PASS/FAIL line per check.
// Returns the number of failed checks.
int run_check(std::ostream& out);

}  // namespace ncosc
