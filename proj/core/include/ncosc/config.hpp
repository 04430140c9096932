#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncosc/background.hpp"
#include "ncosc/coherent.hpp"
#include "ncosc/constants.hpp"

namespace ncosc {

inline constexpr int kConfigSchemaVersion = 1;

enum class EPMethod { Auto, ChielliniExponential, ChielliniRational, Pinney, Numeric };

std::string to_string(EPMethod method);

struct EPConfig {
  EPMethod method = EPMethod::Auto;
  std::optional<std::pair<double, double>> ics;  // (sigma0, dsigma0)
  double tolerance = 1e-10;
  // family parameters for the closed-form constructions
  double alpha = 0, beta = 0, gamma = 0, mu = 0, c1 = 1;
  int n = 1;
};

struct AnalysisItem {
  enum class Type { Eigenstate, Glauber, Squeezed, GaussianKlauder };
  Type type = Type::Eigenstate;
  int n = 0, m = 0;                              // eigenstate
  Complex alpha{0, 0};                           // glauber / squeezed
  double beta = 0;                               // squeezed, fixed beta
  std::optional<SqueezeTarget> optimize;         // squeezed, beta from minimization
  GaussianKlauderSpec gk;                        // gaussian klauder

  std::string name(std::size_t index) const;
};

struct TimeGrid {
  double start = 0, stop = 1;
  int points = 101;

  std::vector<double> times() const;
};

struct ExperimentConfig {
  int schema_version = kConfigSchemaVersion;
  PhysicalConstants constants;
  std::optional<BackgroundSpec> background;
  EPConfig ep;
  std::vector<AnalysisItem> analysis;
  TimeGrid t_grid;
  std::string output = "ncosc_out";
};

// Parses and validates a configuration document; ConfigError messages carry
// the JSON path of the offending field.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json load_config_json(const std::filesystem::path& path);

TimeFamily parse_family(const nlohmann::json& node, const std::string& path);
nlohmann::json family_to_json(const TimeFamily& family);

}  // namespace ncosc
