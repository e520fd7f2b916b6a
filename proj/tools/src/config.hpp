#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ztau/series.hpp"

namespace ztau::cli {

/// Run-wide settings. Sources apply in order: defaults, config file,
/// ZTAU_* environment variables, command-line flags.
struct RunConfig {
  int precision_bits = 128;
  std::size_t grid_points = kDefaultGridPoints;
  std::size_t max_dims = kDefaultMaxDims;
  std::size_t term_budget = kDefaultTermBudget;
  double tolerance = 1e-8;
  std::uint64_t prime_bound = primes::kDefaultPrimeBound;

  /// Throws InvalidArgument unless every field is positive, tolerance < 1
  /// and precision_bits >= 53.
  void validate() const;
  GridOptions grid() const;
  nlohmann::json to_json() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> system_environment(const std::string& name);

/// Keys as in RunConfig. Unknown keys or wrong types throw ParseError.
void apply_config_json(RunConfig& config, const nlohmann::json& j);

/// Reads ZTAU_PRECISION_BITS, ZTAU_GRID_POINTS, ... when set.
void apply_environment(RunConfig& config, const EnvLookup& env);

/// Real number from text; accepts "inf". Throws ParseError naming `what`.
double parse_real(const std::string& text, const std::string& what);

}  // namespace ztau::cli
