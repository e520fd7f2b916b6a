#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ztau::cli {

/// JSON text with every floating value at 17 significant digits, so equal
/// inputs give byte-identical reports. Non-finite values print as strings
/// ("inf", "-inf", "nan").
std::string dump_report(const nlohmann::json& j, int indent = 2);

/// "%.17g".
std::string format_real(double v);

/// One CSV line; fields containing commas or quotes are quoted.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace ztau::cli
