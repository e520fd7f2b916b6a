#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "ztau/error.hpp"

namespace ztau::cli {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  auto fail = [&] { parse_error(what + ": expected a positive integer, got '" + text + "'"); };
  if (text.empty() || !std::isdigit(static_cast<unsigned char>(text.front()))) fail();
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    fail();
  }
  if (used != text.size()) fail();
  return v;
}

template <class F>
void for_each_key(F&& f) {
  f("precision_bits");
  f("grid_points");
  f("max_dims");
  f("term_budget");
  f("tolerance");
  f("prime_bound");
}

void set_from_text(RunConfig& c, const std::string& key, const std::string& text, const std::string& source) {
  const std::string what = source + " " + key;
  if (key == "precision_bits") {
    c.precision_bits = static_cast<int>(parse_count(text, what));
  } else if (key == "grid_points") {
    c.grid_points = parse_count(text, what);
  } else if (key == "max_dims") {
    c.max_dims = parse_count(text, what);
  } else if (key == "term_budget") {
    c.term_budget = parse_count(text, what);
  } else if (key == "tolerance") {
    c.tolerance = parse_real(text, what);
  } else if (key == "prime_bound") {
    c.prime_bound = parse_count(text, what);
  }
}

}  // namespace

void RunConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); };
  if (precision_bits < 53) bad("precision_bits must be at least 53");
  if (grid_points < 2) bad("grid_points must be at least 2");
  if (max_dims == 0) bad("max_dims must be positive");
  if (term_budget == 0) bad("term_budget must be positive");
  if (!(tolerance > 0.0 && tolerance < 1.0)) bad("tolerance must lie in (0, 1)");
  if (prime_bound < 3) bad("prime_bound must be at least 3");
}

GridOptions RunConfig::grid() const {
  GridOptions g;
  g.points_per_dim = grid_points;
  g.max_dims = max_dims;
  return g;
}

nlohmann::json RunConfig::to_json() const {
  return {{"precision_bits", precision_bits}, {"grid_points", grid_points}, {"max_dims", max_dims},
          {"term_budget", term_budget},       {"tolerance", tolerance},     {"prime_bound", prime_bound}};
}

std::optional<std::string> system_environment(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

void apply_config_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) parse_error("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for_each_key([&](const char* k) { known = known || key == k; });
    if (!known) parse_error("unknown config key '" + key + "'");
    if (key == "tolerance") {
      if (!value.is_number()) parse_error("config tolerance must be a number");
      config.tolerance = value.get<double>();
    } else {
      if (!value.is_number_unsigned()) parse_error("config " + key + " must be a positive integer");
      set_from_text(config, key, std::to_string(value.get<std::uint64_t>()), "config");
    }
  }
}

void apply_environment(RunConfig& config, const EnvLookup& env) {
  for_each_key([&](const char* key) {
    std::string name = "ZTAU_";
    for (const char* p = key; *p; ++p) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    if (auto v = env(name)) set_from_text(config, key, *v, name);
  });
}

double parse_real(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || std::isnan(v))
    parse_error(what + ": expected a real number, got '" + text + "'");
  return v;
}

}  // namespace ztau::cli
