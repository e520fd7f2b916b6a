#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "report.hpp"
#include "ztau/ztau.hpp"

namespace ztau::cli {
namespace {

using Json = nlohmann::json;
namespace io = ztau::json;

struct Flags {
  std::string input;
  std::string output;
  std::string support;
  std::string config_path;
  std::optional<std::string> sigma;
  std::optional<std::string> t;
  std::optional<std::size_t> grid;
  std::optional<std::string> tol;
  bool table = false;

  std::optional<std::string> x;
  std::optional<std::string> horizon;
  std::optional<std::string> q;
  std::string mode = "auto";
  unsigned order = 16;
  bool inverse = false;
  bool polynomial = false;
  bool check_only = false;
  bool quadrature = false;
};

/// A command result: a JSON result for the report, or a CSV document.
struct Outcome {
  Json result;
  std::optional<std::string> csv;
};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

Json read_json_file(const std::string& path, const char* flag) {
  if (path.empty()) invalid(std::string(flag) + " is required");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

double required_real(const std::optional<std::string>& v, const char* flag) {
  if (!v) invalid(std::string(flag) + " is required");
  return parse_real(*v, flag);
}

double optional_real(const std::optional<std::string>& v, const char* flag, double fallback) {
  return v ? parse_real(*v, flag) : fallback;
}

Json complex_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

SectionMode section_mode(const std::string& mode, std::span<const MultiIndex> support) {
  if (mode == "zplus") return SectionMode::ZplusSection;
  if (mode == "tau") return SectionMode::TauSection;
  if (mode == "auto") return infer_section_mode(support);
  invalid("--mode must be zplus, tau or auto");
}

Json support_check_json(const SupportCheck& s) {
  Json violations = Json::array(), unresolved = Json::array();
  for (const auto& n : s.violations) violations.push_back(io::to_json(n));
  for (const auto& n : s.unresolved) unresolved.push_back(io::to_json(n));
  return {{"holds", s.holds},
          {"violations", violations},
          {"unresolved", unresolved},
          {"tolerance", s.tolerance},
          {"grid", s.grid_points}};
}

Outcome order_sort(const Flags& f) {
  auto series = io::series_from_json(read_json_file(f.input, "--input"));
  Json terms = Json::array();
  for (const auto& [n, c] : io::tau_sorted_terms(series))
    terms.push_back({{"index", io::to_json(n)},
                     {"ordinal", ordinal(n).to_string()},
                     {"tau", tau(n)},
                     {"re", c.real()},
                     {"im", c.imag()}});
  return {{{"terms", terms}}, std::nullopt};
}

Outcome bohr(const Flags& f, const RunConfig& c) {
  Json in = read_json_file(f.input, "--input");
  if (f.inverse) return {io::to_json(from_dirichlet(io::dirichlet_from_json(in), c.prime_bound)), std::nullopt};
  auto d = to_dirichlet(io::series_from_json(in));
  Json out = io::to_json(d);
  out["classical"] = is_classical(d);
  return {out, std::nullopt};
}

Outcome eval(const Flags& f, const RunConfig& c) {
  auto series = io::series_from_json(read_json_file(f.input, "--input"));
  const double sigma = optional_real(f.sigma, "--sigma", 0.0);
  DiskPoint pt = f.t ? DiskPoint::kronecker(sigma, parse_real(*f.t, "--t"), series.active_coordinates())
                     : DiskPoint(sigma);
  Json r = complex_json(evaluate(series, pt, c.precision_bits));
  r["sigma"] = sigma;
  if (f.t) r["t"] = parse_real(*f.t, "--t");
  return {r, std::nullopt};
}

Outcome smooth_cmd(const Flags& f) {
  auto series = io::series_from_json(read_json_file(f.input, "--input"));
  return {io::to_json(smooth(series, required_real(f.sigma, "--sigma"))), std::nullopt};
}

Outcome cesaro(const Flags& f) {
  auto series = io::series_from_json(read_json_file(f.input, "--input"));
  return {io::to_json(cesaro_mean(series, required_real(f.x, "--x"))), std::nullopt};
}

Weight read_weight(const Flags& f, const RunConfig& c) {
  auto series = io::series_from_json(read_json_file(f.input, "--input"));
  return f.polynomial ? Weight::from_polynomial(series, c.term_budget) : Weight::direct(series);
}

Outcome szego(const Flags& f, const RunConfig& c) {
  Weight w = read_weight(f, c);
  auto support = io::support_from_json(read_json_file(f.support, "--support"));
  const SectionMode mode = section_mode(f.mode, support);
  if (f.table) {
    std::vector<std::vector<MultiIndex>> sections;
    for (std::size_t k = 0; k <= support.size(); ++k)
      sections.emplace_back(support.begin(), support.begin() + static_cast<std::ptrdiff_t>(k));
    std::string csv = csv_line({"section_size", "infimum", "geometric_mean", "gap"});
    for (const auto& row : szego_gap_table(w, sections, mode, c.grid()))
      csv += csv_line({std::to_string(row.section_size), format_real(row.infimum),
                       format_real(row.geometric_mean), format_real(row.gap)});
    return {Json(), csv};
  }
  auto r = szego_infimum(w, support, mode);
  return {{{"value", r.value},
           {"singular_gram", r.singular_gram},
           {"mode", mode == SectionMode::ZplusSection ? "zplus" : "tau"},
           {"minimizer", io::to_json(r.minimizer)}},
          std::nullopt};
}

Outcome outer(const Flags& f, const RunConfig& c) {
  Weight w = read_weight(f, c);
  if (f.check_only) return {support_check_json(support_condition_check(w, c.grid(), c.tolerance)), std::nullopt};
  OuterFactorOptions opts;
  opts.sigma0 = optional_real(f.sigma, "--sigma", opts.sigma0);
  opts.order = f.order;
  opts.grid = c.grid();
  opts.support_tol = c.tolerance;
  opts.term_budget = c.term_budget;
  auto r = outer_factor(w, opts);
  auto check = outer_check(r.factor, c.grid(), c.tolerance);
  return {{{"factor", io::to_json(r.factor)},
           {"truncation_bound", r.truncation_bound},
           {"sigma0", opts.sigma0},
           {"order", opts.order},
           {"outer_check", {{"is_outer", check.is_outer}, {"lhs", check.lhs}, {"rhs", check.rhs}}}},
          std::nullopt};
}

Outcome ergodic(const Flags& f) {
  auto series = io::series_from_json(read_json_file(f.input, "--input"));
  const double horizon = required_real(f.horizon, "--horizon");
  auto r = ergodic_average(series, horizon);
  Json out = complex_json(r.value);
  out["closed_form"] = r.closed_form;
  out["horizon"] = horizon;
  if (f.quadrature) {
    auto q = ergodic_average_quadrature(series, horizon);
    out["quadrature"] = complex_json(q.value);
    out["difference"] = std::abs(q.value - r.value);
  }
  return {out, std::nullopt};
}

Outcome poisson_matrix_cmd(const Flags& f) {
  auto support = io::support_from_json(read_json_file(f.support, "--support"));
  const double sigma = required_real(f.sigma, "--sigma");
  auto m = poisson_matrix(support, sigma);
  if (f.table) {
    std::vector<std::string> header;
    for (const auto& n : m.indices) header.push_back(n.to_string());
    std::string csv = csv_line(header);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      std::vector<std::string> row;
      for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(format_real(m.at(j, k)));
      csv += csv_line(row);
    }
    return {Json(), csv};
  }
  Json indices = Json::array(), rows = Json::array();
  for (const auto& n : m.indices) indices.push_back(io::to_json(n));
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m.at(j, k));
    rows.push_back(row);
  }
  return {{{"indices", indices},
           {"sigma", sigma},
           {"matrix", rows},
           {"min_eigenvalue", m.min_eigenvalue},
           {"det_closed_form", poisson_matrix_det(m.indices, sigma)},
           {"det_numeric", numeric_determinant(m)}},
          std::nullopt};
}

Outcome cauchy_check(const Flags& f, const RunConfig& c) {
  if (!f.q) invalid("--q is required");
  const OrdinalRational q = OrdinalRational::parse(*f.q);
  const double u = tau(from_positive_rational(q, c.prime_bound));
  const double sigma = required_real(f.sigma, "--sigma");
  const double t0 = optional_real(f.t, "--t", 0.0);
  const double tol = optional_real(f.tol, "--tol", c.tolerance);
  auto r = cauchy_moment(u, sigma, t0, tol);
  return {{{"q", q.to_string()},
           {"u", u},
           {"sigma", sigma},
           {"t0", t0},
           {"tol", tol},
           {"value", complex_json(r.value)},
           {"target", complex_json(r.target)},
           {"abs_error", r.abs_error},
           {"tail_bound", r.tail_bound},
           {"quadrature_error", r.quadrature_error},
           {"half_width", r.half_width},
           {"panels", r.panels}},
          std::nullopt};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  file << text;
}

/// Error reports fall back to `out` when the output path is unusable.
void emit_error(const std::string& text, const std::string& path, std::ostream& out) {
  try {
    emit(text, path, out);
  } catch (const Error&) {
    emit(text, "", out);
  }
}

Json error_report(const std::string& command, const Json& config, std::string_view code,
                  const std::string& message) {
  return {{"command", command},
          {"config", config},
          {"result", nullptr},
          {"errors", Json::array({{{"code", code}, {"message", message}}})}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  Flags f;
  CLI::App app{"Harmonic analysis on the infinite torus: order, series, Poisson and Szego tools.", "ztau"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", f.input, "Input JSON (series, weight or Dirichlet series)");
  app.add_option("--output", f.output, "Write the report here instead of stdout");
  app.add_option("--support", f.support, "JSON list of multi-indices");
  app.add_option("--config", f.config_path, "JSON file overriding RunConfig defaults");
  app.add_option("--sigma", f.sigma, "Real part sigma >= 0; 'inf' is accepted");
  app.add_option("--t", f.t, "Imaginary part t (Kronecker-flow time or Cauchy center)");
  app.add_option("--grid", f.grid, "Grid points per dimension");
  app.add_option("--tol", f.tol, "Tolerance");
  app.add_flag("--table", f.table, "Emit CSV instead of a JSON report");

  app.add_subcommand("order-sort", "List terms in ascending tau order");
  auto* bohr_cmd = app.add_subcommand("bohr", "Bohr transform to a Dirichlet series");
  bohr_cmd->add_flag("--inverse", f.inverse, "Dirichlet series back to a Fourier series");
  app.add_subcommand("eval", "Evaluate at the disk point sigma . p^{-it}");
  app.add_subcommand("smooth", "Apply the Poisson multiplier e^{-sigma|tau|}");
  auto* cesaro_cmd = app.add_subcommand("cesaro", "Cesaro mean with cutoff x");
  cesaro_cmd->add_option("--x", f.x, "Cutoff x > 0");
  auto* szego_cmd = app.add_subcommand("szego", "Finite-section Szego infimum or gap table");
  szego_cmd->add_option("--mode", f.mode, "zplus, tau or auto");
  szego_cmd->add_flag("--polynomial", f.polynomial, "Input is f; the weight is |f|^2");
  auto* outer_cmd = app.add_subcommand("outer", "Outer factor of a weight");
  outer_cmd->add_flag("--polynomial", f.polynomial, "Input is f; the weight is |f|^2");
  outer_cmd->add_option("--order", f.order, "Exponential truncation order");
  outer_cmd->add_flag("--check-only", f.check_only, "Only run the support condition check");
  auto* ergodic_cmd = app.add_subcommand("ergodic", "Average along the Kronecker flow over [-N, N]");
  ergodic_cmd->add_option("--horizon", f.horizon, "N > 0");
  ergodic_cmd->add_flag("--quadrature", f.quadrature, "Add a quadrature cross-check");
  app.add_subcommand("poisson-matrix", "Poisson Gram matrix and determinant");
  auto* cauchy_cmd = app.add_subcommand("cauchy-check", "Cauchy-density moment against q^{-sigma}");
  cauchy_cmd->add_option("--q", f.q, "Positive rational q, e.g. 3/2");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  std::string command = "ztau";
  RunConfig config;
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    emit_error(dump_report(error_report(command, config.to_json(), to_string(ErrorCode::ParseError), e.what())),
               f.output, out);
    return 2;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    if (!f.config_path.empty()) apply_config_json(config, read_json_file(f.config_path, "--config"));
    apply_environment(config, env);
    if (f.grid) config.grid_points = *f.grid;
    if (f.tol) config.tolerance = parse_real(*f.tol, "--tol");
    config.validate();

    Outcome o;
    if (command == "order-sort") o = order_sort(f);
    else if (command == "bohr") o = bohr(f, config);
    else if (command == "eval") o = eval(f, config);
    else if (command == "smooth") o = smooth_cmd(f);
    else if (command == "cesaro") o = cesaro(f);
    else if (command == "szego") o = szego(f, config);
    else if (command == "outer") o = outer(f, config);
    else if (command == "ergodic") o = ergodic(f);
    else if (command == "poisson-matrix") o = poisson_matrix_cmd(f);
    else o = cauchy_check(f, config);

    if (o.csv) {
      emit(*o.csv, f.output, out);
    } else {
      Json report{{"command", command}, {"config", config.to_json()}, {"result", o.result}, {"errors", Json::array()}};
      emit(dump_report(report), f.output, out);
    }
    return 0;
  } catch (const Error& e) {
    emit_error(dump_report(error_report(command, config.to_json(), to_string(e.code()), e.what())), f.output,
               out);
    return 1;
  }
}

}  // namespace ztau::cli
