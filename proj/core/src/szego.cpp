#include "ztau/szego.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

#include "ztau/error.hpp"
#include "ztau/poisson.hpp"

namespace ztau {
namespace {

bool tau_less(const MultiIndex& a, const MultiIndex& b) {
  return compare(a, b) == std::strong_ordering::less;
}

void validate_section(std::span<const MultiIndex> support, SectionMode mode) {
  std::set<MultiIndex, StructuralLess> seen;
  for (const auto& n : support) {
    if (!seen.insert(n).second)
      throw Error(ErrorCode::DuplicateIndices, "section index " + n.to_string() + " repeats");
    if (mode == SectionMode::ZplusSection) {
      if (n.is_zero() || classify(n) != IndexClass::InZplus)
        throw Error(ErrorCode::InvalidArgument,
                    "index " + n.to_string() + " is not in Z_+ \\ {0}");
    } else if (compare(n, MultiIndex{}) != std::strong_ordering::greater) {
      throw Error(ErrorCode::NotAnalytic, "index " + n.to_string() + " does not have tau > 0");
    }
  }
}

}  // namespace

Weight Weight::from_polynomial(const FourierSeries& f, std::size_t term_budget) {
  FourierSeries w = multiply(f, conjugate(f), term_budget);
  // The constant term is sum |a_n|^2; drop its rounding-level imaginary part.
  const Complex w0 = w.coefficient(MultiIndex{});
  w.add_term(MultiIndex{}, Complex(0.0, -w0.imag()));
  return Weight(std::move(w), Provenance::FromPolynomialSquare, f);
}

Weight Weight::direct(FourierSeries w, double symmetry_tol) {
  const double scale = std::max(1.0, w.max_abs_coefficient());
  if (double d = real_symmetry_defect(w); d > symmetry_tol * scale)
    throw Error(ErrorCode::NotRealSymmetric,
                "weight is not real: conjugate symmetry defect " + std::to_string(d));
  if (std::fabs(w.coefficient(MultiIndex{}).imag()) > symmetry_tol * scale)
    throw Error(ErrorCode::NotRealSymmetric, "weight has a complex constant term");
  return Weight(std::move(w), Provenance::Direct, std::nullopt);
}

double geometric_mean(const Weight& w, GeometricMeanMethod method, const GridOptions& grid,
                      double outer_tol) {
  if (method == GeometricMeanMethod::Grid) return std::exp(log_integral(w.series(), grid));
  if (w.provenance() != Weight::Provenance::FromPolynomialSquare || !w.factor())
    throw Error(ErrorCode::NotOuter, "outer shortcut needs a weight built from a polynomial");
  const FourierSeries& f = *w.factor();
  OuterCheck check = outer_check(f, grid, outer_tol);
  if (!check.is_outer)
    throw Error(ErrorCode::NotOuter, "factor fails the outer test: exp(int log|f|) = " +
                                         std::to_string(check.lhs) +
                                         ", |f(0)| = " + std::to_string(check.rhs));
  return std::norm(f.coefficient(MultiIndex{}));
}

SectionMode infer_section_mode(std::span<const MultiIndex> support) {
  return std::all_of(support.begin(), support.end(),
                     [](const MultiIndex& n) { return !n.is_zero() && in_zplus(n); })
             ? SectionMode::ZplusSection
             : SectionMode::TauSection;
}

SzegoResult szego_infimum(const Weight& w, std::span<const MultiIndex> support, SectionMode mode) {
  validate_section(support, mode);
  const FourierSeries& ws = w.series();
  SzegoResult result;
  const double w0 = ws.coefficient(MultiIndex{}).real();
  result.value = w0;
  const auto n = static_cast<Eigen::Index>(support.size());
  if (n == 0) return result;

  Eigen::MatrixXcd gram(n, n);
  Eigen::VectorXcd load(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    load(j) = ws.coefficient(support[j]);
    for (Eigen::Index k = 0; k < n; ++k) gram(j, k) = ws.coefficient(support[j] - support[k]);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double cutoff = 1e-12 * std::max(lambda.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::VectorXcd projected = eig.eigenvectors().adjoint() * load;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lambda(i) > cutoff) {
      projected(i) /= lambda(i);
    } else {
      projected(i) = 0.0;
      result.singular_gram = true;
    }
  }
  Eigen::VectorXcd coeffs = eig.eigenvectors() * projected;

  result.value = w0 - load.dot(coeffs).real();  // dot() conjugates the left operand
  for (Eigen::Index j = 0; j < n; ++j) result.minimizer.add_term(support[j], coeffs(j));
  return result;
}

std::vector<GapRow> szego_gap_table(const Weight& w, std::span<const std::vector<MultiIndex>> supports,
                                    SectionMode mode, const GridOptions& grid) {
  for (std::size_t i = 1; i < supports.size(); ++i) {
    std::set<MultiIndex, StructuralLess> next(supports[i].begin(), supports[i].end());
    for (const auto& n : supports[i - 1])
      if (!next.count(n))
        throw Error(ErrorCode::InvalidArgument,
                    "section " + std::to_string(i) + " does not contain index " + n.to_string());
  }
  const double gm = geometric_mean(w, GeometricMeanMethod::Grid, grid);
  std::vector<GapRow> rows;
  rows.reserve(supports.size());
  for (const auto& s : supports) {
    const double v = szego_infimum(w, s, mode).value;
    rows.push_back({s.size(), v, gm, v - gm});
  }
  return rows;
}

std::vector<std::vector<MultiIndex>> multiples_sections(const MultiIndex& step, std::size_t count) {
  std::vector<std::vector<MultiIndex>> out(1);
  MultiIndex current;
  for (std::size_t i = 0; i < count; ++i) {
    current = current + step;
    auto next = out.back();
    next.push_back(current);
    out.push_back(std::move(next));
  }
  return out;
}

OuterCheck outer_check(const FourierSeries& f, const GridOptions& grid, double tol) {
  for (const auto& [n, c] : f.terms())
    if (compare(n, MultiIndex{}) == std::strong_ordering::less)
      throw Error(ErrorCode::NotAnalytic, "outer test needs an analytic series; index " +
                                              n.to_string() + " has negative ordinal");
  Weight w = Weight::from_polynomial(f);
  OuterCheck r;
  r.lhs = std::exp(0.5 * log_integral(w.series(), grid));
  r.rhs = std::abs(f.coefficient(MultiIndex{}));
  r.is_outer = std::fabs(r.lhs - r.rhs) <= tol * std::max(1.0, r.rhs);
  return r;
}

TorusGrid::Spectrum log_coefficients(const Weight& w, const GridOptions& options) {
  TorusGrid grid = TorusGrid::for_series(w.series(), options);
  auto values = grid.sample(w.series());
  double lowest = std::numeric_limits<double>::infinity();
  for (auto& v : values) {
    lowest = std::min(lowest, v.real());
    v = v.real() > 0.0 ? std::log(v.real()) : 0.0;
  }
  if (!(lowest > options.weight_floor))
    throw Error(ErrorCode::WeightNearZero, "weight minimum " + std::to_string(lowest) +
                                               " on the grid is below the floor");
  return grid.spectrum(values);
}

SupportCheck support_condition_check(const Weight& w, const GridOptions& grid, double tol) {
  TorusGrid::Spectrum spectrum = log_coefficients(w, grid);
  SupportCheck r;
  r.tolerance = tol;
  r.grid_points = grid.points_per_dim;
  for (const auto& [n, c] : spectrum.resolved.terms())
    if (std::abs(c) > tol && !in_region(n, Region::ZplusUnionMinusZplus)) r.violations.push_back(n);
  for (const auto& [n, c] : spectrum.unresolved.terms())
    if (std::abs(c) > tol) r.unresolved.push_back(n);
  std::sort(r.violations.begin(), r.violations.end(), tau_less);
  std::sort(r.unresolved.begin(), r.unresolved.end(), tau_less);
  r.holds = r.violations.empty();
  return r;
}

OuterFactorResult outer_factor(const Weight& w, const OuterFactorOptions& options) {
  if (!(options.sigma0 >= 1.0))
    throw Error(ErrorCode::InvalidArgument, "outer factor needs sigma0 >= 1");
  TorusGrid::Spectrum spectrum = log_coefficients(w, options.grid);

  // Symmetrize so the log series is exactly real before the completion.
  FourierSeries log_w;
  for (const auto& [n, c] : spectrum.resolved.terms()) {
    const Complex partner = spectrum.resolved.coefficient(-n);
    log_w.add_term(n, 0.5 * (c + std::conj(partner)));
  }
  for (const auto& [n, c] : log_w.terms())
    if (std::abs(c) > options.support_tol && !in_region(n, Region::ZplusUnionMinusZplus))
      throw Error(ErrorCode::SupportConditionViolated,
                  "log-weight coefficient at " + n.to_string() + " lies outside Z_+ and -Z_+");
  log_w = log_w.pruned(options.coefficient_floor);

  FourierSeries completion = herglotz_completion(smooth(log_w, options.sigma0));
  const double constant = 0.5 * completion.coefficient(MultiIndex{}).real();
  FourierSeries exponent = completion;
  exponent.add_term(MultiIndex{}, -completion.coefficient(MultiIndex{}));
  exponent *= 0.5;

  OuterFactorResult r;
  r.factor = exp_series(exponent, options.order, options.term_budget, options.coefficient_floor);
  r.factor *= std::exp(constant);
  r.factor = r.factor.pruned(options.coefficient_floor);
  const double l1 = exponent.l1_coefficient_norm();
  r.truncation_bound =
      l1 == 0.0 ? 0.0
                : std::exp(static_cast<double>(options.order + 1) * std::log(l1) -
                           std::lgamma(static_cast<double>(options.order) + 2.0));
  return r;
}

}  // namespace ztau
