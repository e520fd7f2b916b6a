#include "ztau/poisson.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadrature.hpp"
#include "ztau/error.hpp"

namespace ztau {
namespace {

constexpr std::size_t kMaxPanels = 50'000'000;

void require_analytic(const FourierSeries& f, const char* what) {
  for (const auto& [n, c] : f.terms())
    if (compare(n, MultiIndex{}) == std::strong_ordering::less)
      throw Error(ErrorCode::NotAnalytic,
                  std::string(what) + " has index " + n.to_string() + " with negative ordinal");
}

void sort_by_tau(std::vector<MultiIndex>& indices) {
  std::sort(indices.begin(), indices.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return compare(a, b) == std::strong_ordering::less;
  });
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] == indices[i - 1])
      throw Error(ErrorCode::DuplicateIndices, "index " + indices[i].to_string() + " repeats");
}

void require_positive_sigma(double sigma) {
  if (!(sigma > 0.0) || std::isinf(sigma))
    throw Error(ErrorCode::InvalidArgument, "sigma must be positive and finite");
}

}  // namespace

double poisson_multiplier(const MultiIndex& n, double sigma) {
  if (n.is_zero() || sigma == 0.0) return 1.0;
  if (std::isinf(sigma)) return 0.0;
  TauEstimate t = tau_float(n, 128);
  mpfr_abs(t.value.get(), t.value.get(), MPFR_RNDN);
  mpfr_mul_d(t.value.get(), t.value.get(), -sigma, MPFR_RNDN);
  mpfr_exp(t.value.get(), t.value.get(), MPFR_RNDN);
  return t.value.to_double();
}

FourierSeries smooth(const FourierSeries& f, double sigma) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "smoothing needs sigma >= 0");
  if (std::isinf(sigma)) return FourierSeries::constant(f.coefficient(MultiIndex{}));
  FourierSeries out;
  for (const auto& [n, c] : f.terms()) out.add_term(n, c * poisson_multiplier(n, sigma));
  return out;
}

PoissonMatrix poisson_matrix(std::vector<MultiIndex> indices, double sigma) {
  require_positive_sigma(sigma);
  sort_by_tau(indices);
  PoissonMatrix m;
  m.sigma = sigma;
  m.indices = std::move(indices);
  const std::size_t n = m.dim();
  m.entries.assign(n * n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      double v = poisson_multiplier(m.indices[k] - m.indices[j], sigma);
      m.entries[j * n + k] = v;
      m.entries[k * n + j] = v;
    }
  }
  if (n > 0) {
    Eigen::Map<const Eigen::MatrixXd> a(m.entries.data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
    m.min_eigenvalue = eig.eigenvalues().minCoeff();
  }
  return m;
}

double numeric_determinant(const PoissonMatrix& m) {
  if (m.dim() == 0) return 1.0;
  Eigen::Map<const Eigen::MatrixXd> a(m.entries.data(), m.dim(), m.dim());
  return a.fullPivLu().determinant();
}

double poisson_matrix_det(std::vector<MultiIndex> indices, double sigma) {
  require_positive_sigma(sigma);
  sort_by_tau(indices);
  // rho_{0N} = prod rho_k, so rho_{0N} prod (1/rho_k - rho_k) = prod (1 - rho_k^2).
  double det = 1.0;
  for (std::size_t k = 0; k + 1 < indices.size(); ++k) {
    const double gap = tau(indices[k + 1] - indices[k]);
    det *= -std::expm1(-2.0 * sigma * gap);
  }
  return det;
}

// ---------------------------------------------------------------------------

CauchyDensity::CauchyDensity(double sigma, double t0) : sigma_(sigma), t0_(t0) {
  require_positive_sigma(sigma);
}

double CauchyDensity::operator()(double t) const {
  const double d = t - t0_;
  return sigma_ / (std::numbers::pi * (sigma_ * sigma_ + d * d));
}

double CauchyDensity::mass_outside(double half_width) const {
  return 2.0 / std::numbers::pi * std::atan(sigma_ / half_width);
}

double CauchyDensity::tail_bound(double half_width) const {
  return 2.0 * sigma_ / (std::numbers::pi * half_width);
}

MomentReport cauchy_moment(double u, double sigma, double t0, double half_width, double tol) {
  CauchyDensity density(sigma, t0);
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (!(half_width > 0.0) || !(density.tail_bound(half_width) < 0.5 * tol))
    throw Error(ErrorCode::ToleranceUnachievable,
                "truncation half-width leaves a tail bound of at least tol/2");
  const double freq = std::fabs(u);
  const double period = freq > 0.0 ? 2.0 * std::numbers::pi / freq : INFINITY;
  if (freq > 0.0 && half_width / period > static_cast<double>(kMaxPanels))
    throw Error(ErrorCode::ToleranceUnachievable, "quadrature panel budget exceeded");

  // The density is even about t0, so the sine part cancels exactly and the
  // moment is e^{-iu t0} (2 sigma/pi) * integral_0^T cos(u s)/(sigma^2+s^2) ds.
  const double scale = 2.0 * sigma / std::numbers::pi;
  auto integrand = [&](double s) { return std::cos(freq * s) / (sigma * sigma + s * s); };
  const double budget = 0.25 * tol / scale;

  detail::CompensatedSum<double> sum;
  double error = 0.0;
  std::size_t panels = 0;
  double a = 0.0;
  while (a < half_width) {
    const double h = std::min(period, 0.5 * std::max(sigma, a));
    const double b = std::min(a + h, half_width);
    if (!detail::adaptive_panel<double>(integrand, a, b, budget * (b - a) / half_width, 20, sum,
                                        error, panels) ||
        panels > kMaxPanels)
      throw Error(ErrorCode::ToleranceUnachievable, "quadrature did not converge");
    a = b;
  }

  MomentReport r;
  r.value = std::polar(scale * sum.value(), -u * t0);
  r.target = std::polar(std::exp(-sigma * freq), -u * t0);
  r.abs_error = std::abs(r.value - r.target);
  r.tail_bound = density.mass_outside(half_width);
  r.quadrature_error = scale * error;
  r.half_width = half_width;
  r.panels = panels;
  return r;
}

MomentReport cauchy_moment(double u, double sigma, double t0, double tol) {
  require_positive_sigma(sigma);
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  // tail_bound(T) = 2 sigma/(pi T) < tol/2  <=>  T > 4 sigma/(pi tol).
  const double half_width = 1.01 * 4.0 * sigma / (std::numbers::pi * tol);
  return cauchy_moment(u, sigma, t0, half_width, tol);
}

// ---------------------------------------------------------------------------

ErgodicResult ergodic_average(const FourierSeries& f, double horizon) {
  if (!(horizon > 0.0)) throw Error(ErrorCode::InvalidArgument, "ergodic horizon must be positive");
  Complex sum{};
  for (const auto& [n, c] : f.terms()) {
    const double x = horizon * tau(n);
    sum += c * (x == 0.0 ? 1.0 : std::sin(x) / x);
  }
  return {sum, true};
}

ErgodicResult ergodic_average_quadrature(const FourierSeries& f, double horizon, double tol) {
  if (!(horizon > 0.0)) throw Error(ErrorCode::InvalidArgument, "ergodic horizon must be positive");
  const auto coords = f.active_coordinates();
  double max_tau = 0.0;
  for (const auto& [n, c] : f.terms()) max_tau = std::max(max_tau, std::fabs(tau(n)));
  const double scale = std::max(1.0, f.l1_coefficient_norm());
  auto integrand = [&](double t) { return evaluate(f, DiskPoint::kronecker(0.0, t, coords)); };

  const double period = max_tau > 0.0 ? 2.0 * std::numbers::pi / max_tau : 2.0 * horizon;
  const auto count = static_cast<std::size_t>(std::ceil(2.0 * horizon / period));
  const double width = 2.0 * horizon / static_cast<double>(count);
  detail::CompensatedSum<Complex> sum;
  double error = 0.0;
  std::size_t panels = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double a = -horizon + width * static_cast<double>(i);
    const double b = i + 1 == count ? horizon : a + width;
    if (!detail::adaptive_panel<Complex>(integrand, a, b, tol * scale * width, 30, sum, error,
                                         panels))
      throw Error(ErrorCode::ToleranceUnachievable, "ergodic quadrature did not converge");
  }
  return {sum.value() / (2.0 * horizon), false};
}

// ---------------------------------------------------------------------------

double homomorphism_check(const FourierSeries& f, const FourierSeries& g, double sigma,
                          const std::map<MultiIndex::Coordinate, Complex>& phases) {
  require_analytic(f, "first factor");
  require_analytic(g, "second factor");
  DiskPoint at(0.0, phases);
  const Complex lhs = evaluate(smooth(multiply(f, g), sigma), at);
  const Complex rhs = evaluate(smooth(f, sigma), at) * evaluate(smooth(g, sigma), at);
  return std::abs(lhs - rhs);
}

FourierSeries exp_series(const FourierSeries& f, unsigned order, std::size_t term_budget,
                         double prune_below) {
  FourierSeries sum = FourierSeries::constant(1.0);
  FourierSeries power = sum;
  for (unsigned k = 1; k <= order; ++k) {
    power = multiply(power, f, term_budget);
    power *= 1.0 / static_cast<double>(k);
    if (prune_below > 0.0) power = power.pruned(prune_below);
    sum += power;
    if (sum.size() > term_budget)
      throw Error(ErrorCode::TermBudgetExceeded, "exponential series exceeds the term budget");
  }
  return sum;
}

ExpCommuteReport exp_commutes_check(const FourierSeries& f, double sigma, unsigned order,
                                    std::size_t term_budget) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be at least 1");
  require_analytic(f, "exponent");
  FourierSeries lhs = smooth(exp_series(f, order, term_budget), sigma);
  FourierSeries rhs = exp_series(smooth(f, sigma), order, term_budget);
  ExpCommuteReport r;
  r.residual = (lhs - rhs).l1_coefficient_norm();
  r.tail_bound = 2.0 * std::exp(static_cast<double>(order + 1) * std::log(f.l1_coefficient_norm()) -
                                std::lgamma(static_cast<double>(order) + 2.0));
  if (f.empty()) r.tail_bound = 0.0;
  return r;
}

}  // namespace ztau
