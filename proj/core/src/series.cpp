#include "ztau/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ztau/error.hpp"
#include "ztau/torus_grid.hpp"

namespace ztau {

FourierSeries FourierSeries::constant(Complex c) {
  FourierSeries f;
  f.add_term(MultiIndex{}, c);
  return f;
}

FourierSeries FourierSeries::character(const MultiIndex& n, Complex c) {
  FourierSeries f;
  f.add_term(n, c);
  return f;
}

void FourierSeries::add_term(const MultiIndex& n, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Complex FourierSeries::coefficient(const MultiIndex& n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Complex{} : it->second;
}

std::vector<MultiIndex> FourierSeries::support() const {
  std::vector<MultiIndex> out;
  out.reserve(terms_.size());
  for (const auto& [n, c] : terms_) out.push_back(n);
  return out;
}

std::vector<MultiIndex::Coordinate> FourierSeries::active_coordinates() const {
  std::set<MultiIndex::Coordinate> coords;
  for (const auto& [n, c] : terms_)
    for (const auto& [k, v] : n.entries()) coords.insert(k);
  return {coords.begin(), coords.end()};
}

double FourierSeries::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [n, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double FourierSeries::l1_coefficient_norm() const {
  double s = 0.0;
  for (const auto& [n, c] : terms_) s += std::abs(c);
  return s;
}

FourierSeries FourierSeries::pruned(double threshold) const {
  FourierSeries out;
  for (const auto& [n, c] : terms_)
    if (std::abs(c) > threshold) out.terms_.emplace_hint(out.terms_.end(), n, c);
  return out;
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& other) {
  for (const auto& [n, c] : other.terms_) add_term(n, c);
  return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& other) {
  for (const auto& [n, c] : other.terms_) add_term(n, -c);
  return *this;
}

FourierSeries& FourierSeries::operator*=(Complex scale) {
  if (scale == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    it = it->second == Complex{} ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

FourierSeries multiply(const FourierSeries& f, const FourierSeries& g, std::size_t term_budget) {
  FourierSeries out;
  for (const auto& [n, a] : f.terms()) {
    for (const auto& [m, b] : g.terms()) {
      out.add_term(n + m, a * b);
      if (out.size() > term_budget)
        throw Error(ErrorCode::TermBudgetExceeded,
                    "product exceeds the budget of " + std::to_string(term_budget) + " terms");
    }
  }
  return out;
}

FourierSeries translate(const FourierSeries& f,
                        const std::map<MultiIndex::Coordinate, Complex>& shift) {
  DiskPoint at(0.0, shift);
  FourierSeries out;
  for (const auto& [n, c] : f.terms()) out.add_term(n, c * std::conj(phase_product(n, at)));
  return out;
}

FourierSeries conjugate(const FourierSeries& f) {
  FourierSeries out;
  for (const auto& [n, c] : f.terms()) out.add_term(-n, std::conj(c));
  return out;
}

bool in_region(const MultiIndex& n, Region region) {
  switch (region) {
    case Region::TauNonneg: return compare(n, MultiIndex{}) != std::strong_ordering::less;
    case Region::TauPositive: return compare(n, MultiIndex{}) == std::strong_ordering::greater;
    case Region::Zplus: return in_zplus(n);
    case Region::ZplusUnionMinusZplus: return in_zplus(n) || in_zplus(-n);
  }
  return false;
}

FourierSeries project(const FourierSeries& f, Region region) {
  FourierSeries out;
  for (const auto& [n, c] : f.terms())
    if (in_region(n, region)) out.add_term(n, c);
  return out;
}

double real_symmetry_defect(const FourierSeries& f) {
  double defect = 0.0;
  for (const auto& [n, c] : f.terms())
    defect = std::max(defect, std::abs(f.coefficient(-n) - std::conj(c)));
  return defect;
}

FourierSeries herglotz_completion(const FourierSeries& u, double symmetry_tol) {
  if (double d = real_symmetry_defect(u); d > symmetry_tol)
    throw Error(ErrorCode::NotRealSymmetric,
                "series is not real: conjugate symmetry defect " + std::to_string(d));
  FourierSeries a;
  for (const auto& [n, c] : u.terms()) {
    if (n.is_zero()) {
      a.add_term(n, c.real());
    } else if (compare(n, MultiIndex{}) == std::strong_ordering::greater) {
      a.add_term(n, 2.0 * c);
    }
  }
  return a;
}

// ---------------------------------------------------------------------------

DiskPoint::DiskPoint(double sigma) : DiskPoint(sigma, {}) {}

DiskPoint::DiskPoint(double sigma, std::map<MultiIndex::Coordinate, Complex> phases)
    : sigma_(sigma), phases_(std::move(phases)) {
  if (!(sigma_ >= 0.0)) throw Error(ErrorCode::InvalidArgument, "disk point needs sigma >= 0");
  for (const auto& [k, lambda] : phases_) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "phase coordinates are 1-based");
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
      throw Error(ErrorCode::InvalidArgument,
                  "phase at coordinate " + std::to_string(k) + " is not unimodular");
  }
}

DiskPoint DiskPoint::kronecker(double sigma, double t,
                               const std::vector<MultiIndex::Coordinate>& coordinates) {
  constexpr mpfr_prec_t kBits = 128;
  std::map<MultiIndex::Coordinate, Complex> phases;
  BigFloat angle(kBits);
  BigFloat two_pi(kBits);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  for (auto k : coordinates) {
    mpfr_set_ui(angle.get(), static_cast<unsigned long>(primes::nth_prime(k)), MPFR_RNDN);
    mpfr_log(angle.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_d(angle.get(), angle.get(), -t, MPFR_RNDN);
    mpfr_remainder(angle.get(), angle.get(), two_pi.get(), MPFR_RNDN);
    phases.emplace(k, std::polar(1.0, angle.to_double()));
  }
  return DiskPoint(sigma, std::move(phases));
}

Complex DiskPoint::phase(MultiIndex::Coordinate k) const {
  auto it = phases_.find(k);
  return it == phases_.end() ? Complex(1.0) : it->second;
}

double decay_factor(const MultiIndex& n, double sigma, int precision_bits) {
  if (sigma == 0.0 || n.is_zero()) return 1.0;
  TauEstimate t = tau_float(n, precision_bits);
  BigFloat x = t.value;
  mpfr_mul_d(x.get(), x.get(), -sigma, MPFR_RNDN);
  mpfr_exp(x.get(), x.get(), MPFR_RNDN);
  return x.to_double();
}

Complex phase_product(const MultiIndex& n, const DiskPoint& pt) {
  double angle = 0.0;
  for (const auto& [k, v] : n.entries()) {
    auto it = pt.phases().find(k);
    if (it != pt.phases().end()) angle += static_cast<double>(v) * std::arg(it->second);
  }
  return std::polar(1.0, angle);
}

Complex evaluate(const FourierSeries& f, const DiskPoint& pt, int precision_bits) {
  if (std::isinf(pt.sigma())) return f.coefficient(MultiIndex{});
  Complex sum{};
  for (const auto& [n, c] : f.terms())
    sum += c * decay_factor(n, pt.sigma(), precision_bits) * phase_product(n, pt);
  return sum;
}

FourierSeries cesaro_mean(const FourierSeries& f, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::InvalidArgument, "Cesaro cutoff must be positive");
  FourierSeries out;
  for (const auto& [n, c] : f.terms()) {
    const double t = std::fabs(tau(n));
    if (t < x) out.add_term(n, c * (1.0 - t / x));
  }
  return out;
}

double lp_norm(const FourierSeries& f, Norm p, const GridOptions& options) {
  if (p == Norm::L2) {
    double s = 0.0;
    for (const auto& [n, c] : f.terms()) s += std::norm(c);
    return std::sqrt(s);
  }
  TorusGrid grid = TorusGrid::for_series(f, options);
  auto values = grid.sample(f);
  if (p == Norm::Linf) {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const auto& v : values) s += std::abs(v);
  return s / static_cast<double>(values.size());
}

double log_integral(const FourierSeries& w, const GridOptions& options) {
  const double scale = std::max(1.0, w.max_abs_coefficient());
  if (double d = real_symmetry_defect(w); d > 1e-10 * scale)
    throw Error(ErrorCode::NotRealSymmetric,
                "weight is not real: conjugate symmetry defect " + std::to_string(d));
  TorusGrid grid = TorusGrid::for_series(w, options);
  auto values = grid.sample(w);
  double s = 0.0;
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& v : values) {
    lowest = std::min(lowest, v.real());
    if (v.real() > 0.0) s += std::log(v.real());
  }
  if (!(lowest > options.weight_floor))
    throw Error(ErrorCode::WeightNearZero,
                "weight minimum " + std::to_string(lowest) + " on the grid is below the floor " +
                    std::to_string(options.weight_floor));
  return s / static_cast<double>(values.size());
}

}  // namespace ztau
