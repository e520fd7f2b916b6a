#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "ztau/multiindex.hpp"

namespace ztau {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultTermBudget = 1'000'000;
inline constexpr std::size_t kDefaultGridPoints = 256;
inline constexpr std::size_t kDefaultMaxDims = 6;
inline constexpr double kDefaultWeightFloor = 1e-12;

/// Sparse trigonometric series sum a_n gamma_n on the infinite torus, where
/// gamma_n(z) = prod z_k^{n_k}. Only nonzero coefficients are stored; nothing
/// is pruned unless pruned() is called explicitly.
class FourierSeries {
 public:
  using Terms = std::map<MultiIndex, Complex, StructuralLess>;

  FourierSeries() = default;
  static FourierSeries constant(Complex c);
  static FourierSeries character(const MultiIndex& n, Complex c = 1.0);

  /// Adds c to the coefficient at n; a coefficient that becomes exactly zero
  /// is erased.
  void add_term(const MultiIndex& n, Complex c);
  Complex coefficient(const MultiIndex& n) const;

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::vector<MultiIndex> support() const;
  /// Sorted coordinates touched by any stored index.
  std::vector<MultiIndex::Coordinate> active_coordinates() const;

  double max_abs_coefficient() const;
  /// sum |a_n|.
  double l1_coefficient_norm() const;
  /// Drops coefficients with |a_n| <= threshold.
  FourierSeries pruned(double threshold) const;

  FourierSeries& operator+=(const FourierSeries& other);
  FourierSeries& operator-=(const FourierSeries& other);
  FourierSeries& operator*=(Complex scale);
  friend FourierSeries operator+(FourierSeries a, const FourierSeries& b) { return a += b; }
  friend FourierSeries operator-(FourierSeries a, const FourierSeries& b) { return a -= b; }
  friend FourierSeries operator*(Complex s, FourierSeries f) { return f *= s; }
  friend bool operator==(const FourierSeries&, const FourierSeries&) = default;

 private:
  Terms terms_;
};

/// Convolution of coefficients (pointwise product of functions). Throws
/// TermBudgetExceeded when the product would hold more than term_budget terms.
FourierSeries multiply(const FourierSeries& f, const FourierSeries& g,
                       std::size_t term_budget = kDefaultTermBudget);

/// x -> f(x shift^{-1}): coefficient a_n becomes a_n conj(gamma_n(shift)).
FourierSeries translate(const FourierSeries& f,
                        const std::map<MultiIndex::Coordinate, Complex>& shift);

/// Complex conjugate function: coefficients conjugated, indices negated.
FourierSeries conjugate(const FourierSeries& f);

enum class Region {
  TauNonneg,             // q >= 1
  TauPositive,           // q > 1
  Zplus,                 // every coordinate >= 0
  ZplusUnionMinusZplus,  // Z_+ together with -Z_+
};

bool in_region(const MultiIndex& n, Region region);
FourierSeries project(const FourierSeries& f, Region region);

/// Largest |a_{-n} - conj(a_n)| over the support; 0 for a real function.
double real_symmetry_defect(const FourierSeries& f);

/// Analytic completion A = u(0) + 2 sum_{tau(n)>0} u(n) gamma_n of a real
/// series u, so that (A + conj(A))/2 reproduces u coefficientwise. Throws
/// NotRealSymmetric when u(-n) != conj(u(n)) beyond symmetry_tol or u(0)
/// is not real.
FourierSeries herglotz_completion(const FourierSeries& u, double symmetry_tol = 1e-10);

/// A point sigma . lambda of the closed disk: r = p^{-sigma} scaled by
/// unit-modulus phases lambda_k (unlisted phases are 1). sigma may be +inf.
class DiskPoint {
 public:
  explicit DiskPoint(double sigma = 0.0);
  DiskPoint(double sigma, std::map<MultiIndex::Coordinate, Complex> phases);

  /// The Kronecker-flow point p^{-sigma-it}: lambda_k = exp(-i t log p_k) on
  /// the listed coordinates, with 128-bit logarithms reduced mod 2 pi.
  static DiskPoint kronecker(double sigma, double t,
                             const std::vector<MultiIndex::Coordinate>& coordinates);

  double sigma() const { return sigma_; }
  Complex phase(MultiIndex::Coordinate k) const;
  const std::map<MultiIndex::Coordinate, Complex>& phases() const { return phases_; }

 private:
  double sigma_;
  std::map<MultiIndex::Coordinate, Complex> phases_;
};

/// Multiplier e^{-sigma tau} evaluated at 128 bits before rounding.
double decay_factor(const MultiIndex& n, double sigma, int precision_bits = 128);
/// prod lambda_k^{n_k} for unit-modulus phases.
Complex phase_product(const MultiIndex& n, const DiskPoint& pt);

/// sum a_n e^{-sigma tau(n)} prod lambda_k^{n_k}; sigma = +inf gives a_0.
Complex evaluate(const FourierSeries& f, const DiskPoint& pt, int precision_bits = 128);

/// Cesaro mean: terms with |tau(n)| >= x dropped, the rest scaled by
/// (1 - |tau(n)|/x). Two-sided series use |tau|.
FourierSeries cesaro_mean(const FourierSeries& f, double x);

struct GridOptions {
  std::size_t points_per_dim = kDefaultGridPoints;
  std::size_t max_dims = kDefaultMaxDims;
  /// Smallest admissible weight value on the grid before logs are refused.
  double weight_floor = kDefaultWeightFloor;
};

enum class Norm { L1, L2, Linf };

/// L2 is exact by Parseval; L1 and Linf are tensor-grid estimates over the
/// torus spanned by the active coordinates. Throws DimensionTooLarge.
double lp_norm(const FourierSeries& f, Norm p, const GridOptions& grid = {});

/// Trapezoid estimate of the integral of log w over the active-coordinate
/// torus for a real nonnegative weight series w. Throws WeightNearZero when
/// the grid minimum falls below grid.weight_floor.
double log_integral(const FourierSeries& w, const GridOptions& grid = {});

}  // namespace ztau
