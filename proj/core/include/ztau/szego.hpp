#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ztau/series.hpp"
#include "ztau/torus_grid.hpp"

namespace ztau {

/// An absolutely continuous weight w on the torus, held as a real series
/// (w(-n) = conj(w(n))). Weights built from a polynomial f remember f.
class Weight {
 public:
  enum class Provenance { FromPolynomialSquare, Direct };

  /// w = f * conj(f) = |f|^2.
  static Weight from_polynomial(const FourierSeries& f, std::size_t term_budget = kDefaultTermBudget);
  /// Throws NotRealSymmetric when the series is not real within symmetry_tol.
  static Weight direct(FourierSeries w, double symmetry_tol = 1e-10);

  const FourierSeries& series() const { return series_; }
  Provenance provenance() const { return provenance_; }
  /// The polynomial f for FromPolynomialSquare weights.
  const std::optional<FourierSeries>& factor() const { return factor_; }

 private:
  Weight(FourierSeries series, Provenance p, std::optional<FourierSeries> factor)
      : series_(std::move(series)), provenance_(p), factor_(std::move(factor)) {}

  FourierSeries series_;
  Provenance provenance_;
  std::optional<FourierSeries> factor_;
};

inline Weight weight_from_polynomial(const FourierSeries& f) { return Weight::from_polynomial(f); }

enum class GeometricMeanMethod {
  Grid,           // exp of the grid estimate of the integral of log w
  OuterShortcut,  // |f(0)|^2, valid when w = |f|^2 with f outer
};

/// exp(integral log w). OuterShortcut throws NotOuter unless the weight came
/// from a polynomial that passes outer_check at outer_tol.
double geometric_mean(const Weight& w, GeometricMeanMethod method, const GridOptions& grid = {},
                      double outer_tol = 1e-8);

enum class SectionMode {
  ZplusSection,  // indices in Z_+ \ {0}
  TauSection,    // indices with tau(n) > 0
};

struct SzegoResult {
  double value = 0.0;
  /// The minimizing p = sum c_n gamma_n.
  FourierSeries minimizer;
  /// Set when the Gram matrix needed a pseudo-inverse.
  bool singular_gram = false;
};

/// Minimum over c of the integral of |1 - sum_{n in S} c_n gamma_n|^2 w,
/// via the Hermitian normal equations G c = b with G_{jk} = w(n_j - n_k)
/// and b_j = w(n_j); the minimum is w(0) - b^* G^+ b. Eigenvalues below
/// 1e-12 times the largest are dropped from the pseudo-inverse.
SzegoResult szego_infimum(const Weight& w, std::span<const MultiIndex> support, SectionMode mode);

/// Mode implied by a support: ZplusSection when every index is in Z_+.
SectionMode infer_section_mode(std::span<const MultiIndex> support);

struct GapRow {
  std::size_t section_size = 0;
  double infimum = 0.0;
  double geometric_mean = 0.0;
  double gap = 0.0;
};

/// Infima over nested supports (each a superset of the previous), against
/// the grid geometric mean. Throws InvalidArgument if nesting fails.
std::vector<GapRow> szego_gap_table(const Weight& w, std::span<const std::vector<MultiIndex>> supports,
                                    SectionMode mode, const GridOptions& grid = {});

/// Nested one-frequency sections {n}, {n, 2n}, ..., {n, ..., N n}, with the
/// empty section first.
std::vector<std::vector<MultiIndex>> multiples_sections(const MultiIndex& step, std::size_t count);

struct OuterCheck {
  bool is_outer = false;
  /// exp(integral log |f|).
  double lhs = 0.0;
  /// |f(0)|.
  double rhs = 0.0;
};

/// Outer test |exp(integral log|f|) - |f(0)|| <= tol * max(1, |f(0)|).
/// Throws NotAnalytic or WeightNearZero.
OuterCheck outer_check(const FourierSeries& f, const GridOptions& grid = {}, double tol = 1e-8);

/// Discrete Fourier coefficients of log w on the active-coordinate grid.
/// Throws WeightNearZero when w dips below grid.weight_floor.
TorusGrid::Spectrum log_coefficients(const Weight& w, const GridOptions& grid = {});

struct SupportCheck {
  bool holds = false;
  /// Resolved indices outside Z_+ and -Z_+ with |coefficient| > tolerance.
  std::vector<MultiIndex> violations;
  /// Indices at the grid's Nyquist frequency with |coefficient| > tolerance.
  std::vector<MultiIndex> unresolved;
  double tolerance = 0.0;
  std::size_t grid_points = 0;
};

/// Whether log w is supported on Z_+ together with -Z_+, up to tol and grid
/// aliasing. Violations are listed ascending in the tau order.
SupportCheck support_condition_check(const Weight& w, const GridOptions& grid = {},
                                     double tol = 1e-8);

struct OuterFactorOptions {
  double sigma0 = 2.0;
  unsigned order = 16;
  GridOptions grid{};
  /// Log-coefficients, exponential-series terms and final factor terms at or
  /// below this are dropped.
  double coefficient_floor = 1e-14;
  /// Tolerance handed to the support condition.
  double support_tol = 1e-8;
  std::size_t term_budget = kDefaultTermBudget;
};

struct OuterFactorResult {
  FourierSeries factor;
  /// ||B||_1^{K+1}/(K+1)! for the nonconstant exponent B.
  double truncation_bound = 0.0;
};

/// Outer factor of the sigma0-smoothed weight: exp(A/2), where A is the
/// analytic completion of the sigma0-smoothed log w. Throws
/// SupportConditionViolated when the support condition fails.
OuterFactorResult outer_factor(const Weight& w, const OuterFactorOptions& options = {});

}  // namespace ztau
