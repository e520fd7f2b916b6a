#pragma once

#include <map>
#include <vector>

#include "ztau/series.hpp"

namespace ztau {

/// Fourier multiplier of the Poisson measure at r = p^{-sigma}:
/// r^{|n|} = e^{-sigma |tau(n)|}, evaluated at 128 bits.
double poisson_multiplier(const MultiIndex& n, double sigma);

/// f * P_r: every coefficient scaled by poisson_multiplier. sigma = 0 is the
/// identity and sigma = +inf collapses f to its constant term.
FourierSeries smooth(const FourierSeries& f, double sigma);

/// Gram matrix [e^{-sigma |tau(n_j - n_k)|}] of the Poisson measure on a set of
/// distinct indices, with the indices sorted ascending in the tau order.
struct PoissonMatrix {
  std::vector<MultiIndex> indices;
  double sigma = 0.0;
  /// Row-major, indices.size() squared.
  std::vector<double> entries;
  /// Smallest eigenvalue from a symmetric eigensolve.
  double min_eigenvalue = 0.0;

  std::size_t dim() const { return indices.size(); }
  double at(std::size_t j, std::size_t k) const { return entries[j * dim() + k]; }
};

/// Throws DuplicateIndices or InvalidArgument (sigma <= 0).
PoissonMatrix poisson_matrix(std::vector<MultiIndex> indices, double sigma);

/// Determinant of the matrix by LU factorization.
double numeric_determinant(const PoissonMatrix& m);

/// Closed-form determinant rho_{0N} prod_{k<N} (1/rho_k - rho_k), where
/// rho_k = e^{-sigma tau(n_{k+1} - n_k)} over the sorted indices. Evaluated in
/// the equivalent form prod (1 - rho_k^2) to avoid overflow of 1/rho_k.
double poisson_matrix_det(std::vector<MultiIndex> indices, double sigma);

/// Cauchy density sigma / (pi (sigma^2 + (t - t0)^2)) on the line.
class CauchyDensity {
 public:
  CauchyDensity(double sigma, double t0);

  double operator()(double t) const;
  /// Exact mass outside [t0 - T, t0 + T]: 1 - (2/pi) arctan(T/sigma).
  double mass_outside(double half_width) const;
  /// The simple bound 2 sigma / (pi T) on mass_outside.
  double tail_bound(double half_width) const;

  double sigma() const { return sigma_; }
  double center() const { return t0_; }

 private:
  double sigma_;
  double t0_;
};

struct MomentReport {
  Complex value;
  Complex target;
  double abs_error = 0.0;
  /// Exact density mass outside the truncation window; bounds the
  /// truncation error since |e^{-iut}| = 1.
  double tail_bound = 0.0;
  /// Sum of per-panel Gauss-Kronrod error estimates.
  double quadrature_error = 0.0;
  double half_width = 0.0;
  std::size_t panels = 0;
};

/// Quadrature of the integral of e^{-iut} against the Cauchy density over
/// [t0 - T, t0 + T]; the target is e^{-sigma|u|} e^{-i u t0}. Throws
/// ToleranceUnachievable when the tail bound is not below tol/2 or the panel
/// budget runs out.
MomentReport cauchy_moment(double u, double sigma, double t0, double half_width, double tol);
/// As above with the smallest half-width whose tail bound is below tol/2.
MomentReport cauchy_moment(double u, double sigma, double t0, double tol);

struct ErgodicResult {
  Complex value;
  bool closed_form = true;
};

/// (1/2N) integral over [-N, N] of f(p^{-it}), as sum a_n sinc(N tau(n)).
ErgodicResult ergodic_average(const FourierSeries& f, double horizon);
/// Same average by Gauss-Kronrod quadrature of f along the Kronecker flow.
ErgodicResult ergodic_average_quadrature(const FourierSeries& f, double horizon,
                                         double tol = 1e-12);

/// |(fg)_r(lambda) - f_r(lambda) g_r(lambda)| for analytic f, g. Throws
/// NotAnalytic when either support leaves {tau >= 0}.
double homomorphism_check(const FourierSeries& f, const FourierSeries& g, double sigma,
                          const std::map<MultiIndex::Coordinate, Complex>& phases);

struct ExpCommuteReport {
  /// l1 norm of the coefficient difference between the two sides.
  double residual = 0.0;
  /// 2 ||f||_1^{K+1} / (K+1)!.
  double tail_bound = 0.0;
};

/// Compares smooth(sum_{k<=K} f^k/k!, sigma) with sum_{k<=K} smooth(f,sigma)^k/k!.
ExpCommuteReport exp_commutes_check(const FourierSeries& f, double sigma, unsigned order,
                                    std::size_t term_budget = kDefaultTermBudget);

/// Truncated exponential sum_{k<=K} f^k/k!. Terms of each power at or below
/// prune_below are dropped (0 keeps everything).
FourierSeries exp_series(const FourierSeries& f, unsigned order,
                         std::size_t term_budget = kDefaultTermBudget, double prune_below = 0.0);

}  // namespace ztau
