#pragma once

// Gauss-Kronrod (7, 15) panels with bisection, shared by the moment and
// ergodic-average integrators.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <type_traits>

namespace ztau::detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(std::complex<double> x) { return std::abs(x); }

/// Neumaier-compensated running sum.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    if constexpr (std::is_same_v<T, double>) {
      add_real(sum_, carry_, x);
    } else {
      double sr = sum_.real(), cr = carry_.real(), si = sum_.imag(), ci = carry_.imag();
      add_real(sr, cr, x.real());
      add_real(si, ci, x.imag());
      sum_ = {sr, si};
      carry_ = {cr, ci};
    }
  }
  T value() const { return sum_ + carry_; }

 private:
  static void add_real(double& sum, double& carry, double x) {
    double t = sum + x;
    carry += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  T sum_{};
  T carry_{};
};

template <class T>
struct PanelResult {
  T value{};
  double error = 0.0;
};

template <class T, class F>
PanelResult<T> gauss_kronrod15(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T fc = f(centre);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    T pair = f(centre - dx) + f(centre + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) gauss += pair * kGaussWeights[i / 2];
  }
  return {kronrod * half, magnitude((kronrod - gauss) * half)};
}

/// Integrates over [a, b], bisecting while the Kronrod-Gauss difference
/// exceeds abs_tol. Returns false if max_depth is exhausted anywhere.
template <class T, class F>
bool adaptive_panel(const F& f, double a, double b, double abs_tol, int max_depth,
                    CompensatedSum<T>& sum, double& error, std::size_t& panels) {
  auto r = gauss_kronrod15<T>(f, a, b);
  if (r.error <= abs_tol || max_depth == 0) {
    sum.add(r.value);
    error += r.error;
    ++panels;
    return r.error <= abs_tol;
  }
  const double m = 0.5 * (a + b);
  bool left = adaptive_panel<T>(f, a, m, 0.5 * abs_tol, max_depth - 1, sum, error, panels);
  bool right = adaptive_panel<T>(f, m, b, 0.5 * abs_tol, max_depth - 1, sum, error, panels);
  return left && right;
}

}  // namespace ztau::detail
