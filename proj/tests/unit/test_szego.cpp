#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "ztau/error.hpp"
#include "ztau/poisson.hpp"
#include "ztau/szego.hpp"

namespace ztau {
namespace {

using testing::Generator;
using MI = MultiIndex;

FourierSeries chr(const MI& n, Complex c = 1.0) { return FourierSeries::character(n, c); }
FourierSeries one() { return FourierSeries::constant(1.0); }
const MI d1 = MI::unit(1);

Weight one_minus_sq(double a, const MI& n) { return Weight::from_polynomial(one() - chr(n, a)); }

std::vector<MI> multiples(const MI& step, int count) {
  std::vector<MI> out;
  MI n;
  for (int k = 0; k < count; ++k) out.push_back(n = n + step);
  return out;
}

// Real symmetric Toeplitz normal equations by Gaussian elimination, for a
// weight in one variable with real coefficients.
double toeplitz_szego(const std::vector<double>& w_hat, int count) {
  auto w = [&](int k) { return std::size_t(std::abs(k)) < w_hat.size() ? w_hat[std::abs(k)] : 0.0; };
  const int n = count;
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) a[j][k] = w(j - k);
    a[j][n] = w(j + 1);
  }
  for (int c = 0; c < n; ++c) {
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = a[r][n];
    for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  double value = w(0);
  for (int j = 0; j < n; ++j) value -= w(j + 1) * x[j];
  return value;
}

TEST(Weight, FromPolynomialExamples) {
  EXPECT_EQ(weight_from_polynomial(one()).series(), one());
  auto w = weight_from_polynomial(one() + chr(d1, 0.5)).series();
  EXPECT_DOUBLE_EQ(w.coefficient(MI{}).real(), 1.25);
  EXPECT_EQ(w.coefficient(MI{}).imag(), 0.0);
  EXPECT_DOUBLE_EQ(w.coefficient(d1).real(), 0.5);
  EXPECT_DOUBLE_EQ(w.coefficient(-d1).real(), 0.5);
  auto n = MI::from_dense({2, -1, 1});
  EXPECT_EQ(weight_from_polynomial(chr(n, std::polar(1.0, 0.3))).series().size(), 1u);
  EXPECT_NEAR(std::abs(weight_from_polynomial(chr(n, std::polar(1.0, 0.3))).series().coefficient(MI{}) - 1.0),
              0.0, 1e-15);
}

TEST(Weight, DirectRequiresRealSeries) {
  try {
    Weight::direct(one() + chr(d1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRealSymmetric);
  }
  auto w = Weight::direct(FourierSeries::constant(2.0) + chr(d1, 0.5) + chr(-d1, 0.5));
  EXPECT_EQ(w.provenance(), Weight::Provenance::Direct);
  EXPECT_FALSE(w.factor().has_value());
}

TEST(GeometricMean, Examples) {
  EXPECT_NEAR(geometric_mean(Weight::direct(one()), GeometricMeanMethod::Grid), 1.0, 1e-15);
  auto w = one_minus_sq(0.5, d1);
  EXPECT_NEAR(geometric_mean(w, GeometricMeanMethod::Grid), 1.0, 1e-6);
  EXPECT_NEAR(geometric_mean(w, GeometricMeanMethod::OuterShortcut), 1.0, 1e-6);
  auto v = one_minus_sq(2.0, d1);
  EXPECT_NEAR(geometric_mean(v, GeometricMeanMethod::Grid), 4.0, 1e-6);
  try {
    geometric_mean(v, GeometricMeanMethod::OuterShortcut);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOuter);
  }
  EXPECT_THROW(geometric_mean(one_minus_sq(1.0, d1), GeometricMeanMethod::Grid), Error);
}

TEST(SzegoInfimum, Examples) {
  auto flat = Weight::direct(one());
  auto support = multiples(d1, 3);
  auto r = szego_infimum(flat, support, SectionMode::ZplusSection);
  EXPECT_NEAR(r.value, 1.0, 1e-15);
  EXPECT_LE(r.minimizer.max_abs_coefficient(), 1e-15);

  auto w = one_minus_sq(0.5, d1);
  std::vector<MI> s1{d1};
  auto r1 = szego_infimum(w, s1, SectionMode::ZplusSection);
  EXPECT_NEAR(r1.value, 1.05, 1e-15);
  EXPECT_NEAR(r1.value, testing::szego_single_frequency(0.5, 1), 1e-15);
  // Hand minimizer c = -a/(1+a^2) of (1+a^2)(1+c^2)+2ac for p = c z.
  EXPECT_NEAR(std::abs(r1.minimizer.coefficient(d1) - (-0.5 / 1.25)), 0.0, 1e-15);

  auto r20 = szego_infimum(w, multiples(d1, 20), SectionMode::ZplusSection);
  EXPECT_NEAR(r20.value, 1.0, 1e-10);
  EXPECT_NEAR(r20.value, 1.00000000000017053, 1e-15);
  EXPECT_FALSE(r20.singular_gram);
}

TEST(SzegoInfimum, MinimizerAchievesValue) {
  // integral |1-p|^2 w is the constant term of (1-p) conj(1-p) w.
  Generator gen(41);
  for (int i = 0; i < 20; ++i) {
    auto f = one() + gen.analytic_series(3, 2, 2, 0, 2, 0.15);
    auto w = Weight::from_polynomial(f);
    std::vector<MI> support{MI::unit(1), MI::unit(2), MI::from_dense({1, 1})};
    auto r = szego_infimum(w, support, SectionMode::ZplusSection);
    auto resid = one() - r.minimizer;
    auto integrand = multiply(multiply(resid, conjugate(resid)), w.series());
    ASSERT_NEAR(integrand.coefficient(MI{}).real(), r.value, 1e-12);
  }
}

TEST(SzegoInfimum, Errors) {
  auto w = one_minus_sq(0.5, d1);
  std::vector<MI> dup{d1, d1};
  try {
    szego_infimum(w, dup, SectionMode::ZplusSection);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateIndices);
  }
  std::vector<MI> mixed{MI::from_dense({-1, 1})};
  EXPECT_THROW(szego_infimum(w, mixed, SectionMode::ZplusSection), Error);
  EXPECT_NO_THROW(szego_infimum(w, mixed, SectionMode::TauSection));
  std::vector<MI> zero{MI{}};
  EXPECT_THROW(szego_infimum(w, zero, SectionMode::ZplusSection), Error);
  std::vector<MI> negative{MI::from_dense({1, -1})};
  try {
    szego_infimum(w, negative, SectionMode::TauSection);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnalytic);
  }
  EXPECT_EQ(infer_section_mode(mixed), SectionMode::TauSection);
  std::vector<MI> plain{d1, MI::unit(2)};
  EXPECT_EQ(infer_section_mode(plain), SectionMode::ZplusSection);
}

TEST(SzegoInfimum, SingularGramFlagged) {
  // w = |1+z|^20 has a zero of order 20 on the circle, so the Gram matrix of
  // 40 frequencies has condition number near 1e16.
  FourierSeries f = one();
  for (int k = 0; k < 10; ++k) f = multiply(f, one() + chr(d1));
  auto w = Weight::from_polynomial(f);
  auto r = szego_infimum(w, multiples(d1, 40), SectionMode::ZplusSection);
  EXPECT_TRUE(r.singular_gram);
  EXPECT_GE(r.value, -1e-8);
  EXPECT_LE(r.value, w.series().coefficient(MI{}).real());
}

TEST(SzegoGapTable, Examples) {
  auto w = one_minus_sq(0.5, d1);
  auto sections = multiples_sections(d1, 5);
  ASSERT_EQ(sections.size(), 6u);
  EXPECT_TRUE(sections.front().empty());
  auto rows = szego_gap_table(w, sections, SectionMode::ZplusSection);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_NEAR(rows[0].gap, 0.25, 1e-9);
  EXPECT_NEAR(rows[1].gap, 0.05, 1e-9);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].section_size, k);
    EXPECT_LE(rows[k].infimum, rows[k - 1].infimum);
    EXPECT_NEAR(rows[k].infimum, testing::szego_single_frequency(0.5, static_cast<int>(k)), 1e-9);
  }

  auto flat = szego_gap_table(Weight::direct(one()), sections, SectionMode::ZplusSection);
  for (const auto& row : flat) EXPECT_NEAR(row.gap, 0.0, 1e-12);

  auto diag = MI::from_dense({1, 1});
  auto v = Weight::from_polynomial(one() + chr(diag, 0.4));
  auto drows = szego_gap_table(v, multiples_sections(diag, 4), SectionMode::ZplusSection);
  for (std::size_t k = 0; k < drows.size(); ++k)
    EXPECT_NEAR(drows[k].infimum, testing::szego_single_frequency(0.4, static_cast<int>(k)), 1e-9);
  EXPECT_NEAR(drows[1].gap, 0.022068965517241379, 1e-9);
}

TEST(SzegoGapTable, RequiresNesting) {
  auto w = one_minus_sq(0.5, d1);
  std::vector<std::vector<MI>> bad{{d1}, {MI::unit(2)}};
  EXPECT_THROW(szego_gap_table(w, bad, SectionMode::ZplusSection), Error);
}

TEST(SzegoProperties, GapRateMatchesClosedForm) {
  for (double a : {0.2, 0.5, 0.8}) {
    auto w = one_minus_sq(a, d1);
    for (int N = 1; N <= 12; ++N) {
      auto r = szego_infimum(w, multiples(d1, N), SectionMode::ZplusSection);
      const double a2 = a * a;
      const double rate = std::pow(a2, N + 1) * (1 - a2) / (1 - std::pow(a2, N + 1));
      ASSERT_NEAR(r.value - 1.0, rate, 1e-9);
    }
  }
}

TEST(SzegoProperties, AgreesWithToeplitzOracle) {
  Generator gen(42);
  for (int i = 0; i < 30; ++i) {
    std::vector<double> coeffs{1.0};
    for (int k = 1; k <= 3; ++k) coeffs.push_back(gen.uniform(-0.3, 0.3));
    FourierSeries f;
    for (int k = 0; k <= 3; ++k) f.add_term(MI::unit(1, k), coeffs[k]);
    auto w = Weight::from_polynomial(f);
    std::vector<double> w_hat(4);
    for (int k = 0; k <= 3; ++k) w_hat[k] = w.series().coefficient(MI::unit(1, k)).real();
    for (int N = 1; N <= 6; ++N) {
      auto r = szego_infimum(w, multiples(d1, N), SectionMode::ZplusSection);
      ASSERT_NEAR(r.value, toeplitz_szego(w_hat, N), 1e-12);
    }
  }
}

TEST(SzegoProperties, LowerBoundAndMonotone) {
  Generator gen(43);
  for (int i = 0; i < 30; ++i) {
    auto tail = gen.analytic_series(4, 2, 2, 0, 2, 0.2);
    tail = project(tail, Region::TauPositive);
    auto w = Weight::from_polynomial(one() + tail);
    const double gm = geometric_mean(w, GeometricMeanMethod::Grid);
    std::vector<MI> grow;
    double previous = std::numeric_limits<double>::infinity();
    for (MI n : {MI::unit(1), MI::unit(2), MI::unit(1, 2), MI::from_dense({1, 1}), MI::unit(2, 2)}) {
      grow.push_back(n);
      auto r = szego_infimum(w, grow, SectionMode::ZplusSection);
      ASSERT_GE(r.value, gm - 1e-6);
      ASSERT_LE(r.value, previous + 1e-14);
      previous = r.value;
    }
  }
}

TEST(OuterCheck, Examples) {
  auto good = outer_check(one() - chr(d1, 0.5));
  EXPECT_TRUE(good.is_outer);
  EXPECT_NEAR(good.lhs, 1.0, 1e-8);
  EXPECT_NEAR(good.rhs, 1.0, 1e-15);
  auto bad = outer_check(one() - chr(d1, 2.0));
  EXPECT_FALSE(bad.is_outer);
  EXPECT_NEAR(bad.lhs, 2.0, 1e-8);
  EXPECT_NEAR(bad.rhs, 1.0, 1e-15);
  EXPECT_TRUE(outer_check(FourierSeries::constant({0.0, 3.0})).is_outer);
  EXPECT_THROW(outer_check(one() - chr(d1)), Error);
  EXPECT_THROW(outer_check(chr(-d1)), Error);
}

TEST(SupportCondition, Examples) {
  auto ok = support_condition_check(one_minus_sq(0.5, d1));
  EXPECT_TRUE(ok.holds);
  EXPECT_TRUE(ok.violations.empty());
  EXPECT_EQ(ok.grid_points, 256u);

  auto mixed = MI::from_dense({1, -1});
  auto bad = support_condition_check(Weight::from_polynomial(one() + chr(mixed, 0.4)));
  EXPECT_FALSE(bad.holds);
  ASSERT_GE(bad.violations.size(), 2u);
  EXPECT_NE(std::find(bad.violations.begin(), bad.violations.end(), mixed), bad.violations.end());
  EXPECT_NE(std::find(bad.violations.begin(), bad.violations.end(), -mixed), bad.violations.end());

  auto flat = support_condition_check(Weight::direct(one()));
  EXPECT_TRUE(flat.holds);
  EXPECT_THROW(support_condition_check(one_minus_sq(1.0, d1)), Error);
}

TEST(LogCoefficients, MatchTaylorOracle) {
  auto spec = log_coefficients(one_minus_sq(0.5, d1));
  for (int k = 1; k <= 20; ++k) {
    const double want = testing::log_one_minus_coefficient(0.5, k);
    EXPECT_NEAR(spec.resolved.coefficient(MI::unit(1, k)).real(), want, 1e-12);
    EXPECT_NEAR(spec.resolved.coefficient(MI::unit(1, -k)).real(), want, 1e-12);
  }
  EXPECT_NEAR(std::abs(spec.resolved.coefficient(MI{})), 0.0, 1e-12);
}

TEST(LogCoefficients, TranslationRule) {
  // log(w_t)^(n) = log(w)^(n) conj(gamma_n(t)) where w_t(x) = w(x t^{-1}).
  Generator gen(44);
  for (int i = 0; i < 10; ++i) {
    auto f = one() + gen.analytic_series(3, 2, 2, 0, 2, 0.2);
    auto w = Weight::from_polynomial(f);
    auto shift = gen.phases(2);
    auto wt = Weight::direct(translate(w.series(), shift), 1e-12);
    auto base = log_coefficients(w).resolved;
    auto moved = log_coefficients(wt).resolved;
    for (const auto& [n, c] : base.terms()) {
      Complex gamma = phase_product(n, DiskPoint(0.0, shift));
      ASSERT_LE(std::abs(moved.coefficient(n) - c * std::conj(gamma)), 1e-8) << n.to_string();
    }
  }
}

TEST(OuterFactor, Examples) {
  auto r = outer_factor(one_minus_sq(0.5, d1));
  EXPECT_NEAR(std::abs(r.factor.coefficient(MI{}) - 1.0), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(r.factor.coefficient(d1) + 0.125), 0.0, 1e-6);
  for (const auto& [n, c] : r.factor.terms())
    if (!n.is_zero() && n != d1) EXPECT_LE(std::abs(c), 1e-6) << n.to_string();

  auto flat = outer_factor(Weight::direct(one()));
  EXPECT_EQ(flat.factor, one());

  auto diag = MI::from_dense({1, 1});
  auto d = outer_factor(Weight::from_polynomial(one() - chr(diag, 0.3)));
  EXPECT_NEAR(std::abs(d.factor.coefficient(MI{}) - 1.0), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(d.factor.coefficient(diag) + 0.3 / 36), 0.0, 1e-6);
}

TEST(OuterFactor, Errors) {
  auto mixed = Weight::from_polynomial(one() + chr(MI::from_dense({1, -1}), 0.4));
  try {
    outer_factor(mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SupportConditionViolated);
  }
  OuterFactorOptions opts;
  opts.sigma0 = 0.5;
  EXPECT_THROW(outer_factor(one_minus_sq(0.5, d1), opts), Error);
}

TEST(OuterFactor, ResultIsOuterAndMatchesSmoothedFactor) {
  Generator gen(45);
  for (int i = 0; i < 10; ++i) {
    auto tail = project(gen.analytic_series(3, 2, 2, 0, 2, 0.15), Region::TauPositive);
    auto f = one() + tail;
    auto r = outer_factor(Weight::from_polynomial(f));
    EXPECT_TRUE(outer_check(r.factor).is_outer);
    // For outer f with f(0) = 1 the factor is the sigma0-smoothed log f exponentiated,
    // i.e. the polynomial f(p^{-2} z).
    auto want = smooth(f, 2.0);
    for (const auto& [n, c] : want.terms()) EXPECT_LE(std::abs(r.factor.coefficient(n) - c), 1e-6);
  }
}

}  // namespace
}  // namespace ztau
