#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/generators.hpp"
#include "ztau/bohr.hpp"
#include "ztau/error.hpp"
#include "ztau/torus_grid.hpp"

namespace ztau {
namespace {

using testing::Generator;
using MI = MultiIndex;

OrdinalRational rat(long num, long den = 1) { return OrdinalRational(num, den); }
FourierSeries chr(const MI& n, Complex c = 1.0) { return FourierSeries::character(n, c); }

DirichletSeries dirichlet(std::initializer_list<std::pair<OrdinalRational, Complex>> terms) {
  DirichletSeries d;
  for (const auto& [q, b] : terms) d.add_term(q, b);
  return d;
}

TEST(ToDirichlet, Examples) {
  auto d = to_dirichlet(chr(MI::unit(1)) + chr(MI::unit(2)));
  EXPECT_EQ(d, dirichlet({{rat(2), 1.0}, {rat(3), 1.0}}));
  EXPECT_EQ(to_dirichlet(chr(MI::from_dense({-1, 1}))), dirichlet({{rat(3, 2), 1.0}}));
  EXPECT_EQ(to_dirichlet(FourierSeries::constant(1.0)), dirichlet({{rat(1), 1.0}}));
}

TEST(ToDirichlet, RejectsNegativeFrequency) {
  try {
    to_dirichlet(chr(MI::from_dense({1, -1})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnalytic);
    EXPECT_NE(std::string(e.what()).find("[1,-1]"), std::string::npos);
  }
  DirichletSeries d;
  EXPECT_THROW(d.add_term(rat(2, 3), 1.0), Error);
}

TEST(FromDirichlet, Examples) {
  EXPECT_EQ(from_dirichlet(dirichlet({{rat(4), 1.0}})), chr(MI::unit(1, 2)));
  EXPECT_EQ(from_dirichlet(dirichlet({{rat(6), {2.0, 1.0}}})), chr(MI::from_dense({1, 1}), {2.0, 1.0}));
  EXPECT_EQ(from_dirichlet(dirichlet({{rat(1), {0.3, -0.7}}})), FourierSeries::constant({0.3, -0.7}));
  try {
    from_dirichlet(dirichlet({{rat(1000003), 1.0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FactorizationLimit);
  }
}

TEST(EvaluateHalfplane, Examples) {
  auto d = dirichlet({{rat(2), 1.0}});
  EXPECT_NEAR(std::abs(evaluate_halfplane(d, 1.0, 0.0) - 0.5), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(evaluate_halfplane(d, 0.0, std::numbers::pi / std::numbers::ln2) + 1.0), 0.0, 1e-15);
  auto e = dirichlet({{rat(1), {0.25, 2.0}}, {rat(3, 2), 5.0}});
  EXPECT_EQ(evaluate_halfplane(e, std::numeric_limits<double>::infinity(), 3.0), Complex(0.25, 2.0));
}

TEST(IsClassical, Examples) {
  EXPECT_TRUE(is_classical(dirichlet({{rat(2), 1.0}, {rat(3), 1.0}, {rat(4), 1.0}})));
  EXPECT_FALSE(is_classical(dirichlet({{rat(3, 2), 1.0}})));
  EXPECT_TRUE(is_classical(DirichletSeries{}));
}

TEST(BohrProperties, RoundtripBothDirections) {
  Generator gen(21);
  for (int i = 0; i < 1000; ++i) {
    auto f = gen.analytic_series(8, 4, 8, -4, 4);
    auto d = to_dirichlet(f);
    ASSERT_EQ(d.size(), f.size());
    ASSERT_EQ(from_dirichlet(d), f);
    ASSERT_EQ(to_dirichlet(from_dirichlet(d)), d);
  }
}

TEST(BohrProperties, EvaluationCompatibility) {
  Generator gen(22);
  for (int i = 0; i < 100; ++i) {
    auto f = gen.analytic_series(8, 3, 5, -3, 3);
    const double sigma = gen.uniform(0.0, 2.0), t = gen.uniform(-50.0, 50.0);
    auto pt = DiskPoint::kronecker(sigma, t, f.active_coordinates());
    ASSERT_LE(std::abs(evaluate_halfplane(to_dirichlet(f), sigma, t) - evaluate(f, pt)), 1e-10);
  }
}

TEST(BohrProperties, ClassicalIffZplus) {
  Generator gen(23);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.analytic_series(3, 2, 3, -1, 2);
    bool zplus = true;
    for (const auto& [n, c] : f.terms()) zplus = zplus && classify(n) == IndexClass::InZplus;
    ASSERT_EQ(is_classical(to_dirichlet(f)), zplus);
  }
}

TEST(BohrProperties, LineSupBelowTorusSup) {
  Generator gen(24);
  for (int i = 0; i < 20; ++i) {
    auto f = gen.analytic_series(5, 2, 2, -2, 2);
    if (f.empty()) continue;
    auto d = to_dirichlet(f);
    TorusGrid grid = TorusGrid::for_series(f, {});
    double torus_sup = 0.0;
    for (auto v : grid.sample(f)) torus_sup = std::max(torus_sup, std::abs(v));
    // The grid sup undershoots the true sup by at most the Lipschitz slack.
    const double slack = 2 * std::numbers::pi / 256 * 4 * f.l1_coefficient_norm();
    for (int k = 0; k < 400; ++k) {
      const double t = -100.0 + 0.5 * k;
      ASSERT_LE(std::abs(evaluate_halfplane(d, 0.0, t)), torus_sup + slack);
    }
  }
}

}  // namespace
}  // namespace ztau
