#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "woct/error.hpp"
#include "woct/inequalities.hpp"
#include "woct/signals.hpp"

namespace {

using namespace woct;
using woct::testing::gaussian_field;
constexpr double kPi = std::numbers::pi;
constexpr double kEuler = 0.57721566490153286061;

const LctParams3 kFourier{LctParams::fourier(), LctParams::fourier(), LctParams::fourier()};

TransformCase resolved_case(const LctParams3& params) {
  // Window on n + 1 points so that t - mu lands on its samples for mu on the t grid.
  const Grid3D tg = Grid3D::symmetric(12, 0.75);
  const Grid3D wg = Grid3D::symmetric(13, 0.75);
  return TransformCase::compute(gaussian_field(tg, 1.0), WindowSpec(gaussian_field(wg, 1.0)),
                                params, Grid3D::symmetric(12, 0.75), tg);
}

TEST(PittConstant, KnownValues) {
  EXPECT_NEAR(pitt_constant(0.0).M_beta, 1.0, 1e-14);
  EXPECT_NEAR(pitt_constant(1.0).M_beta, kPi, 1e-12);
  EXPECT_NEAR(pitt_constant(2.0).M_beta, 16.0, 1e-12);
  const PittConstant c = pitt_constant(1.5, 4.0);
  EXPECT_NEAR(c.E_beta, c.M_beta / 8.0, 1e-14);
  EXPECT_THROW(pitt_constant(3.0), Error);
  EXPECT_THROW(pitt_constant(-0.1), Error);
}

TEST(PittConstant, IncreasingInBeta) {
  double prev = 0.0;
  for (double b = 0.0; b <= 2.5; b += 0.125) {
    const double m = pitt_constant(b).M_beta;
    EXPECT_GT(m, prev);
    prev = m;
  }
}

TEST(PittConstant, DerivativeMatchesDifference) {
  for (double b12 : {0.5, 1.0, 3.0})
    for (double beta : {0.25, 1.0, 1.75}) {
      const double h = 1e-5;
      const double fd = (pitt_constant(beta + h, b12).E_beta - pitt_constant(beta - h, b12).E_beta) / (2 * h);
      EXPECT_NEAR(pitt_constant(beta, b12).E_beta_prime, fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST(K0Prime, AnalyticMatchesFiniteDifference) {
  const double psi34 = -kEuler + kPi / 2.0 - 3.0 * std::log(2.0);
  for (double b12 : {0.25, 1.0, 4.0}) {
    EXPECT_NEAR(k0_prime_analytic(b12), std::log(b12) + psi34, 1e-12);
    EXPECT_NEAR(k0_prime_finite_difference(b12), k0_prime_analytic(b12), 1e-6);
  }
}

TEST(Concentration, Limits) {
  const Grid3D g = Grid3D::symmetric(10, 0.5);
  const SampledField3D f = gaussian_field(g, 1.0);
  const Region all(g.size(), 1), none(g.size(), 0);
  for (double p : {1.0, 2.0}) {
    EXPECT_NEAR(concentration(f, all, p), 0.0, 1e-15);
    EXPECT_NEAR(concentration(f, none, p), 1.0, 1e-15);
  }
  const Region half = box_region(g, {1.0, 1.0, 1.0});
  EXPECT_GT(concentration(f, half, 1.0), concentration(f, half, 2.0));
  EXPECT_THROW(concentration(f, Region(3, 1), 2.0), Error);
  EXPECT_THROW(concentration(SampledField3D(g), all, 2.0), Error);
}

TEST(Concentration, GaussianBoxAtSixSigma) {
  const Grid3D g = Grid3D::symmetric(40, 0.4);
  const SampledField3D f = gaussian_field(g, 1.0);
  EXPECT_LT(concentration(f, box_region(g, {6.0, 6.0, 6.0}), 2.0), 1e-6);
}

TEST(Concentration, BoxRegionCount) {
  const Grid3D g = Grid3D::symmetric(6, 1.0);
  const Region r = box_region(g, {1.0, 2.0, 3.0});
  std::size_t n = 0;
  for (char c : r) n += c ? 1 : 0;
  EXPECT_EQ(n, 2u * 4u * 6u);
}

TEST(Pitt, BetaZeroIsPlancherelTimesTwoPiB3) {
  // At beta = 0 the left side is ||G||^2 = ||f||^2 ||Psi||^2 for resolved grids.
  const TransformCase c = resolved_case(kFourier);
  const InequalityReport r = check_pitt(c, 0.0);
  EXPECT_NEAR(r.lhs, std::pow(l2_norm(c.f), 2) * c.window.norm2(), 1e-3 * r.lhs);
  EXPECT_NEAR(r.ratio, 2.0 * kPi, 1e-2);
  EXPECT_FALSE(r.satisfied);
}

TEST(Pitt, LargeBetaSatisfied) {
  const TransformCase c = resolved_case(kFourier);
  EXPECT_TRUE(check_pitt(c, 2.0).satisfied);
}

TEST(LogUncertainty, Satisfied) {
  const TransformCase c = resolved_case(kFourier);
  const InequalityReport r = check_log_uncertainty(c);
  EXPECT_EQ(r.relation, ">=");
  EXPECT_TRUE(r.satisfied);
  EXPECT_GT(r.lhs, r.rhs);
}

TEST(YoungHausdorff, PEqualsOneConstant) {
  const LctParams3 p{LctParams{0.5, 2.0, -0.25, 1.0}, LctParams::fourier(), LctParams{0.0, 3.0, -1.0 / 3.0, 0.0}};
  EXPECT_NEAR(young_hausdorff_constant(1.0, p), std::pow(2.0 * kPi, -1.5) / std::sqrt(6.0), 1e-15);
  EXPECT_THROW(young_hausdorff_constant(2.0, p), Error);
  EXPECT_THROW(young_hausdorff_constant(0.5, p), Error);
}

TEST(YoungHausdorff, SatisfiedOnGaussian) {
  const TransformCase c = resolved_case(kFourier);
  for (double p : {1.0, 1.25, 1.5, 1.75}) EXPECT_TRUE(check_young_hausdorff(c, p).satisfied) << p;
}

TEST(Heisenberg, SatisfiedWithUnitWindow) {
  TransformCase c = resolved_case(kFourier);
  c = TransformCase::compute(c.f, c.window.normalized(), c.params, c.g.omega_grid, c.g.mu_grid);
  const InequalityReport r = check_heisenberg(c);
  EXPECT_EQ(r.relation, ">=");
  EXPECT_TRUE(r.satisfied);
}

TEST(DonohoStark, RightSideFormula) {
  const TransformCase c = resolved_case(kFourier);
  const Region sigma = box_region(c.f.grid, {4.0, 4.0, 4.0});
  const Region tau = box_region(c.g.omega_grid, {2.0, 2.0, 2.0});
  const InequalityReport r = check_donoho_stark(c, sigma, tau);
  double ns = 0.0, nt = 0.0;
  for (char v : sigma) ns += v;
  for (char v : tau) nt += v;
  const double es = concentration(c.f, sigma, 1.0);
  const double et = concentration(c.g, tau, 2.0);
  const double expect = ns * c.f.grid.cell_volume() * nt * c.g.omega_grid.cell_volume() * c.window.norm2() *
                        std::pow(l2_norm(c.f), 2) / (8.0 * kPi * kPi * kPi) /
                        std::pow((1.0 - es) * (1.0 - et), 2);
  EXPECT_NEAR(r.rhs, expect, 1e-10 * expect);
  EXPECT_NEAR(r.lhs, std::pow(l2_norm(c.f), 2) * c.window.norm2(), 1e-3 * r.lhs);
}

TEST(Inequalities, DegenerateMatrixRejected) {
  TransformCase c = resolved_case(kFourier);
  c.params[1] = LctParams{1, 0, 0, 1};
  EXPECT_THROW(check_pitt(c, 1.0), Error);
}

}  // namespace
