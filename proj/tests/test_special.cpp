#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "woct/error.hpp"
#include "woct/special.hpp"

namespace {

using namespace woct;
constexpr double kPi = std::numbers::pi;
constexpr double kEuler = 0.57721566490153286061;
const double kLn2 = std::log(2.0);

TEST(Gamma, MatchesStdTgamma) {
  for (double x = 0.25; x <= 10.0; x += 0.0625) {
    EXPECT_NEAR(gamma_fn(x) / std::tgamma(x), 1.0, 1e-12) << x;
    EXPECT_NEAR(lgamma_fn(x), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
  }
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(gamma_fn(5.0), 24.0, 1e-11);
}

TEST(Gamma, DomainError) {
  EXPECT_THROW(gamma_fn(0.0), Error);
  EXPECT_THROW(gamma_fn(-1.5), Error);
  EXPECT_THROW(digamma_fn(0.0), Error);
  try {
    lgamma_fn(-2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
}

TEST(Digamma, ClosedFormValues) {
  const double base[4] = {-kEuler - kPi / 2.0 - 3.0 * kLn2, -kEuler - 2.0 * kLn2,
                          -kEuler + kPi / 2.0 - 3.0 * kLn2, -kEuler};
  const double x0[4] = {0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 4; ++i) {
    double x = x0[i];
    double expect = base[i];
    for (int k = 0; k < 8; ++k) {
      EXPECT_NEAR(digamma_fn(x), expect, 1e-13) << x;
      expect += 1.0 / x;
      x += 1.0;
    }
  }
}

TEST(Digamma, DerivativeOfLgamma) {
  for (double x : {0.3, 0.75, 1.7, 4.2, 9.9, 25.0}) {
    const double h = 1e-5 * std::max(1.0, x);
    const double fd = (std::lgamma(x + h) - std::lgamma(x - h)) / (2.0 * h);
    EXPECT_NEAR(digamma_fn(x), fd, 1e-8) << x;
  }
}

}  // namespace
