#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"
#include "woct/error.hpp"
#include "woct/grid.hpp"

namespace {

using namespace woct;

TEST(Grid3D, SymmetricAxis) {
  const GridAxis a = GridAxis::symmetric(4, 0.5);
  EXPECT_DOUBLE_EQ(a.origin, -0.75);
  EXPECT_DOUBLE_EQ(a.last(), 0.75);
  EXPECT_TRUE(a.is_symmetric());
  EXPECT_FALSE((GridAxis{4, 0.5, -1.0}).is_symmetric());
  EXPECT_THROW(GridAxis::symmetric(0, 1.0), Error);
}

TEST(Grid3D, Axis3Fastest) {
  const Grid3D g = Grid3D::symmetric(2, 3, 4, 1.0);
  EXPECT_EQ(g.size(), 24u);
  EXPECT_EQ(g.index(0, 0, 1), 1u);
  EXPECT_EQ(g.index(0, 1, 0), 4u);
  EXPECT_EQ(g.index(1, 0, 0), 12u);
  for (std::size_t q = 0; q < g.size(); ++q) {
    const auto [i, j, k] = g.unravel(q);
    EXPECT_EQ(g.index(i, j, k), q);
  }
  const auto p = g.point(g.index(1, 2, 3));
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 1.0);
  EXPECT_DOUBLE_EQ(p[2], 1.5);
}

TEST(SampledField3D, SizeMismatch) {
  const Grid3D g = Grid3D::symmetric(2, 1.0);
  try {
    SampledField3D f(g, std::vector<Octonion>(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GridMismatch);
  }
}

TEST(Norms, GaussianL2) {
  // ||exp(-|t|^2 / 2)||_2^2 = pi^{3/2}
  const Grid3D g = Grid3D::symmetric(24, 0.5);
  const SampledField3D f = woct::testing::gaussian_field(g, 1.0);
  EXPECT_NEAR(l2_norm(f), std::pow(std::numbers::pi, 0.75), 1e-8);
  EXPECT_NEAR(lp_norm(f, 1.0), std::pow(2.0 * std::numbers::pi, 1.5), 1e-6);
  EXPECT_LT(lp_norm(f, INFINITY), 1.0);
}

TEST(Norms, RelativeL2Fallback) {
  std::vector<Octonion> a(3, Octonion(1.0)), z(3);
  EXPECT_DOUBLE_EQ(relative_l2(a, z), std::sqrt(3.0));
  EXPECT_EQ(relative_l2(a, a), 0.0);
  EXPECT_THROW(relative_l2(a, std::vector<Octonion>(2)), Error);
}

TEST(Parity, ReflectsThroughOrigin) {
  std::mt19937_64 rng(2);
  const Grid3D g = Grid3D::symmetric(3, 4, 5, 0.7);
  const SampledField3D f = woct::testing::random_field(g, rng);
  const SampledField3D p = parity_reflect(f);
  for (std::size_t q = 0; q < g.size(); ++q) {
    const auto t = g.point(q);
    // find -t by coordinates
    const auto [i, j, k] = g.unravel(q);
    EXPECT_EQ(p.values[q], f.at(2 - i, 3 - j, 4 - k));
    const auto m = g.point(g.index(2 - i, 3 - j, 4 - k));
    for (int a = 0; a < 3; ++a) EXPECT_NEAR(m[a], -t[a], 1e-15);
  }
  const SampledField3D shifted(g.translated({0.7, 0, 0}), f.values);
  EXPECT_THROW(parity_reflect(shifted), Error);
}

TEST(WindowSpec, ZeroWindowRejected) {
  const Grid3D g = Grid3D::symmetric(2, 1.0);
  try {
    WindowSpec w{SampledField3D(g)};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroWindow);
  }
  const WindowSpec w(woct::testing::gaussian_field(Grid3D::symmetric(6, 0.5), 1.0));
  EXPECT_NEAR(w.normalized().norm2(), 1.0, 1e-14);
}

TEST(WoclctResult, MuOuterOmegaInner) {
  const WoclctResult r(Grid3D::symmetric(2, 1.0), Grid3D::symmetric(3, 1.0));
  EXPECT_EQ(r.values.size(), 8u * 27u);
  EXPECT_EQ(r.index(5, 0), 5u);
  EXPECT_EQ(r.index(0, 1), 8u);
  EXPECT_DOUBLE_EQ(r.cell_volume(), 1.0);
}

}  // namespace
