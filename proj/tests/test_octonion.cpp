#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"
#include "woct/octonion.hpp"

namespace {

using namespace woct;
using woct::testing::max_abs_diff;
using woct::testing::random_octonion;
using woct::testing::random_quaternion;

Octonion e(std::size_t i) { return Octonion::basis(i); }

// Independent table: e_i e_j from the seven quaternionic triples of the
// Cayley-Dickson rule with e5 = e1e4, e6 = e2e4, e7 = e3e4.
int triple_sign(int i, int j, int& k) {
  static const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                    {1, 7, 6}, {2, 5, 7}, {3, 6, 5}};
  for (const auto& t : triples) {
    for (int r = 0; r < 3; ++r) {
      const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
      if (a == i && b == j) { k = c; return 1; }
      if (b == i && a == j) { k = c; return -1; }
    }
  }
  return 0;
}

TEST(Quaternion, HamiltonProduct) {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  const Quaternion ij = i * j;
  EXPECT_EQ(ij.z, 1.0);
  const Quaternion ji = j * i;
  EXPECT_EQ(ji.z, -1.0);
  const Quaternion kk = k * k;
  EXPECT_EQ(kk.w, -1.0);
}

TEST(Quaternion, ConjugateAndNorm) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    const Quaternion cc = a.conj().conj();
    EXPECT_EQ(cc.w, a.w);
    EXPECT_EQ(cc.z, a.z);
    EXPECT_NEAR((a * b).norm(), a.norm() * b.norm(), 1e-12 * a.norm() * b.norm());
  }
}

TEST(Octonion, BasisProducts) {
  EXPECT_EQ(e(1) * e(2), e(3));
  EXPECT_EQ(e(1) * e(4), e(5));
  EXPECT_EQ(e(2) * e(4), e(6));
  EXPECT_EQ(e(3) * e(4), e(7));
}

TEST(Octonion, MatchesTripleTable) {
  for (int i = 1; i < 8; ++i) {
    EXPECT_EQ(e(i) * e(i), -e(0)) << "e" << i;
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      int k = 0;
      const int s = triple_sign(i, j, k);
      ASSERT_NE(s, 0);
      EXPECT_EQ(e(i) * e(j), e(k) * static_cast<double>(s)) << "e" << i << " e" << j;
      EXPECT_EQ(e(i) * e(j), -(e(j) * e(i)));
    }
  }
}

TEST(Octonion, NonAssociativityWitness) {
  EXPECT_EQ((e(1) * e(2)) * e(4), e(7));
  EXPECT_EQ(e(1) * (e(2) * e(4)), -e(7));
}

TEST(Octonion, IdentityElement) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const Octonion z = random_octonion(rng);
    EXPECT_EQ(Octonion(1.0) * z, z);
    EXPECT_EQ(z * Octonion(1.0), z);
  }
}

TEST(Octonion, Conjugate) {
  EXPECT_EQ(oct_conj(e(5)), -e(5));
  std::mt19937_64 rng(5);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion g = random_quaternion(rng), d = random_quaternion(rng);
    const Octonion z(g, d);
    const Octonion expect(g.conj(), -1.0 * d);
    EXPECT_EQ(oct_conj(z), expect);
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    EXPECT_LT(max_abs_diff(oct_conj(a * b), oct_conj(b) * oct_conj(a)), 1e-13);
  }
}

TEST(Octonion, Norm) {
  EXPECT_DOUBLE_EQ(oct_norm(e(0) + e(1) + e(4) + e(5)), 2.0);
  EXPECT_EQ(oct_norm(Octonion()), 0.0);
  std::mt19937_64 rng(7);
  for (int n = 0; n < 10000; ++n) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    const double na = oct_norm(a), nb = oct_norm(b);
    EXPECT_LE(std::abs(oct_norm(a * b) - na * nb), 1e-12 * na * nb);
    EXPECT_NEAR((a * a.conj()).real(), a.norm2(), 1e-12 * a.norm2());
  }
}

TEST(Octonion, Alternativity) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 1000; ++n) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    const double scale = a.norm2() * b.norm();
    EXPECT_LT(max_abs_diff((a * a) * b, a * (a * b)), 1e-12 * scale);
    EXPECT_LT(max_abs_diff((b * a) * a, b * (a * a)), 1e-12 * scale);
    EXPECT_LT(max_abs_diff((a * b.conj()) * b, a * b.norm2()), 1e-12 * scale);
  }
}

TEST(Octonion, Distributivity) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 1000; ++n) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng), c = random_octonion(rng);
    const double scale = a.norm() * (b.norm() + c.norm());
    EXPECT_LT(max_abs_diff(a * (b + c), a * b + a * c), 1e-14 * scale);
    EXPECT_LT(max_abs_diff((b + c) * a, b * a + c * a), 1e-14 * scale);
  }
}

TEST(Octonion, GeneralAssociatorNonzero) {
  std::mt19937_64 rng(19);
  const Octonion a = random_octonion(rng), b = random_octonion(rng), c = random_octonion(rng);
  EXPECT_GT(associator(a, b, c).norm(), 1e-3);
}

TEST(OctExpAxis, Values) {
  EXPECT_EQ(oct_exp_axis(Axis::E1, 0.0), Octonion(1.0));
  EXPECT_LT(max_abs_diff(oct_exp_axis(Axis::E1, -std::numbers::pi / 2), -e(1)), 1e-16);
  EXPECT_LT(max_abs_diff(oct_exp_axis(Axis::E4, std::numbers::pi), Octonion(-1.0)), 1e-15);
  for (double th : {-2.0, 0.3, 5.0}) {
    for (Axis ax : {Axis::E1, Axis::E2, Axis::E4}) EXPECT_NEAR(oct_exp_axis(ax, th).norm(), 1.0, 1e-15);
  }
}

TEST(QuaternionE4Identities, TrivialAndBasisCases) {
  for (double r : quaternion_e4_residuals({1, 0, 0, 0}, {1, 0, 0, 0})) EXPECT_EQ(r, 0.0);
  for (double r : quaternion_e4_residuals({0, 1, 0, 0}, {0, 0, 1, 0})) EXPECT_EQ(r, 0.0);
  // (iv) with g = e1, d = e2 written out by hand.
  EXPECT_EQ(e(1) * (e(2) * e(4)), -e(7));
  EXPECT_EQ((e(2) * e(1)) * e(4), -e(7));
}

TEST(QuaternionE4Identities, RandomPairs) {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 10000; ++n) {
    const Quaternion g = random_quaternion(rng), d = random_quaternion(rng);
    const double scale = 1.0 + g.norm() * d.norm();
    for (double r : quaternion_e4_residuals(g, d)) EXPECT_LE(r, 1e-12 * scale);
  }
}

}  // namespace
