#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "woct/grid.hpp"
#include "woct/octonion.hpp"

namespace woct::testing {

inline Quaternion random_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng), n(rng), n(rng)};
}

inline Octonion random_octonion(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Octonion z;
  for (std::size_t i = 0; i < 8; ++i) z[i] = n(rng);
  return z;
}

inline SampledField3D random_field(const Grid3D& g, std::mt19937_64& rng, bool real_only = false) {
  std::normal_distribution<double> n;
  SampledField3D f(g);
  for (auto& v : f.values) {
    if (real_only) {
      v = Octonion(n(rng));
    } else {
      for (std::size_t i = 0; i < 8; ++i) v[i] = n(rng);
    }
  }
  return f;
}

inline SampledField3D gaussian_field(const Grid3D& g, double sigma,
                                     std::array<double, 3> center = {}) {
  SampledField3D f(g);
  for (std::size_t q = 0; q < g.size(); ++q) {
    const auto t = g.point(q);
    double e = 0.0;
    for (int a = 0; a < 3; ++a) e += (t[a] - center[a]) * (t[a] - center[a]);
    f.values[q] = Octonion(std::exp(-e / (2.0 * sigma * sigma)));
  }
  return f;
}

inline double max_abs_diff(const Octonion& a, const Octonion& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace woct::testing
