#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "woct/octonion.hpp"

namespace woct {

struct GridAxis {
  std::size_t count = 1;
  double spacing = 1.0;
  double origin = 0.0;

  /// Cell-centred axis symmetric about zero: origin = -spacing (count - 1) / 2.
  static GridAxis symmetric(std::size_t count, double spacing);

  double point(std::size_t i) const { return origin + spacing * static_cast<double>(i); }
  double last() const { return point(count - 1); }
  /// Closed under negation to within 1e-12 spacing.
  bool is_symmetric() const;

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

/// Uniform 3D grid; linear index runs axis 3 fastest.
struct Grid3D {
  std::array<GridAxis, 3> axes{};

  static Grid3D symmetric(std::size_t n1, std::size_t n2, std::size_t n3, double spacing);
  static Grid3D symmetric(std::size_t n, double spacing) { return symmetric(n, n, n, spacing); }

  std::size_t size() const { return axes[0].count * axes[1].count * axes[2].count; }
  std::array<std::size_t, 3> counts() const {
    return {axes[0].count, axes[1].count, axes[2].count};
  }
  double cell_volume() const { return axes[0].spacing * axes[1].spacing * axes[2].spacing; }
  bool is_symmetric() const;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * axes[1].count + j) * axes[2].count + k;
  }
  std::array<std::size_t, 3> unravel(std::size_t linear) const;
  std::array<double, 3> point(std::size_t linear) const;

  /// Same counts and spacings, origin moved by `by`.
  Grid3D translated(const std::array<double, 3>& by) const;

  friend bool operator==(const Grid3D&, const Grid3D&) = default;
};

struct SampledField3D {
  Grid3D grid;
  std::vector<Octonion> values;

  SampledField3D() = default;
  /// Zero field on `g`.
  explicit SampledField3D(const Grid3D& g);
  /// Throws grid-mismatch if values.size() != g.size().
  SampledField3D(const Grid3D& g, std::vector<Octonion> v);

  const Octonion& at(std::size_t i, std::size_t j, std::size_t k) const {
    return values[grid.index(i, j, k)];
  }
  Octonion& at(std::size_t i, std::size_t j, std::size_t k) { return values[grid.index(i, j, k)]; }

  bool is_real() const;
};

/// (sum |f|^p dV)^(1/p); p = infinity gives the max modulus.
double lp_norm(const SampledField3D& f, double p);
inline double l2_norm(const SampledField3D& f) { return lp_norm(f, 2.0); }
/// Relative L2 mismatch ||a - b|| / ||b||, or the absolute norm when ||b|| < 1e-14.
double relative_l2(const std::vector<Octonion>& a, const std::vector<Octonion>& b);

/// Pf(t) = f(-t). Requires a negation-symmetric grid.
SampledField3D parity_reflect(const SampledField3D& f);

/// Octonion window function; its L2 norm must be positive.
class WindowSpec {
 public:
  explicit WindowSpec(SampledField3D window);

  const SampledField3D& field() const { return window_; }
  const Grid3D& grid() const { return window_.grid; }
  double norm2() const { return norm2_; }

  /// Copy rescaled to unit discrete L2 norm.
  WindowSpec normalized() const;

 private:
  SampledField3D window_;
  double norm2_ = 0.0;
};

/// Transform values over (omega, mu). Linear index: mu-outer, omega-inner,
/// each axis-3 fastest.
struct WoclctResult {
  Grid3D omega_grid;
  Grid3D mu_grid;
  std::vector<Octonion> values;

  WoclctResult() = default;
  WoclctResult(const Grid3D& omega, const Grid3D& mu);

  std::size_t index(std::size_t omega_index, std::size_t mu_index) const {
    return mu_index * omega_grid.size() + omega_index;
  }
  const Octonion& at(std::size_t omega_index, std::size_t mu_index) const {
    return values[index(omega_index, mu_index)];
  }
  Octonion& at(std::size_t omega_index, std::size_t mu_index) {
    return values[index(omega_index, mu_index)];
  }
  /// dOmega^3 dMu^3
  double cell_volume() const { return omega_grid.cell_volume() * mu_grid.cell_volume(); }
};

}  // namespace woct
