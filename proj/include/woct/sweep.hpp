#pragma once

// Per-axis sweep machinery shared by the transform kernels.

#include <array>
#include <cstddef>
#include <vector>

#include "woct/grid.hpp"
#include "woct/lct_kernel.hpp"
#include "woct/transforms.hpp"

namespace woct::detail {

/// Signed permutation implementing x -> x * e_i.
struct RightUnit {
  std::array<int, 8> src{};
  std::array<double, 8> sign{};
};

const RightUnit& right_unit(Axis axis);

/// x * (c + s e_axis)
inline Octonion mul_right(const Octonion& x, double c, double s, Axis axis) {
  const RightUnit& u = right_unit(axis);
  Octonion r;
  for (std::size_t k = 0; k < 8; ++k) r[k] = c * x[k] + s * u.sign[k] * x[u.src[k]];
  return r;
}

/// One axis of a separable transform: either a weighted kernel sum
/// out[w] = sum_t in[t] * (c[t,w] + s[t,w] e) or, for b == 0, a resampling
/// out[w] = in[src[w]] * (rc[w] + rs[w] e).
struct Stage {
  int axis_index = 0;
  Axis unit = Axis::E1;
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  bool resample = false;
  std::vector<double> c, s;  // n_in * n_out, index t * n_out + w
  std::vector<std::size_t> src;
  std::vector<double> rc, rs;
};

std::vector<Stage> forward_stages(const LctParams3& params, const Grid3D& t_grid,
                                  const Grid3D& omega_grid);
std::vector<Stage> inverse_stages(const LctParams3& params, const Grid3D& omega_grid,
                                  const Grid3D& t_grid, KernelOrder order);

std::vector<Octonion> apply_stage(const std::vector<Octonion>& in, std::array<std::size_t, 3>& dims,
                                  const Stage& stage);
std::vector<Octonion> run_stages(const std::vector<Octonion>& in, std::array<std::size_t, 3> dims,
                                 const std::vector<Stage>& stages);

/// Dense table of one axis's inverse kernel values k^-1(t, w).
struct KernelTable1D {
  std::size_t n_w = 0;
  std::vector<Octonion> k;  // index t * n_w + w
  const Octonion& at(std::size_t t, std::size_t w) const { return k[t * n_w + w]; }
};

std::array<KernelTable1D, 3> inverse_kernel_tables(const LctParams3& params,
                                                   const Grid3D& omega_grid, const Grid3D& t_grid);

}  // namespace woct::detail
