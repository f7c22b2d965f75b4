#pragma once

// Discrete 3D octonion transforms on uniform grids (midpoint quadrature).
//
// Forward integrands associate strictly left to right:
//   ((f(t) * k1(t1, w1)) * k2(t2, w2)) * k3(t3, w3)
// Since right multiplication by a fixed octonion is R-linear, the 3D sum
// factors exactly into three per-axis sweeps (axis 1, then 2, then 3), which
// is what these kernels evaluate. The sweeps are OpenMP-parallel over output
// lines. Serial direct-summation counterparts live in woct/reference.hpp.

#include <array>

#include "woct/grid.hpp"
#include "woct/lct_kernel.hpp"

namespace woct {

/// Bracketing of the inverse kernels.
///
/// Reversed: ((F * k3^-1) * k2^-1) * k1^-1, which undoes the forward sweep
///   exactly (each pair k_j k_j^-1 lies in the complex plane of one axis, and
///   Artin's theorem makes the pairing associative).
/// Forward: ((F * k1^-1) * k2^-1) * k3^-1, the same left-to-right order as
///   the forward integrand. It does not invert the forward transform:
///   for Fourier-type matrices it returns -f, otherwise a mix of reflections.
enum class KernelOrder { Reversed, Forward };

/// Full dot-product kernel: ((f e^{-e1 2pi t.w}) e^{-e2 2pi t.w}) e^{-e4 2pi t.w}.
SampledField3D oft_forward(const SampledField3D& f, const Grid3D& omega_grid);

/// Axes with b == 0 are applied as analytic resampling (out grid must map
/// onto the input grid under w -> d w); all other axes are summed.
SampledField3D oclct_forward(const SampledField3D& f, const LctParams3& params,
                             const Grid3D& omega_grid);

SampledField3D oclct_inverse(const SampledField3D& spectrum, const LctParams3& params,
                             const Grid3D& t_grid, KernelOrder order = KernelOrder::Reversed);

/// f(t) * conj(Psi(t - mu)) on f's grid; Psi(t - mu) is an integer shift,
/// zero outside the window support.
SampledField3D windowed_product(const SampledField3D& f, const WindowSpec& window,
                                const std::array<double, 3>& mu);

/// Psi(t - mu) sampled on `t_grid`.
SampledField3D shifted_window(const WindowSpec& window, const Grid3D& t_grid,
                              const std::array<double, 3>& mu);

WoclctResult woclct_forward(const SampledField3D& f, const WindowSpec& window,
                            const LctParams3& params, const Grid3D& omega_grid,
                            const Grid3D& mu_grid);

/// Reversed: f(t) = ||Psi||^-2 sum_mu [OCLCT^-1 G(., mu)](t) * Psi(t - mu) dMu^3.
/// Forward: f(t) = ||Psi||^-2 sum_{w,mu} G(w, mu) * (((k1^-1 k2^-1) k3^-1) Psi(t - mu)) dW^3 dMu^3.
/// ||Psi||^2 uses the same cell weights as every other sum.
SampledField3D woclct_inverse(const WoclctResult& g, const WindowSpec& window,
                              const LctParams3& params, const Grid3D& t_grid,
                              KernelOrder order = KernelOrder::Reversed);

}  // namespace woct
