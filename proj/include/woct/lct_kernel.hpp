#pragma once

// Per-axis linear canonical transform kernels.
//
// For a unimodular matrix N = [a b; c d] with b != 0 the kernel along axis e is
//   k(t, w) = (2 pi |b|)^(-1/2) exp(e * theta),
//   theta   = a t^2 / (2b) - t w / b + d w^2 / (2b) - pi/2,
// and the inverse kernel carries exp(-e * theta). The b == 0 case is a scaled
// delta and is applied as a resampling rule (degenerate_resample) instead.

#include <span>
#include <vector>

#include "woct/octonion.hpp"

namespace woct {

struct LctParams {
  double a = 0.0;
  double b = 1.0;
  double c = -1.0;
  double d = 0.0;

  static constexpr double kUnimodularTol = 1e-12;

  /// Throws not-unimodular when |ad - bc - 1| > 1e-12.
  static LctParams make(double a, double b, double c, double d);
  /// a = d = 0, b = 1, c = -1: the Fourier-type matrix.
  static constexpr LctParams fourier() { return {0.0, 1.0, -1.0, 0.0}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr bool degenerate() const { return b == 0.0; }
  bool unimodular() const;
  /// [d -b; -c a]
  constexpr LctParams inverse() const { return {d, -b, -c, a}; }

  friend constexpr bool operator==(const LctParams&, const LctParams&) = default;
};

/// One matrix per axis, applied along e1, e2 and e4 respectively.
using LctParams3 = std::array<LctParams, 3>;

constexpr Axis kAxisOf[3] = {Axis::E1, Axis::E2, Axis::E4};

struct KernelPhase {
  double theta = 0.0;
};

KernelPhase kernel_phase(const LctParams& p, double t, double w);
/// (2 pi |b|)^(-1/2)
double kernel_amplitude(const LctParams& p);
Octonion kernel_eval(const LctParams& p, Axis axis, double t, double w);
Octonion kernel_inverse_eval(const LctParams& p, Axis axis, double t, double w);

/// Uniformly sampled 1D line of octonion values.
struct FieldSlice1D {
  double origin = 0.0;
  double spacing = 1.0;
  std::vector<Octonion> values;

  double point(std::size_t i) const { return origin + spacing * static_cast<double>(i); }
};

/// Applies the b == 0 kernel: out(w) = sqrt|d| exp(axis (c d / 2) w^2) f(d w).
/// Every d*w must coincide with an input sample to within 1e-9 spacing.
/// The chirp multiplies from the right, matching the kernel's place in the
/// transform integrand.
FieldSlice1D degenerate_resample(const LctParams& p, const FieldSlice1D& f, Axis axis,
                                 double out_origin, double out_spacing, std::size_t out_count);

}  // namespace woct
