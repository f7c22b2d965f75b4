#pragma once

// Test signal and window generators.

#include <array>
#include <cstdint>
#include <string>

#include "woct/grid.hpp"

namespace woct {

enum class SignalKind { Gaussian, ChirpedGaussian, Boxcar, RandomOctonion, File };

std::string to_string(SignalKind kind);
/// Throws bad-spec for unknown names.
SignalKind signal_kind_from_string(const std::string& name);

struct SignalSpec {
  SignalKind kind = SignalKind::Gaussian;
  double amplitude = 1.0;
  std::array<double, 3> center{};
  /// Gaussian sigma per axis; boxcar half-widths.
  std::array<double, 3> widths{1.0, 1.0, 1.0};
  /// Quadratic phase rate per axis for chirped-gaussian.
  std::array<double, 3> chirp{};
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string path;

  /// Throws bad-spec on non-positive widths or a random kind without a seed.
  void validate() const;
};

/// gaussian:         A exp(-sum (t_k - c_k)^2 / (2 sigma_k^2)), real.
/// chirped-gaussian: ((g e^{e1 r1 u1^2}) e^{e2 r2 u2^2}) e^{e4 r3 u3^2}, u = t - c.
/// boxcar:           A inside |t_k - c_k| <= w_k, else 0.
/// random-octonion:  eight N(0,1) components from mt19937_64(seed), times the Gaussian envelope.
/// file:             read_field(path); its grid must equal `grid`.
SampledField3D generate_signal(const SignalSpec& spec, const Grid3D& grid);

/// Symmetric cell-centred grid with n points per axis whose outer cell edges
/// sit at +-coverage * sigma.
Grid3D covering_grid(std::size_t n, double sigma, double coverage = 6.0);

}  // namespace woct
