#include "woct/signals.hpp"

#include <cmath>
#include <random>

#include "woct/error.hpp"
#include "woct/field_io.hpp"
#include "woct/lct_kernel.hpp"

namespace woct {

std::string to_string(SignalKind kind) {
  switch (kind) {
    case SignalKind::Gaussian: return "gaussian";
    case SignalKind::ChirpedGaussian: return "chirped-gaussian";
    case SignalKind::Boxcar: return "boxcar";
    case SignalKind::RandomOctonion: return "random-octonion";
    case SignalKind::File: return "file";
  }
  return "gaussian";
}

SignalKind signal_kind_from_string(const std::string& name) {
  for (auto k : {SignalKind::Gaussian, SignalKind::ChirpedGaussian, SignalKind::Boxcar,
                 SignalKind::RandomOctonion, SignalKind::File}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorKind::BadSpec, "unknown signal kind '" + name + "'");
}

void SignalSpec::validate() const {
  if (kind == SignalKind::File) {
    if (path.empty()) throw Error(ErrorKind::BadSpec, "file signal needs a path");
    return;
  }
  for (double w : widths) {
    if (!(w > 0.0)) throw Error(ErrorKind::BadSpec, "signal widths must be positive");
  }
  if (kind == SignalKind::RandomOctonion && !has_seed) {
    throw Error(ErrorKind::BadSpec, "random-octonion signal needs a seed");
  }
}

SampledField3D generate_signal(const SignalSpec& spec, const Grid3D& grid) {
  spec.validate();
  if (spec.kind == SignalKind::File) {
    SampledField3D f = read_field(spec.path);
    if (!(f.grid == grid)) throw Error(ErrorKind::GridMismatch, spec.path + ": grid differs from the configured grid");
    return f;
  }
  SampledField3D f(grid);
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal;
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const auto t = grid.point(q);
    std::array<double, 3> u{};
    double e = 0.0;
    bool inside = true;
    for (int a = 0; a < 3; ++a) {
      u[a] = t[a] - spec.center[a];
      e += u[a] * u[a] / (2.0 * spec.widths[a] * spec.widths[a]);
      inside = inside && std::abs(u[a]) <= spec.widths[a];
    }
    const double env = spec.amplitude * std::exp(-e);
    switch (spec.kind) {
      case SignalKind::Gaussian:
        f.values[q] = Octonion(env);
        break;
      case SignalKind::ChirpedGaussian: {
        Octonion v(env);
        for (int a = 0; a < 3; ++a) v = v * oct_exp_axis(kAxisOf[a], spec.chirp[a] * u[a] * u[a]);
        f.values[q] = v;
        break;
      }
      case SignalKind::Boxcar:
        f.values[q] = Octonion(inside ? spec.amplitude : 0.0);
        break;
      case SignalKind::RandomOctonion: {
        Octonion v;
        for (std::size_t k = 0; k < 8; ++k) v[k] = normal(rng) * env;
        f.values[q] = v;
        break;
      }
      case SignalKind::File:
        break;
    }
  }
  return f;
}

Grid3D covering_grid(std::size_t n, double sigma, double coverage) {
  return Grid3D::symmetric(n, 2.0 * coverage * sigma / static_cast<double>(n));
}

}  // namespace woct
