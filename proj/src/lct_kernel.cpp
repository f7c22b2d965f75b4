#include "woct/lct_kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "woct/error.hpp"

namespace woct {

LctParams LctParams::make(double a, double b, double c, double d) {
  const LctParams p{a, b, c, d};
  if (!p.unimodular()) {
    std::ostringstream msg;
    msg << "det([" << a << ' ' << b << "; " << c << ' ' << d << "]) = " << p.det() << ", expected 1";
    throw Error(ErrorKind::NotUnimodular, msg.str());
  }
  return p;
}

bool LctParams::unimodular() const { return std::abs(det() - 1.0) <= kUnimodularTol; }

namespace {

void require_nondegenerate(const LctParams& p) {
  if (p.degenerate()) throw Error(ErrorKind::DegenerateParams, "kernel requires b != 0");
}

}  // namespace

KernelPhase kernel_phase(const LctParams& p, double t, double w) {
  require_nondegenerate(p);
  const double inv2b = 0.5 / p.b;
  return {p.a * t * t * inv2b - t * w / p.b + p.d * w * w * inv2b - std::numbers::pi / 2.0};
}

double kernel_amplitude(const LctParams& p) {
  require_nondegenerate(p);
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * std::abs(p.b));
}

Octonion kernel_eval(const LctParams& p, Axis axis, double t, double w) {
  return kernel_amplitude(p) * oct_exp_axis(axis, kernel_phase(p, t, w).theta);
}

Octonion kernel_inverse_eval(const LctParams& p, Axis axis, double t, double w) {
  return kernel_amplitude(p) * oct_exp_axis(axis, -kernel_phase(p, t, w).theta);
}

FieldSlice1D degenerate_resample(const LctParams& p, const FieldSlice1D& f, Axis axis,
                                 double out_origin, double out_spacing, std::size_t out_count) {
  if (!p.degenerate()) throw Error(ErrorKind::DegenerateParams, "resampling applies to b == 0 only");
  if (p.d == 0.0) throw Error(ErrorKind::DegenerateParams, "b == 0 requires d != 0");

  FieldSlice1D out{out_origin, out_spacing, {}};
  out.values.reserve(out_count);
  const double amp = std::sqrt(std::abs(p.d));
  for (std::size_t i = 0; i < out_count; ++i) {
    const double w = out.point(i);
    const double pos = (p.d * w - f.origin) / f.spacing;
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) > 1e-9 || nearest < 0.0 ||
        nearest >= static_cast<double>(f.values.size())) {
      std::ostringstream msg;
      msg << "d*w = " << p.d * w << " is not an input sample";
      throw Error(ErrorKind::GridIncompatible, msg.str());
    }
    const Octonion chirp = oct_exp_axis(axis, 0.5 * p.c * p.d * w * w);
    out.values.push_back(amp * (f.values[static_cast<std::size_t>(nearest)] * chirp));
  }
  return out;
}

}  // namespace woct
