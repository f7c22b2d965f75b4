#include "woct/sweep.hpp"

#include <cmath>
#include <sstream>

#include "woct/error.hpp"

namespace woct::detail {

namespace {

RightUnit build_right_unit(Axis axis) {
  RightUnit u;
  const Octonion e = Octonion::basis(static_cast<std::size_t>(axis));
  for (std::size_t i = 0; i < 8; ++i) {
    const Octonion prod = Octonion::basis(i) * e;
    for (std::size_t k = 0; k < 8; ++k) {
      if (prod[k] != 0.0) {
        u.src[k] = static_cast<int>(i);
        u.sign[k] = prod[k];
      }
    }
  }
  return u;
}

Stage kernel_stage(int ax, const LctParams& p, const GridAxis& in, const GridAxis& out,
                   bool inverse) {
  Stage st;
  st.axis_index = ax;
  st.unit = kAxisOf[ax];
  st.n_in = in.count;
  st.n_out = out.count;
  st.c.resize(in.count * out.count);
  st.s.resize(in.count * out.count);
  const double w = kernel_amplitude(p) * in.spacing;
  for (std::size_t i = 0; i < in.count; ++i) {
    for (std::size_t o = 0; o < out.count; ++o) {
      // Forward maps t -> w; inverse maps w -> t with the phase's arguments swapped back.
      const double theta = inverse ? kernel_phase(p, out.point(o), in.point(i)).theta
                                   : kernel_phase(p, in.point(i), out.point(o)).theta;
      st.c[i * out.count + o] = w * std::cos(theta);
      st.s[i * out.count + o] = (inverse ? -w : w) * std::sin(theta);
    }
  }
  return st;
}

// b == 0: out(x) = sqrt|d| in(d x) exp(e c d x^2 / 2).
Stage resample_stage(int ax, const LctParams& p, const GridAxis& in, const GridAxis& out) {
  if (p.d == 0.0) throw Error(ErrorKind::DegenerateParams, "b == 0 requires d != 0");
  Stage st;
  st.axis_index = ax;
  st.unit = kAxisOf[ax];
  st.n_in = in.count;
  st.n_out = out.count;
  st.resample = true;
  const double amp = std::sqrt(std::abs(p.d));
  for (std::size_t o = 0; o < out.count; ++o) {
    const double x = out.point(o);
    const double pos = (p.d * x - in.origin) / in.spacing;
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) > 1e-9 || nearest < 0.0 ||
        nearest >= static_cast<double>(in.count)) {
      std::ostringstream msg;
      msg << "axis " << ax + 1 << ": d*x = " << p.d * x << " is not an input sample";
      throw Error(ErrorKind::GridIncompatible, msg.str());
    }
    const double phi = 0.5 * p.c * p.d * x * x;
    st.src.push_back(static_cast<std::size_t>(nearest));
    st.rc.push_back(amp * std::cos(phi));
    st.rs.push_back(amp * std::sin(phi));
  }
  return st;
}

void check_params(const LctParams3& params) {
  for (const auto& p : params) {
    if (!p.unimodular()) throw Error(ErrorKind::NotUnimodular, "LCT matrix must have det 1");
  }
}

}  // namespace

const RightUnit& right_unit(Axis axis) {
  static const RightUnit e1 = build_right_unit(Axis::E1);
  static const RightUnit e2 = build_right_unit(Axis::E2);
  static const RightUnit e4 = build_right_unit(Axis::E4);
  switch (axis) {
    case Axis::E1: return e1;
    case Axis::E2: return e2;
    case Axis::E4: break;
  }
  return e4;
}

std::vector<Stage> forward_stages(const LctParams3& params, const Grid3D& t_grid,
                                  const Grid3D& omega_grid) {
  check_params(params);
  std::vector<Stage> stages;
  for (int ax = 0; ax < 3; ++ax) {
    const auto& p = params[ax];
    stages.push_back(p.degenerate()
                         ? resample_stage(ax, p, t_grid.axes[ax], omega_grid.axes[ax])
                         : kernel_stage(ax, p, t_grid.axes[ax], omega_grid.axes[ax], false));
  }
  return stages;
}

std::vector<Stage> inverse_stages(const LctParams3& params, const Grid3D& omega_grid,
                                  const Grid3D& t_grid, KernelOrder order) {
  check_params(params);
  std::vector<Stage> stages;
  for (int n = 0; n < 3; ++n) {
    const int ax = order == KernelOrder::Reversed ? 2 - n : n;
    const auto& p = params[ax];
    stages.push_back(p.degenerate()
                         ? resample_stage(ax, p.inverse(), omega_grid.axes[ax], t_grid.axes[ax])
                         : kernel_stage(ax, p, omega_grid.axes[ax], t_grid.axes[ax], true));
  }
  return stages;
}

std::vector<Octonion> apply_stage(const std::vector<Octonion>& in, std::array<std::size_t, 3>& dims,
                                  const Stage& st) {
  const int a = st.axis_index;
  std::size_t outer = 1;
  for (int d = 0; d < a; ++d) outer *= dims[d];
  std::size_t inner = 1;
  for (int d = a + 1; d < 3; ++d) inner *= dims[d];
  const std::size_t n_in = dims[a];
  const std::size_t n_out = st.n_out;

  std::vector<Octonion> out(outer * n_out * inner);
  const long total = static_cast<long>(outer * n_out);

#pragma omp parallel for schedule(static)
  for (long ow = 0; ow < total; ++ow) {
    const std::size_t o = static_cast<std::size_t>(ow) / n_out;
    const std::size_t w = static_cast<std::size_t>(ow) % n_out;
    Octonion* dst = &out[(o * n_out + w) * inner];
    if (st.resample) {
      const Octonion* src = &in[(o * n_in + st.src[w]) * inner];
      for (std::size_t r = 0; r < inner; ++r) dst[r] = mul_right(src[r], st.rc[w], st.rs[w], st.unit);
      continue;
    }
    for (std::size_t t = 0; t < n_in; ++t) {
      const double c = st.c[t * n_out + w];
      const double s = st.s[t * n_out + w];
      const Octonion* src = &in[(o * n_in + t) * inner];
      for (std::size_t r = 0; r < inner; ++r) dst[r] += mul_right(src[r], c, s, st.unit);
    }
  }
  dims[a] = n_out;
  return out;
}

std::vector<Octonion> run_stages(const std::vector<Octonion>& in, std::array<std::size_t, 3> dims,
                                 const std::vector<Stage>& stages) {
  std::vector<Octonion> cur = in;
  for (const auto& st : stages) cur = apply_stage(cur, dims, st);
  return cur;
}

std::array<KernelTable1D, 3> inverse_kernel_tables(const LctParams3& params,
                                                   const Grid3D& omega_grid, const Grid3D& t_grid) {
  std::array<KernelTable1D, 3> tabs;
  for (int ax = 0; ax < 3; ++ax) {
    const auto& tw = t_grid.axes[ax];
    const auto& ww = omega_grid.axes[ax];
    tabs[ax].n_w = ww.count;
    tabs[ax].k.resize(tw.count * ww.count);
    for (std::size_t t = 0; t < tw.count; ++t)
      for (std::size_t w = 0; w < ww.count; ++w)
        tabs[ax].k[t * ww.count + w] = kernel_inverse_eval(params[ax], kAxisOf[ax], tw.point(t), ww.point(w));
  }
  return tabs;
}

}  // namespace woct::detail
