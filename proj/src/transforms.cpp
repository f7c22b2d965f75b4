#include "woct/transforms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "woct/error.hpp"
#include "woct/sweep.hpp"

namespace woct {

namespace {

void require_same_spacing(const Grid3D& a, const Grid3D& b, const char* what) {
  for (int ax = 0; ax < 3; ++ax) {
    if (std::abs(a.axes[ax].spacing - b.axes[ax].spacing) > 1e-12 * a.axes[ax].spacing) {
      std::ostringstream msg;
      msg << what << ": axis " << ax + 1 << " spacing " << b.axes[ax].spacing << " differs from "
          << a.axes[ax].spacing;
      throw Error(ErrorKind::GridIncompatible, msg.str());
    }
  }
}

// Window index offset along each axis for Psi(t - mu): k = i + offset.
std::array<long, 3> window_offsets(const Grid3D& t_grid, const Grid3D& w_grid,
                                   const std::array<double, 3>& mu) {
  std::array<long, 3> off{};
  for (int ax = 0; ax < 3; ++ax) {
    const double h = t_grid.axes[ax].spacing;
    const double s = (t_grid.axes[ax].origin - mu[ax] - w_grid.axes[ax].origin) / h;
    const double r = std::round(s);
    if (std::abs(s - r) > 1e-9) {
      std::ostringstream msg;
      msg << "shift mu" << ax + 1 << " = " << mu[ax] << " is not an integer number of samples";
      throw Error(ErrorKind::MuOffGrid, msg.str());
    }
    off[ax] = static_cast<long>(r);
  }
  return off;
}

}  // namespace

SampledField3D oft_forward(const SampledField3D& f, const Grid3D& omega_grid) {
  SampledField3D out(omega_grid);
  const double dv = f.grid.cell_volume();
  const std::size_t n_out = omega_grid.size();
  const std::size_t n_in = f.grid.size();

#pragma omp parallel for schedule(static)
  for (std::size_t o = 0; o < n_out; ++o) {
    const auto nu = omega_grid.point(o);
    Octonion acc;
    for (std::size_t q = 0; q < n_in; ++q) {
      const auto t = f.grid.point(q);
      const double phi = -2.0 * std::numbers::pi * (t[0] * nu[0] + t[1] * nu[1] + t[2] * nu[2]);
      const double c = std::cos(phi);
      const double s = std::sin(phi);
      Octonion x = detail::mul_right(f.values[q], c, s, Axis::E1);
      x = detail::mul_right(x, c, s, Axis::E2);
      acc += detail::mul_right(x, c, s, Axis::E4);
    }
    out.values[o] = acc * dv;
  }
  return out;
}

SampledField3D oclct_forward(const SampledField3D& f, const LctParams3& params,
                             const Grid3D& omega_grid) {
  const auto stages = detail::forward_stages(params, f.grid, omega_grid);
  return {omega_grid, detail::run_stages(f.values, f.grid.counts(), stages)};
}

SampledField3D oclct_inverse(const SampledField3D& spectrum, const LctParams3& params,
                             const Grid3D& t_grid, KernelOrder order) {
  const auto stages = detail::inverse_stages(params, spectrum.grid, t_grid, order);
  return {t_grid, detail::run_stages(spectrum.values, spectrum.grid.counts(), stages)};
}

SampledField3D shifted_window(const WindowSpec& window, const Grid3D& t_grid,
                              const std::array<double, 3>& mu) {
  const Grid3D& wg = window.grid();
  require_same_spacing(t_grid, wg, "window");
  const auto off = window_offsets(t_grid, wg, mu);
  SampledField3D out(t_grid);
  const auto [n1, n2, n3] = t_grid.counts();
  const auto [m1, m2, m3] = wg.counts();
  for (std::size_t i = 0; i < n1; ++i) {
    const long wi = static_cast<long>(i) + off[0];
    if (wi < 0 || wi >= static_cast<long>(m1)) continue;
    for (std::size_t j = 0; j < n2; ++j) {
      const long wj = static_cast<long>(j) + off[1];
      if (wj < 0 || wj >= static_cast<long>(m2)) continue;
      for (std::size_t k = 0; k < n3; ++k) {
        const long wk = static_cast<long>(k) + off[2];
        if (wk < 0 || wk >= static_cast<long>(m3)) continue;
        out.at(i, j, k) = window.field().at(wi, wj, wk);
      }
    }
  }
  return out;
}

SampledField3D windowed_product(const SampledField3D& f, const WindowSpec& window,
                                const std::array<double, 3>& mu) {
  SampledField3D out = shifted_window(window, f.grid, mu);
  for (std::size_t q = 0; q < out.values.size(); ++q) {
    out.values[q] = f.values[q] * out.values[q].conj();
  }
  return out;
}

WoclctResult woclct_forward(const SampledField3D& f, const WindowSpec& window,
                            const LctParams3& params, const Grid3D& omega_grid,
                            const Grid3D& mu_grid) {
  WoclctResult out(omega_grid, mu_grid);
  const auto stages = detail::forward_stages(params, f.grid, omega_grid);
  const std::size_t n_mu = mu_grid.size();
  const std::size_t n_omega = omega_grid.size();

  // Validate every shift before entering the parallel region.
  for (std::size_t m = 0; m < n_mu; ++m) {
    require_same_spacing(f.grid, window.grid(), "window");
    window_offsets(f.grid, window.grid(), mu_grid.point(m));
  }

#pragma omp parallel for schedule(dynamic)
  for (std::size_t m = 0; m < n_mu; ++m) {
    const SampledField3D prod = windowed_product(f, window, mu_grid.point(m));
    const auto spec = detail::run_stages(prod.values, prod.grid.counts(), stages);
    std::copy(spec.begin(), spec.end(), out.values.begin() + static_cast<long>(m * n_omega));
  }
  return out;
}

SampledField3D woclct_inverse(const WoclctResult& g, const WindowSpec& window,
                              const LctParams3& params, const Grid3D& t_grid, KernelOrder order) {
  const std::size_t n_mu = g.mu_grid.size();
  const std::size_t n_omega = g.omega_grid.size();
  const std::size_t n_t = t_grid.size();
  for (std::size_t m = 0; m < n_mu; ++m) {
    require_same_spacing(t_grid, window.grid(), "window");
    window_offsets(t_grid, window.grid(), g.mu_grid.point(m));
  }

  SampledField3D out(t_grid);
  const double scale = g.mu_grid.cell_volume() / window.norm2();

  if (order == KernelOrder::Reversed) {
    const auto stages = detail::inverse_stages(params, g.omega_grid, t_grid, order);
#pragma omp parallel
    {
      std::vector<Octonion> acc(n_t);
#pragma omp for schedule(dynamic)
      for (std::size_t m = 0; m < n_mu; ++m) {
        const std::vector<Octonion> block(g.values.begin() + static_cast<long>(m * n_omega),
                                          g.values.begin() + static_cast<long>((m + 1) * n_omega));
        const auto local = detail::run_stages(block, g.omega_grid.counts(), stages);
        const SampledField3D psi = shifted_window(window, t_grid, g.mu_grid.point(m));
        for (std::size_t q = 0; q < n_t; ++q) acc[q] += local[q] * psi.values[q];
      }
#pragma omp critical
      for (std::size_t q = 0; q < n_t; ++q) out.values[q] += acc[q];
    }
    for (auto& v : out.values) v *= scale;
    return out;
  }

  // Forward order: G(w, mu) * (K^-1(t, w) * Psi(t - mu)) with K^-1 = (k1^-1 k2^-1) k3^-1.
  const auto kinv = detail::inverse_kernel_tables(params, g.omega_grid, t_grid);
  std::vector<SampledField3D> psis;
  psis.reserve(n_mu);
  for (std::size_t m = 0; m < n_mu; ++m) psis.push_back(shifted_window(window, t_grid, g.mu_grid.point(m)));
  const double dw = g.omega_grid.cell_volume();

#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < n_t; ++q) {
    const auto ti = t_grid.unravel(q);
    Octonion acc;
    for (std::size_t m = 0; m < n_mu; ++m) {
      const Octonion& psi = psis[m].values[q];
      if (psi.norm2() == 0.0) continue;
      for (std::size_t o = 0; o < n_omega; ++o) {
        const auto wi = g.omega_grid.unravel(o);
        const Octonion k = (kinv[0].at(ti[0], wi[0]) * kinv[1].at(ti[1], wi[1])) *
                           kinv[2].at(ti[2], wi[2]);
        acc += g.at(o, m) * (k * psi);
      }
    }
    out.values[q] = acc * (dw * scale);
  }
  return out;
}

}  // namespace woct
