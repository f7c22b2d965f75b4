#include "woct/reference.hpp"

#include <cmath>
#include <numbers>

namespace woct::reference {

namespace {

Octonion forward_term(const Octonion& x, const LctParams3& p, const std::array<double, 3>& t,
                      const std::array<double, 3>& w) {
  return ((x * kernel_eval(p[0], Axis::E1, t[0], w[0])) * kernel_eval(p[1], Axis::E2, t[1], w[1])) *
         kernel_eval(p[2], Axis::E4, t[2], w[2]);
}

Octonion inverse_term(const Octonion& x, const LctParams3& p, const std::array<double, 3>& t,
                      const std::array<double, 3>& w, KernelOrder order) {
  const Octonion k1 = kernel_inverse_eval(p[0], Axis::E1, t[0], w[0]);
  const Octonion k2 = kernel_inverse_eval(p[1], Axis::E2, t[1], w[1]);
  const Octonion k3 = kernel_inverse_eval(p[2], Axis::E4, t[2], w[2]);
  return order == KernelOrder::Reversed ? ((x * k3) * k2) * k1 : ((x * k1) * k2) * k3;
}

}  // namespace

SampledField3D oft_forward(const SampledField3D& f, const Grid3D& omega_grid) {
  SampledField3D out(omega_grid);
  for (std::size_t o = 0; o < omega_grid.size(); ++o) {
    const auto nu = omega_grid.point(o);
    Octonion acc;
    for (std::size_t q = 0; q < f.grid.size(); ++q) {
      const auto t = f.grid.point(q);
      const double phi = 2.0 * std::numbers::pi * (t[0] * nu[0] + t[1] * nu[1] + t[2] * nu[2]);
      acc += ((f.values[q] * oct_exp_axis(Axis::E1, -phi)) * oct_exp_axis(Axis::E2, -phi)) *
             oct_exp_axis(Axis::E4, -phi);
    }
    out.values[o] = acc * f.grid.cell_volume();
  }
  return out;
}

SampledField3D oclct_forward(const SampledField3D& f, const LctParams3& params,
                             const Grid3D& omega_grid) {
  SampledField3D out(omega_grid);
  for (std::size_t o = 0; o < omega_grid.size(); ++o) {
    const auto w = omega_grid.point(o);
    Octonion acc;
    for (std::size_t q = 0; q < f.grid.size(); ++q) acc += forward_term(f.values[q], params, f.grid.point(q), w);
    out.values[o] = acc * f.grid.cell_volume();
  }
  return out;
}

SampledField3D oclct_inverse(const SampledField3D& spectrum, const LctParams3& params,
                             const Grid3D& t_grid, KernelOrder order) {
  SampledField3D out(t_grid);
  for (std::size_t q = 0; q < t_grid.size(); ++q) {
    const auto t = t_grid.point(q);
    Octonion acc;
    for (std::size_t o = 0; o < spectrum.grid.size(); ++o)
      acc += inverse_term(spectrum.values[o], params, t, spectrum.grid.point(o), order);
    out.values[q] = acc * spectrum.grid.cell_volume();
  }
  return out;
}

WoclctResult woclct_forward(const SampledField3D& f, const WindowSpec& window,
                            const LctParams3& params, const Grid3D& omega_grid,
                            const Grid3D& mu_grid) {
  WoclctResult out(omega_grid, mu_grid);
  for (std::size_t m = 0; m < mu_grid.size(); ++m) {
    const SampledField3D psi = shifted_window(window, f.grid, mu_grid.point(m));
    for (std::size_t o = 0; o < omega_grid.size(); ++o) {
      const auto w = omega_grid.point(o);
      Octonion acc;
      for (std::size_t q = 0; q < f.grid.size(); ++q)
        acc += forward_term(f.values[q] * psi.values[q].conj(), params, f.grid.point(q), w);
      out.at(o, m) = acc * f.grid.cell_volume();
    }
  }
  return out;
}

SampledField3D woclct_inverse(const WoclctResult& g, const WindowSpec& window,
                              const LctParams3& params, const Grid3D& t_grid, KernelOrder order) {
  SampledField3D out(t_grid);
  const double scale = g.cell_volume() / window.norm2();
  for (std::size_t m = 0; m < g.mu_grid.size(); ++m) {
    const SampledField3D psi = shifted_window(window, t_grid, g.mu_grid.point(m));
    for (std::size_t q = 0; q < t_grid.size(); ++q) {
      const auto t = t_grid.point(q);
      Octonion acc;
      for (std::size_t o = 0; o < g.omega_grid.size(); ++o) {
        const auto w = g.omega_grid.point(o);
        if (order == KernelOrder::Reversed) {
          acc += inverse_term(g.at(o, m), params, t, w, order) * psi.values[q];
        } else {
          const Octonion k = (kernel_inverse_eval(params[0], Axis::E1, t[0], w[0]) *
                              kernel_inverse_eval(params[1], Axis::E2, t[1], w[1])) *
                             kernel_inverse_eval(params[2], Axis::E4, t[2], w[2]);
          acc += g.at(o, m) * (k * psi.values[q]);
        }
      }
      out.values[q] += acc * scale;
    }
  }
  return out;
}

}  // namespace woct::reference
