#include "woct/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "woct/error.hpp"

namespace woct {

namespace {

void require_real(const SampledField3D& f, const WindowSpec& w, const char* what) {
  if (!f.is_real() || !w.field().is_real()) {
    throw Error(ErrorKind::NonRealInput, std::string(what) + " needs real-valued f and window");
  }
}

double norm_of(const std::vector<Octonion>& v) {
  double s = 0.0;
  for (const auto& x : v) s += x.norm2();
  return std::sqrt(s);
}

PropertyResidual make_residual(std::string name, const std::vector<Octonion>& lhs,
                               const std::vector<Octonion>& rhs, double tolerance) {
  PropertyResidual r;
  r.name = std::move(name);
  r.lhs_norm = norm_of(lhs);
  r.rhs_norm = norm_of(rhs);
  r.residual = relative_l2(lhs, rhs);
  r.tolerance = tolerance;
  r.passed = r.residual <= tolerance;
  return r;
}

// table[i * n_out + o] = amp * h * T(theta(t_i, w_o))
std::vector<double> trig_table(const LctParams& p, Trig trig, const GridAxis& t, const GridAxis& w) {
  std::vector<double> tab(t.count * w.count);
  const double scale = kernel_amplitude(p) * t.spacing;
  for (std::size_t i = 0; i < t.count; ++i) {
    for (std::size_t o = 0; o < w.count; ++o) {
      const double th = kernel_phase(p, t.point(i), w.point(o)).theta;
      tab[i * w.count + o] = scale * (trig == Trig::Cos ? std::cos(th) : std::sin(th));
    }
  }
  return tab;
}

// Contracts axis `a` of a real 3D array against a (n_in x n_out) table.
std::vector<double> sweep_real(const std::vector<double>& in, std::array<std::size_t, 3>& dims,
                               int a, const std::vector<double>& tab, std::size_t n_out) {
  std::size_t outer = 1;
  for (int d = 0; d < a; ++d) outer *= dims[d];
  std::size_t inner = 1;
  for (int d = a + 1; d < 3; ++d) inner *= dims[d];
  const std::size_t n_in = dims[a];
  std::vector<double> out(outer * n_out * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t t = 0; t < n_in; ++t)
      for (std::size_t w = 0; w < n_out; ++w) {
        const double k = tab[t * n_out + w];
        const double* src = &in[(o * n_in + t) * inner];
        double* dst = &out[(o * n_out + w) * inner];
        for (std::size_t r = 0; r < inner; ++r) dst[r] += k * src[r];
      }
  dims[a] = n_out;
  return out;
}

// Index of the negated point on a symmetric grid.
std::size_t mirror(const Grid3D& g, std::size_t linear) {
  const auto [i, j, k] = g.unravel(linear);
  return g.index(g.axes[0].count - 1 - i, g.axes[1].count - 1 - j, g.axes[2].count - 1 - k);
}

void require_symmetric(const Grid3D& g, const char* what) {
  if (!g.is_symmetric()) {
    throw Error(ErrorKind::AsymmetricGrid, std::string(what) + " grid is not negation-symmetric");
  }
}

}  // namespace

TrigPattern TrigPattern::from_index(int index) {
  if (index < 0 || index > 7) throw Error(ErrorKind::OutOfRange, "trig pattern index must be 0..7");
  TrigPattern p;
  for (int k = 0; k < 3; ++k) p.axes[k] = (index >> k) & 1 ? Trig::Sin : Trig::Cos;
  return p;
}

std::array<TrigPattern, 8> TrigPattern::all() {
  std::array<TrigPattern, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = from_index(i);
  return out;
}

int TrigPattern::index() const {
  int idx = 0;
  for (int k = 0; k < 3; ++k) idx |= (axes[k] == Trig::Sin ? 1 : 0) << k;
  return idx;
}

std::string TrigPattern::name() const {
  std::string s;
  for (auto t : axes) s += t == Trig::Cos ? 'e' : 'o';
  return s;
}

TrigPattern TrigPattern::flipped(int axis) const {
  TrigPattern p = *this;
  p.axes[axis] = p.axes[axis] == Trig::Cos ? Trig::Sin : Trig::Cos;
  return p;
}

WoclctResult component_transform(const SampledField3D& f, const WindowSpec& window,
                                 const LctParams3& params, const TrigPattern& pattern,
                                 const Grid3D& omega_grid, const Grid3D& mu_grid) {
  require_real(f, window, "component_transform");
  for (const auto& p : params) {
    if (p.degenerate()) throw Error(ErrorKind::DegenerateParams, "component transforms need b != 0");
  }
  std::array<std::vector<double>, 3> tabs;
  for (int a = 0; a < 3; ++a) {
    tabs[a] = trig_table(params[a], pattern.axes[a], f.grid.axes[a], omega_grid.axes[a]);
  }
  // Validates the mu shifts before the parallel region.
  for (std::size_t m = 0; m < mu_grid.size(); ++m) shifted_window(window, f.grid, mu_grid.point(m));

  WoclctResult out(omega_grid, mu_grid);
  const std::size_t n_omega = omega_grid.size();
  const long n_mu = static_cast<long>(mu_grid.size());

#pragma omp parallel for schedule(dynamic)
  for (long m = 0; m < n_mu; ++m) {
    const SampledField3D psi = shifted_window(window, f.grid, mu_grid.point(m));
    std::vector<double> cur(f.values.size());
    for (std::size_t q = 0; q < cur.size(); ++q) cur[q] = f.values[q].real() * psi.values[q].real();
    auto dims = f.grid.counts();
    for (int a = 0; a < 3; ++a) cur = sweep_real(cur, dims, a, tabs[a], omega_grid.axes[a].count);
    for (std::size_t o = 0; o < n_omega; ++o) out.at(o, m) = Octonion(cur[o]);
  }
  return out;
}

PropertyResidual verify_reassembly(const SampledField3D& f, const WindowSpec& window,
                                   const LctParams3& params, const Grid3D& omega_grid,
                                   const Grid3D& mu_grid, double tolerance) {
  require_real(f, window, "reassembly");
  const WoclctResult full = woclct_forward(f, window, params, omega_grid, mu_grid);
  std::vector<Octonion> sum(full.values.size());
  for (const auto& pat : TrigPattern::all()) {
    const WoclctResult part = component_transform(f, window, params, pat, omega_grid, mu_grid);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i][pat.index()] = part.values[i].real();
  }
  return make_residual("reassembly", sum, full.values, tolerance);
}

PropertyResidual verify_parity(const SampledField3D& f, const WindowSpec& window,
                               const LctParams3& params, const Grid3D& omega_grid,
                               const Grid3D& mu_grid, Variant variant, double tolerance) {
  require_symmetric(f.grid, "signal");
  require_symmetric(window.grid(), "window");
  require_symmetric(omega_grid, "omega");
  require_symmetric(mu_grid, "mu");

  const WindowSpec pw(parity_reflect(window.field()));
  const WoclctResult lhs = woclct_forward(parity_reflect(f), pw, params, omega_grid, mu_grid);
  const WoclctResult g = woclct_forward(f, window, params, omega_grid, mu_grid);

  const double sign = variant == Variant::Nominal ? -1.0 : 1.0;
  std::vector<Octonion> rhs(g.values.size());
  for (std::size_t m = 0; m < mu_grid.size(); ++m) {
    const std::size_t mm = mirror(mu_grid, m);
    for (std::size_t o = 0; o < omega_grid.size(); ++o) {
      rhs[g.index(o, m)] = g.at(mirror(omega_grid, o), mm) * sign;
    }
  }
  PropertyResidual r = make_residual(variant == Variant::Nominal ? "parity" : "parity-even",
                                     lhs.values, rhs, tolerance);
  r.informational = variant == Variant::Exact;
  return r;
}

PropertyResidual verify_shift(const SampledField3D& f, const WindowSpec& window,
                              const LctParams3& params, const Grid3D& omega_grid,
                              const Grid3D& mu_grid, int axis, double s, double tolerance) {
  if (axis < 0 || axis > 2) throw Error(ErrorKind::OutOfRange, "shift axis must be 0, 1 or 2");
  require_real(f, window, "shift");
  const double h = f.grid.axes[axis].spacing;
  if (std::abs(s / h - std::round(s / h)) > 1e-9) {
    std::ostringstream msg;
    msg << "shift " << s << " is not a multiple of spacing " << h;
    throw Error(ErrorKind::OffGridShift, msg.str());
  }
  const LctParams& p = params[axis];

  std::array<double, 3> by{};
  by[axis] = s;
  const SampledField3D shifted(f.grid.translated(by), f.values);
  const WoclctResult lhs = woclct_forward(shifted, window, params, omega_grid, mu_grid);

  std::array<double, 3> wby{};
  wby[axis] = -s * p.a;
  std::array<double, 3> mby{};
  mby[axis] = -s;
  const Grid3D w2 = omega_grid.translated(wby);
  const Grid3D rho = mu_grid.translated(mby);

  std::array<WoclctResult, 8> comp;
  for (const auto& pat : TrigPattern::all()) {
    comp[pat.index()] = component_transform(f, window, params, pat, w2, rho);
  }

  std::vector<Octonion> rhs(lhs.values.size());
  for (std::size_t m = 0; m < mu_grid.size(); ++m) {
    for (std::size_t o = 0; o < omega_grid.size(); ++o) {
      const double w = omega_grid.point(o)[axis];
      const double phi = s * w * p.c - p.a * p.c * s * s / 2.0;
      const double cp = std::cos(phi);
      const double sp = std::sin(phi);
      Octonion v;
      for (const auto& pat : TrigPattern::all()) {
        const int b = pat.index();
        const double g = comp[b].at(o, m).real();
        const double flip = comp[pat.flipped(axis).index()].at(o, m).real();
        const double delta = pat.axes[axis] == Trig::Cos ? flip : -flip;
        v[b] = cp * g - sp * delta;
      }
      rhs[lhs.index(o, m)] = v;
    }
  }
  std::ostringstream name;
  name << "shift-axis" << axis + 1;
  return make_residual(name.str(), lhs.values, rhs, tolerance);
}

PropertyResidual verify_oclct_oft_relation(const SampledField3D& f, const Grid3D& omega_grid,
                                           Variant variant, double tolerance) {
  const LctParams3 params{LctParams::fourier(), LctParams::fourier(), LctParams::fourier()};
  const SampledField3D lhs = oclct_forward(f, params, omega_grid);
  const double pre = std::pow(2.0 * std::numbers::pi, -1.5);
  const double tau = 2.0 * std::numbers::pi;
  std::vector<Octonion> rhs(lhs.values.size());

  if (variant == Variant::Nominal) {
    // Evaluation points w/2pi with axes 2 and 3 negated. On a grid, negation
    // is a reversal, so evaluate on the scaled grid and read back mirrored.
    Grid3D nu = omega_grid;
    for (int a = 0; a < 3; ++a) {
      nu.axes[a].spacing = omega_grid.axes[a].spacing / tau;
      nu.axes[a].origin = a == 0 ? omega_grid.axes[a].origin / tau : -omega_grid.axes[a].last() / tau;
    }
    const SampledField3D oft = oft_forward(f, nu);
    const Octonion e7 = Octonion::basis(7);
    for (std::size_t o = 0; o < omega_grid.size(); ++o) {
      const auto [i, j, k] = omega_grid.unravel(o);
      const std::size_t src = nu.index(i, nu.axes[1].count - 1 - j, nu.axes[2].count - 1 - k);
      rhs[o] = (oft.values[src] * e7) * pre;
    }
    return make_residual("oclct-oft", lhs.values, rhs, tolerance);
  }

  const Octonion minus_e7 = Octonion::basis(7) * -1.0;
  const std::array<double, 3> flip{-1.0, 1.0, -1.0};
  for (std::size_t o = 0; o < omega_grid.size(); ++o) {
    const auto w = omega_grid.point(o);
    Octonion acc;
    for (std::size_t q = 0; q < f.grid.size(); ++q) {
      const auto t = f.grid.point(q);
      Octonion x = f.values[q];
      for (int a = 0; a < 3; ++a) {
        const double nu = flip[a] * w[a] / tau;
        x = x * oct_exp_axis(kAxisOf[a], -tau * t[a] * nu);
      }
      acc += x;
    }
    rhs[o] = (acc * f.grid.cell_volume() * minus_e7) * pre;
  }
  PropertyResidual r = make_residual("oclct-oft-separable", lhs.values, rhs, tolerance);
  r.informational = true;
  return r;
}

PropertyResidual verify_linearity(const SampledField3D& f, const SampledField3D& g,
                                  const Octonion& eta, const Octonion& lambda,
                                  const WindowSpec& window, const LctParams3& params,
                                  const Grid3D& omega_grid, const Grid3D& mu_grid,
                                  double tolerance) {
  if (!(f.grid == g.grid)) throw Error(ErrorKind::GridMismatch, "linearity needs f and g on one grid");
  SampledField3D mix(f.grid);
  for (std::size_t q = 0; q < mix.values.size(); ++q) {
    mix.values[q] = eta * f.values[q] + lambda * g.values[q];
  }
  const WoclctResult lhs = woclct_forward(mix, window, params, omega_grid, mu_grid);
  const WoclctResult gf = woclct_forward(f, window, params, omega_grid, mu_grid);
  const WoclctResult gg = woclct_forward(g, window, params, omega_grid, mu_grid);
  std::vector<Octonion> rhs(lhs.values.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = eta * gf.values[i] + lambda * gg.values[i];
  return make_residual("linearity", lhs.values, rhs, tolerance);
}

}  // namespace woct
