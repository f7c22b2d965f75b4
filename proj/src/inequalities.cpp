#include "woct/inequalities.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "woct/error.hpp"
#include "woct/special.hpp"

namespace woct {

namespace {

constexpr double kPi = std::numbers::pi;

double radius(const std::array<double, 3>& x) {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

double ratio_of(double lhs, double rhs) {
  if (rhs != 0.0) return lhs / rhs;
  return lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

InequalityReport finish(std::string name, double lhs, double rhs, const std::string& relation) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = ratio_of(lhs, rhs);
  r.relation = relation;
  r.satisfied = relation == "<=" ? lhs <= rhs * (1.0 + r.slack) : lhs >= rhs * (1.0 - r.slack);
  return r;
}

// sum over t of weight(|t|) |f|^2 dt
template <class W>
double signal_moment(const SampledField3D& f, W weight) {
  double s = 0.0;
  for (std::size_t q = 0; q < f.values.size(); ++q) s += weight(radius(f.grid.point(q))) * f.values[q].norm2();
  return s * f.grid.cell_volume();
}

// sum over (w, mu) of weight(|w|) |G|^2 dW dMu
template <class W>
double transform_moment(const WoclctResult& g, W weight) {
  const std::size_t n_omega = g.omega_grid.size();
  std::vector<double> wt(n_omega);
  for (std::size_t o = 0; o < n_omega; ++o) wt[o] = weight(radius(g.omega_grid.point(o)));
  double s = 0.0;
  for (std::size_t m = 0; m < g.mu_grid.size(); ++m)
    for (std::size_t o = 0; o < n_omega; ++o) s += wt[o] * g.at(o, m).norm2();
  return s * g.cell_volume();
}

double abs_b1b2(const LctParams3& p) { return std::abs(p[0].b * p[1].b); }

void require_nondegenerate(const LctParams3& p) {
  for (const auto& x : p) {
    if (x.degenerate()) throw Error(ErrorKind::DegenerateParams, "inequalities need b != 0 on every axis");
  }
}

}  // namespace

PittConstant pitt_constant(double beta, double b1b2) {
  if (!(beta >= 0.0 && beta < 3.0)) {
    std::ostringstream msg;
    msg << "beta = " << beta << " outside [0, 3)";
    throw Error(ErrorKind::OutOfRange, msg.str());
  }
  PittConstant c;
  c.beta = beta;
  c.M_beta = beta == 0.0 ? 1.0 : std::exp(2.0 * (lgamma_fn((3.0 - beta) / 4.0) - lgamma_fn((3.0 + beta) / 4.0)));
  const double b = std::abs(b1b2);
  c.E_beta = c.M_beta / std::pow(b, beta);
  const double dlnM = -0.5 * (digamma_fn((3.0 - beta) / 4.0) + digamma_fn((3.0 + beta) / 4.0));
  c.E_beta_prime = c.E_beta * (dlnM - std::log(b));
  return c;
}

double k0_prime_analytic(double b1b2) { return std::log(std::abs(b1b2)) + digamma_fn(0.75); }

double k0_prime_finite_difference(double b1b2, double h) {
  const auto neg_e = [&](double beta) {
    const double m = std::pow(gamma_fn((3.0 - beta) / 4.0) / gamma_fn((3.0 + beta) / 4.0), 2);
    return -m / std::pow(std::abs(b1b2), beta);
  };
  return (neg_e(h) - neg_e(-h)) / (2.0 * h);
}

TransformCase TransformCase::compute(SampledField3D f, WindowSpec window, const LctParams3& params,
                                     const Grid3D& omega_grid, const Grid3D& mu_grid) {
  WoclctResult g = woclct_forward(f, window, params, omega_grid, mu_grid);
  return {std::move(f), std::move(window), params, std::move(g)};
}

Region box_region(const Grid3D& grid, const std::array<double, 3>& half_width,
                  const std::array<double, 3>& center) {
  Region r(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const auto t = grid.point(q);
    bool in = true;
    for (int a = 0; a < 3; ++a) in = in && std::abs(t[a] - center[a]) <= half_width[a] * (1.0 + 1e-12);
    r[q] = in;
  }
  return r;
}

namespace {

double outside_fraction(const std::vector<Octonion>& v, const Region& mask, std::size_t period, double p) {
  if (p != 1.0 && p != 2.0) throw Error(ErrorKind::OutOfRange, "concentration norm must be L1 or L2");
  double total = 0.0;
  double out = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double m = p == 1.0 ? v[i].norm() : v[i].norm2();
    total += m;
    if (!mask[i % period]) out += m;
  }
  if (!(total > 0.0)) throw Error(ErrorKind::ZeroSignal, "concentration of a zero field");
  return p == 1.0 ? out / total : std::sqrt(out / total);
}

}  // namespace

double concentration(const SampledField3D& f, const Region& region, double p) {
  if (region.size() != f.grid.size()) throw Error(ErrorKind::GridMismatch, "region does not match grid");
  return outside_fraction(f.values, region, region.size(), p);
}

double concentration(const WoclctResult& g, const Region& omega_region, double p) {
  if (omega_region.size() != g.omega_grid.size()) {
    throw Error(ErrorKind::GridMismatch, "region does not match omega grid");
  }
  return outside_fraction(g.values, omega_region, omega_region.size(), p);
}

InequalityReport check_pitt(const TransformCase& c, double beta) {
  require_nondegenerate(c.params);
  const PittConstant pc = pitt_constant(beta, abs_b1b2(c.params));
  const double lhs = transform_moment(c.g, [&](double r) {
    if (beta == 0.0) return 1.0;
    return r == 0.0 ? 0.0 : std::pow(r, -beta);
  });
  const double tb = signal_moment(c.f, [&](double r) { return beta == 0.0 ? 1.0 : std::pow(r, beta); });
  const double rhs = pc.E_beta * c.window.norm2() / (2.0 * kPi * std::abs(c.params[2].b)) * tb;
  InequalityReport r = finish("pitt", lhs, rhs, "<=");
  r.extras = {{"beta", beta}, {"M_beta", pc.M_beta}};
  return r;
}

InequalityReport check_log_uncertainty(const TransformCase& c) {
  require_nondegenerate(c.params);
  const double b12 = abs_b1b2(c.params);
  const double k_an = k0_prime_analytic(b12);
  const double k_fd = k0_prime_finite_difference(b12);
  if (std::abs(k_an - k_fd) > 1e-6) {
    std::ostringstream msg;
    msg << "K0' analytic " << k_an << " vs finite difference " << k_fd;
    throw Error(ErrorKind::K0Mismatch, msg.str());
  }
  const auto ln = [](double r) { return r == 0.0 ? 0.0 : std::log(r); };
  const double psi2 = c.window.norm2();
  const double lhs = 2.0 * kPi * std::abs(c.params[2].b) * transform_moment(c.g, ln) +
                     psi2 * signal_moment(c.f, ln);
  const double f2 = signal_moment(c.f, [](double) { return 1.0; });
  const double rhs = k_an * psi2 * f2;
  InequalityReport r = finish("log-uncertainty", lhs, rhs, ">=");
  // rhs is negative for most matrices; compare the difference instead of the ratio.
  r.satisfied = lhs - rhs >= -r.slack * (std::abs(lhs) + std::abs(rhs));
  r.extras = {{"K0_prime", k_an}, {"K0_prime_fd", k_fd}};
  return r;
}

double young_hausdorff_constant(double p, const LctParams3& params) {
  if (!(p >= 1.0 && p < 2.0)) throw Error(ErrorKind::OutOfRange, "Young-Hausdorff needs 1 <= p < 2");
  const double inv_q = 1.0 - 1.0 / p;
  const double q_term = inv_q == 0.0 ? 1.0 : std::pow(1.0 / inv_q, inv_q);
  return std::pow(2.0 * kPi, inv_q - 1.0 / p - 0.5) * std::pow(std::abs(params[2].b), -0.5) *
         std::pow(abs_b1b2(params), inv_q - 0.5) * std::pow(p, 1.0 / p) / q_term;
}

InequalityReport check_young_hausdorff(const TransformCase& c, double p) {
  require_nondegenerate(c.params);
  const double a = young_hausdorff_constant(p, c.params);
  double lhs = 0.0;
  if (p == 1.0) {
    for (const auto& v : c.g.values) lhs = std::max(lhs, v.norm());
  } else {
    const double q = p / (p - 1.0);
    double s = 0.0;
    for (const auto& v : c.g.values) s += std::pow(v.norm(), q);
    lhs = std::pow(s * c.g.cell_volume(), 1.0 / q);
  }
  const double rhs = a * lp_norm(c.f, 1.0) * lp_norm(c.window.field(), p);
  InequalityReport r = finish("young-hausdorff", lhs, rhs, "<=");
  r.extras = {{"p", p}, {"A", a}};
  return r;
}

InequalityReport check_heisenberg(const TransformCase& c) {
  require_nondegenerate(c.params);
  const double tw = signal_moment(c.f, [](double r) { return r * r; });
  const double ww = transform_moment(c.g, [](double r) { return r * r; });
  const double f2 = signal_moment(c.f, [](double) { return 1.0; });
  const double b1 = c.params[0].b;
  const double b2 = c.params[1].b;
  const double rhs = 2.0 / (kPi * std::abs(c.params[2].b)) * b1 * b1 * b2 * b2 * f2;
  InequalityReport r = finish("heisenberg", tw * ww, rhs, ">=");
  r.extras = {{"window_norm2", c.window.norm2()}};
  return r;
}

InequalityReport check_donoho_stark(const TransformCase& c, const Region& sigma, const Region& tau) {
  require_nondegenerate(c.params);
  const double es = concentration(c.f, sigma, 1.0);
  const double et = concentration(c.g, tau, 2.0);
  if (es >= 1.0 || et >= 1.0) {
    std::ostringstream msg;
    msg << "eps_sigma = " << es << ", eps_tau = " << et;
    throw Error(ErrorKind::DegenerateConcentration, msg.str());
  }
  std::size_t ns = 0;
  for (char x : sigma) ns += x ? 1 : 0;
  std::size_t nt = 0;
  for (char x : tau) nt += x ? 1 : 0;
  const double ms = static_cast<double>(ns) * c.f.grid.cell_volume();
  const double mt = static_cast<double>(nt) * c.g.omega_grid.cell_volume();
  const double b123 = std::abs(c.params[0].b * c.params[1].b * c.params[2].b);
  const double f2 = signal_moment(c.f, [](double) { return 1.0; });
  const double den = 8.0 * kPi * kPi * kPi * b123 * std::pow((1.0 - es) * (1.0 - et), 2);
  const double rhs = ms * mt / den * c.window.norm2() * f2;
  const double lhs = transform_moment(c.g, [](double) { return 1.0; });
  InequalityReport r = finish("donoho-stark", lhs, rhs, "<=");
  r.extras = {{"eps_sigma", es}, {"eps_tau", et}, {"measure_sigma", ms}, {"measure_tau", mt}};
  return r;
}

}  // namespace woct
