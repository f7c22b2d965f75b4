#include "woct/grid.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <sstream>

#include "woct/error.hpp"

namespace woct {

GridAxis GridAxis::symmetric(std::size_t count, double spacing) {
  if (count == 0 || !(spacing > 0.0)) {
    throw Error(ErrorKind::BadSpec, "grid axis needs count > 0 and spacing > 0");
  }
  return {count, spacing, -spacing * static_cast<double>(count - 1) / 2.0};
}

bool GridAxis::is_symmetric() const {
  return std::abs(origin + last()) <= 1e-12 * spacing;
}

Grid3D Grid3D::symmetric(std::size_t n1, std::size_t n2, std::size_t n3, double spacing) {
  return {{GridAxis::symmetric(n1, spacing), GridAxis::symmetric(n2, spacing),
           GridAxis::symmetric(n3, spacing)}};
}

bool Grid3D::is_symmetric() const {
  return axes[0].is_symmetric() && axes[1].is_symmetric() && axes[2].is_symmetric();
}

std::array<std::size_t, 3> Grid3D::unravel(std::size_t linear) const {
  const std::size_t k = linear % axes[2].count;
  linear /= axes[2].count;
  const std::size_t j = linear % axes[1].count;
  return {linear / axes[1].count, j, k};
}

std::array<double, 3> Grid3D::point(std::size_t linear) const {
  const auto [i, j, k] = unravel(linear);
  return {axes[0].point(i), axes[1].point(j), axes[2].point(k)};
}

Grid3D Grid3D::translated(const std::array<double, 3>& by) const {
  Grid3D g = *this;
  for (int a = 0; a < 3; ++a) g.axes[a].origin += by[a];
  return g;
}

SampledField3D::SampledField3D(const Grid3D& g) : grid(g), values(g.size()) {}

SampledField3D::SampledField3D(const Grid3D& g, std::vector<Octonion> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    std::ostringstream msg;
    msg << "field has " << values.size() << " samples, grid has " << grid.size();
    throw Error(ErrorKind::GridMismatch, msg.str());
  }
}

bool SampledField3D::is_real() const {
  for (const auto& v : values) {
    if (!v.is_real()) return false;
  }
  return true;
}

double lp_norm(const SampledField3D& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, v.norm());
    return m;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (const auto& v : f.values) s += v.norm2();
    return std::sqrt(s * f.grid.cell_volume());
  }
  for (const auto& v : f.values) s += std::pow(v.norm(), p);
  return std::pow(s * f.grid.cell_volume(), 1.0 / p);
}

double relative_l2(const std::vector<Octonion>& a, const std::vector<Octonion>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::GridMismatch, "relative_l2 size mismatch");
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += (a[i] - b[i]).norm2();
    ref += b[i].norm2();
  }
  diff = std::sqrt(diff);
  ref = std::sqrt(ref);
  return ref < 1e-14 ? diff : diff / ref;
}

SampledField3D parity_reflect(const SampledField3D& f) {
  if (!f.grid.is_symmetric()) {
    throw Error(ErrorKind::AsymmetricGrid, "parity needs a negation-symmetric grid");
  }
  SampledField3D out(f.grid);
  const auto [n1, n2, n3] = f.grid.counts();
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n3; ++k)
        out.at(i, j, k) = f.at(n1 - 1 - i, n2 - 1 - j, n3 - 1 - k);
  return out;
}

WindowSpec::WindowSpec(SampledField3D window) : window_(std::move(window)) {
  const double n = l2_norm(window_);
  norm2_ = n * n;
  if (!(norm2_ > 0.0)) throw Error(ErrorKind::ZeroWindow, "window has zero L2 norm");
}

WindowSpec WindowSpec::normalized() const {
  SampledField3D w = window_;
  const double s = 1.0 / std::sqrt(norm2_);
  for (auto& v : w.values) v *= s;
  return WindowSpec(std::move(w));
}

WoclctResult::WoclctResult(const Grid3D& omega, const Grid3D& mu)
    : omega_grid(omega), mu_grid(mu), values(omega.size() * mu.size()) {}

}  // namespace woct
