#pragma once

// Quaternion and octonion arithmetic.
//
// Octonions are built from quaternion pairs by Cayley-Dickson doubling,
// z = gamma + delta*e4, with e1*e2 = e3 and e5 = e1*e4, e6 = e2*e4,
// e7 = e3*e4. Under this table
//   (g1 + d1 e4)(g2 + d2 e4) = (g1 g2 - conj(d2) d1) + (d2 g1 + d1 conj(g2)) e4.
// Multiplication is neither commutative nor associative, so every product
// in this library is bracketed explicitly.

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

namespace woct {

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Imaginary units used as kernel exponent axes. The value is the basis index.
enum class Axis : int { E1 = 1, E2 = 2, E4 = 4 };

class Octonion {
 public:
  static constexpr std::size_t kDim = 8;

  constexpr Octonion() = default;
  constexpr explicit Octonion(double real) : c_{real, 0, 0, 0, 0, 0, 0, 0} {}
  constexpr explicit Octonion(const std::array<double, kDim>& c) : c_(c) {}
  constexpr Octonion(double c0, double c1, double c2, double c3, double c4, double c5, double c6,
                     double c7)
      : c_{c0, c1, c2, c3, c4, c5, c6, c7} {}
  constexpr Octonion(const Quaternion& gamma, const Quaternion& delta)
      : c_{gamma.w, gamma.x, gamma.y, gamma.z, delta.w, delta.x, delta.y, delta.z} {}

  /// Basis element e_i, i in [0, 8).
  static constexpr Octonion basis(std::size_t i) {
    Octonion e;
    e.c_[i] = 1.0;
    return e;
  }

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }
  constexpr const std::array<double, kDim>& components() const { return c_; }

  constexpr double real() const { return c_[0]; }
  constexpr Quaternion gamma() const { return {c_[0], c_[1], c_[2], c_[3]}; }
  constexpr Quaternion delta() const { return {c_[4], c_[5], c_[6], c_[7]}; }

  constexpr bool is_real() const {
    for (std::size_t i = 1; i < kDim; ++i) {
      if (c_[i] != 0.0) return false;
    }
    return true;
  }

  constexpr Octonion conj() const {
    return {c_[0], -c_[1], -c_[2], -c_[3], -c_[4], -c_[5], -c_[6], -c_[7]};
  }
  constexpr double norm2() const {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Octonion operator-() const {
    Octonion r;
    for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = -c_[i];
    return r;
  }
  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }
  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
  friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }

  friend constexpr Octonion operator*(const Octonion& lhs, const Octonion& rhs) {
    const Quaternion g1 = lhs.gamma(), d1 = lhs.delta();
    const Quaternion g2 = rhs.gamma(), d2 = rhs.delta();
    return {g1 * g2 - d2.conj() * d1, d2 * g1 + d1 * g2.conj()};
  }

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<double, kDim> c_{};
};

constexpr Octonion oct_mul(const Octonion& lhs, const Octonion& rhs) { return lhs * rhs; }
constexpr Octonion oct_conj(const Octonion& z) { return z.conj(); }
inline double oct_norm(const Octonion& z) { return z.norm(); }

/// cos(angle) + axis * sin(angle).
inline Octonion oct_exp_axis(Axis axis, double angle) {
  Octonion r(std::cos(angle));
  r[static_cast<std::size_t>(axis)] = std::sin(angle);
  return r;
}

/// (ab)c - a(bc).
constexpr Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return (a * b) * c - a * (b * c);
}

/// Residual norms of the six quaternion/e4 identities:
///   (i)   e4 g = conj(g) e4          (ii)  e4 (g e4) = -conj(g)
///   (iii) (g e4) e4 = -g             (iv)  g (d e4) = (d g) e4
///   (v)   (g e4) d = (g conj(d)) e4  (vi)  (g e4)(d e4) = -conj(d) g
std::array<double, 6> quaternion_e4_residuals(const Quaternion& gamma, const Quaternion& delta);

std::ostream& operator<<(std::ostream& os, const Octonion& z);

}  // namespace woct
