#include "woct/octonion.hpp"

#include <ostream>

#include "woct/error.hpp"

namespace woct {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateParams: return "degenerate-params";
    case ErrorKind::NotUnimodular: return "not-unimodular";
    case ErrorKind::GridIncompatible: return "grid-incompatible";
    case ErrorKind::MuOffGrid: return "mu-off-grid";
    case ErrorKind::ZeroWindow: return "zero-window";
    case ErrorKind::AsymmetricGrid: return "asymmetric-grid";
    case ErrorKind::OffGridShift: return "off-grid-shift";
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::NonRealInput: return "non-real-input";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::DomainError: return "domain-error";
    case ErrorKind::K0Mismatch: return "k0-mismatch";
    case ErrorKind::ZeroSignal: return "zero-signal";
    case ErrorKind::DegenerateConcentration: return "degenerate-concentration";
    case ErrorKind::BadSpec: return "bad-spec";
    case ErrorKind::MalformedHeader: return "malformed-header";
    case ErrorKind::TruncatedPayload: return "truncated-payload";
    case ErrorKind::VersionMismatch: return "version-mismatch";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

const Octonion kE4 = Octonion::basis(4);

Octonion lift(const Quaternion& q) { return Octonion(q, Quaternion{}); }

}  // namespace

std::array<double, 6> quaternion_e4_residuals(const Quaternion& gamma, const Quaternion& delta) {
  const Octonion g = lift(gamma);
  const Octonion d = lift(delta);
  const Octonion gc = lift(gamma.conj());
  const Octonion dc = lift(delta.conj());
  const Octonion g_e4 = g * kE4;

  return {
      (kE4 * g - gc * kE4).norm(),
      (kE4 * g_e4 + gc).norm(),
      (g_e4 * kE4 + g).norm(),
      (g * (d * kE4) - (d * g) * kE4).norm(),
      (g_e4 * d - (g * dc) * kE4).norm(),
      (g_e4 * (d * kE4) + dc * g).norm(),
  };
}

std::ostream& operator<<(std::ostream& os, const Octonion& z) {
  os << '(';
  for (std::size_t i = 0; i < Octonion::kDim; ++i) {
    if (i) os << ", ";
    os << z[i];
  }
  return os << ')';
}

}  // namespace woct
