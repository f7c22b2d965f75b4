#include "woct/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "woct/error.hpp"

namespace woct {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void require_positive(double x, const char* fn) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << fn << " needs x > 0, got " << x;
    throw Error(ErrorKind::DomainError, msg.str());
  }
}

// Lanczos series A_g(x) for Gamma(x + 1) = sqrt(2 pi) (x + g + 1/2)^(x + 1/2) e^-(x + g + 1/2) A_g(x).
double lanczos_sum(double x) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  return a;
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  const double z = x - 1.0;
  const double t = z + kG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double lgamma_fn(double x) {
  require_positive(x, "lgamma_fn");
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lgamma_fn(1.0 - x);
  }
  const double z = x - 1.0;
  const double t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double digamma_fn(double x) {
  require_positive(x, "digamma_fn");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  // B2k / (2k) coefficients
  const double series =
      r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * 691.0 / 32760)))));
  return acc + std::log(x) - 0.5 / x - series;
}

}  // namespace woct
