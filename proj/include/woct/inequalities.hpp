#pragma once

// Both sides of the Pitt, logarithmic, Young-Hausdorff, Heisenberg and
// Donoho-Stark inequalities for the windowed transform, evaluated with the
// same midpoint weights as the transforms.

#include <array>
#include <string>
#include <vector>

#include "woct/grid.hpp"
#include "woct/lct_kernel.hpp"
#include "woct/transforms.hpp"

namespace woct {

struct PittConstant {
  double beta = 0.0;
  double M_beta = 1.0;
  /// M_beta / |b1 b2|^beta
  double E_beta = 1.0;
  /// d E_beta / d beta
  double E_beta_prime = 0.0;
};

/// M_beta = (Gamma((3 - beta)/4) / Gamma((3 + beta)/4))^2 for 0 <= beta < 3.
PittConstant pitt_constant(double beta, double b1b2 = 1.0);

/// K0' = d/dbeta (-M_beta / |b1 b2|^beta) at beta = 0, closed form:
/// ln|b1 b2| + digamma(3/4).
double k0_prime_analytic(double b1b2);
/// Same derivative by a central difference with step h.
double k0_prime_finite_difference(double b1b2, double h = 1e-5);

/// A signal, its window and the windowed transform over (omega, mu).
struct TransformCase {
  SampledField3D f;
  WindowSpec window;
  LctParams3 params;
  WoclctResult g;

  static TransformCase compute(SampledField3D f, WindowSpec window, const LctParams3& params,
                               const Grid3D& omega_grid, const Grid3D& mu_grid);
};

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs / rhs; infinite when rhs == 0 < lhs, 1 when both vanish.
  double ratio = 0.0;
  /// "<=" or ">=": the direction lhs must satisfy against rhs.
  std::string relation = "<=";
  double slack = 1e-9;
  bool satisfied = false;
  /// Free-form extras (beta, p, eps values, ...).
  std::vector<std::pair<std::string, double>> extras;
};

/// Point mask over a grid; true marks membership.
using Region = std::vector<char>;

/// Points with |t_k - center_k| <= half_width_k on every axis.
Region box_region(const Grid3D& grid, const std::array<double, 3>& half_width,
                  const std::array<double, 3>& center = {});

/// Relative mass outside `region`: ||f - f chi|| / ||f|| in L^p (p = 1 or 2).
double concentration(const SampledField3D& f, const Region& region, double p);
/// Same over (omega, mu) with `region` a mask on the omega grid, applied at every mu.
double concentration(const WoclctResult& g, const Region& omega_region, double p);

/// sum |w|^-beta |G|^2 dW dMu  <=  M_beta ||Psi||^2 / (2 pi |b3| |b1 b2|^beta) sum |t|^beta |f|^2 dt.
/// The w = 0 point is skipped when beta > 0.
InequalityReport check_pitt(const TransformCase& c, double beta);

/// 2 pi |b3| sum ln|w| |G|^2 dW dMu + ||Psi||^2 sum ln|t| |f|^2 dt  >=  K0' ||Psi||^2 ||f||^2.
/// Throws k0-mismatch when the two K0' evaluations differ by more than 1e-6.
InequalityReport check_log_uncertainty(const TransformCase& c);

/// ||G||_q  <=  A ||f||_1 ||Psi||_p, 1 <= p < 2, q = p / (p - 1).
InequalityReport check_young_hausdorff(const TransformCase& c, double p);

/// Young-Hausdorff constant A for the given p and matrices.
double young_hausdorff_constant(double p, const LctParams3& params);

/// (sum |t|^2 |f|^2 dt)(sum |w|^2 |G|^2 dW dMu)  >=  2 b1^2 b2^2 ||f||^2 / (pi |b3|).
/// The window must have unit norm (use WindowSpec::normalized()).
InequalityReport check_heisenberg(const TransformCase& c);

/// sum |G|^2 dW dMu against |sigma||tau| ||Psi||^2 ||f||^2 / (8 pi^3 |b1 b2 b3| [(1-es)(1-et)]^2),
/// es measured in L1 on the signal, et in L2 on the transform. Direction "<=".
InequalityReport check_donoho_stark(const TransformCase& c, const Region& sigma,
                                    const Region& tau);

}  // namespace woct
