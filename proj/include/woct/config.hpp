#pragma once

// Run configuration: one JSON document describing the signal, window,
// matrices, grids and checks of a CLI run.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "woct/grid.hpp"
#include "woct/lct_kernel.hpp"
#include "woct/signals.hpp"

namespace woct {

struct RunConfig {
  SignalSpec signal;
  SignalSpec window;
  LctParams3 params{LctParams::fourier(), LctParams::fourier(), LctParams::fourier()};
  Grid3D t_grid;
  Grid3D window_grid;
  Grid3D omega_grid;
  Grid3D mu_grid;
  std::vector<std::string> checks;
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 1;

  /// 8^3 signal grid, 9^3 window grid, 8^3 omega and mu grids, Gaussian
  /// signal and window, one chirped and two plain matrices.
  static RunConfig defaults();

  /// Symmetric t grid n1 x n2 x n3 at `spacing`; the window, omega and mu
  /// grids follow so that every shift stays on the grid.
  void set_grid(std::size_t n1, std::size_t n2, std::size_t n3, double spacing);

  /// Tolerance override for `check`, or `fallback`.
  double tolerance(const std::string& check, double fallback) const;

  /// Throws bad-spec on unknown checks or shifts that miss the signal grid.
  void validate(const std::vector<std::string>& known_checks) const;
};

/// Missing fields keep their defaults(). Throws bad-spec on malformed input.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

/// Reads and parses a config file; io on open failure, bad-spec on parse failure.
RunConfig load_config(const std::string& path);

nlohmann::json grid_to_json(const Grid3D& g);
Grid3D grid_from_json(const nlohmann::json& j);

}  // namespace woct
