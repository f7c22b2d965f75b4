#include "woct/config.hpp"

#include <cmath>
#include <fstream>

#include "woct/error.hpp"

namespace woct {

namespace {

using nlohmann::json;

json signal_to_json(const SignalSpec& s) {
  json j = {{"kind", to_string(s.kind)},
            {"amplitude", s.amplitude},
            {"center", s.center},
            {"widths", s.widths},
            {"chirp", s.chirp}};
  if (s.has_seed) j["seed"] = s.seed;
  if (!s.path.empty()) j["path"] = s.path;
  return j;
}

SignalSpec signal_from_json(const json& j, SignalSpec s) {
  if (j.contains("kind")) s.kind = signal_kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("amplitude")) s.amplitude = j.at("amplitude").get<double>();
  if (j.contains("center")) s.center = j.at("center").get<std::array<double, 3>>();
  if (j.contains("widths")) {
    if (j.at("widths").is_number()) {
      s.widths.fill(j.at("widths").get<double>());
    } else {
      s.widths = j.at("widths").get<std::array<double, 3>>();
    }
  }
  if (j.contains("chirp")) s.chirp = j.at("chirp").get<std::array<double, 3>>();
  if (j.contains("seed")) {
    s.seed = j.at("seed").get<std::uint64_t>();
    s.has_seed = true;
  }
  if (j.contains("path")) s.path = j.at("path").get<std::string>();
  return s;
}

std::array<double, 3> triple(const json& j) {
  if (j.is_number()) {
    const double v = j.get<double>();
    return {v, v, v};
  }
  return j.get<std::array<double, 3>>();
}

}  // namespace

json grid_to_json(const Grid3D& g) {
  json counts = json::array();
  json spacing = json::array();
  json origin = json::array();
  for (const auto& a : g.axes) {
    counts.push_back(a.count);
    spacing.push_back(a.spacing);
    origin.push_back(a.origin);
  }
  return {{"counts", counts}, {"spacing", spacing}, {"origin", origin}};
}

Grid3D grid_from_json(const json& j) {
  Grid3D g;
  const auto counts = j.at("counts").get<std::array<std::size_t, 3>>();
  const auto spacing = triple(j.at("spacing"));
  for (int a = 0; a < 3; ++a) {
    if (counts[a] == 0 || !(spacing[a] > 0.0)) throw Error(ErrorKind::BadSpec, "grid needs positive counts and spacing");
    g.axes[a] = GridAxis::symmetric(counts[a], spacing[a]);
  }
  if (j.contains("origin")) {
    const auto origin = triple(j.at("origin"));
    for (int a = 0; a < 3; ++a) g.axes[a].origin = origin[a];
  }
  return g;
}

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.signal.kind = SignalKind::Gaussian;
  c.window.kind = SignalKind::Gaussian;
  c.params = {LctParams{0.5, 1.0, -0.75, 0.5}, LctParams::fourier(), LctParams{0.0, 2.0, -0.5, 0.0}};
  c.set_grid(8, 8, 8, 0.75);
  return c;
}

void RunConfig::set_grid(std::size_t n1, std::size_t n2, std::size_t n3, double spacing) {
  t_grid = Grid3D::symmetric(n1, n2, n3, spacing);
  omega_grid = t_grid;
  // A window with one more point per axis than the signal puts the shifts on
  // half-integer multiples of the spacing, which a symmetric mu grid of the
  // signal's size hits exactly.
  window_grid = Grid3D::symmetric(n1 + 1, n2 + 1, n3 + 1, spacing);
  mu_grid = t_grid;
}

double RunConfig::tolerance(const std::string& check, double fallback) const {
  const auto it = tolerances.find(check);
  return it == tolerances.end() ? fallback : it->second;
}

void RunConfig::validate(const std::vector<std::string>& known_checks) const {
  for (const auto& c : checks) {
    bool found = false;
    for (const auto& k : known_checks) found = found || k == c;
    if (!found) throw Error(ErrorKind::BadSpec, "unknown check '" + c + "'");
  }
  for (int a = 0; a < 3; ++a) {
    const double h = t_grid.axes[a].spacing;
    if (std::abs(window_grid.axes[a].spacing - h) > 1e-12 * h || std::abs(mu_grid.axes[a].spacing / h - std::round(mu_grid.axes[a].spacing / h)) > 1e-9) {
      throw Error(ErrorKind::BadSpec, "window and mu spacings must match the signal spacing");
    }
    const double s = (t_grid.axes[a].origin - mu_grid.axes[a].origin - window_grid.axes[a].origin) / h;
    if (std::abs(s - std::round(s)) > 1e-9) {
      throw Error(ErrorKind::BadSpec, "mu grid does not shift the window onto the signal grid");
    }
  }
  signal.validate();
  window.validate();
}

RunConfig config_from_json(const json& j) {
  RunConfig c = RunConfig::defaults();
  try {
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("signal")) c.signal = signal_from_json(j.at("signal"), c.signal);
    if (j.contains("window")) c.window = signal_from_json(j.at("window"), c.window);
    if (j.contains("params")) {
      const auto& p = j.at("params");
      if (!p.is_array() || p.size() != 3) throw Error(ErrorKind::BadSpec, "params needs three [a, b, c, d] entries");
      for (int a = 0; a < 3; ++a) {
        const auto m = p.at(a).get<std::array<double, 4>>();
        c.params[a] = LctParams::make(m[0], m[1], m[2], m[3]);
      }
    }
    if (j.contains("grids")) {
      const auto& g = j.at("grids");
      if (g.contains("t")) {
        c.t_grid = grid_from_json(g.at("t"));
        const auto n = c.t_grid.counts();
        // Keep the derived grids consistent unless they are given explicitly.
        const Grid3D t = c.t_grid;
        c.set_grid(n[0], n[1], n[2], t.axes[0].spacing);
        c.t_grid = t;
      }
      if (g.contains("window")) c.window_grid = grid_from_json(g.at("window"));
      if (g.contains("omega")) c.omega_grid = grid_from_json(g.at("omega"));
      if (g.contains("mu")) c.mu_grid = grid_from_json(g.at("mu"));
    }
    if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("tolerances")) c.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadSpec, std::string("config: ") + e.what());
  }
  if (c.signal.kind == SignalKind::RandomOctonion && !c.signal.has_seed) {
    c.signal.seed = c.seed;
    c.signal.has_seed = true;
  }
  if (c.window.kind == SignalKind::RandomOctonion && !c.window.has_seed) {
    c.window.seed = c.seed + 1;
    c.window.has_seed = true;
  }
  return c;
}

json config_to_json(const RunConfig& c) {
  json params = json::array();
  for (const auto& p : c.params) params.push_back({p.a, p.b, p.c, p.d});
  return {{"seed", c.seed},
          {"signal", signal_to_json(c.signal)},
          {"window", signal_to_json(c.window)},
          {"params", params},
          {"grids",
           {{"t", grid_to_json(c.t_grid)},
            {"window", grid_to_json(c.window_grid)},
            {"omega", grid_to_json(c.omega_grid)},
            {"mu", grid_to_json(c.mu_grid)}}},
          {"checks", c.checks},
          {"tolerances", c.tolerances}};
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::BadSpec, path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace woct
