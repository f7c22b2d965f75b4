#include "woct/cli.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "woct/config.hpp"
#include "woct/error.hpp"
#include "woct/field_io.hpp"
#include "woct/inequalities.hpp"
#include "woct/report.hpp"
#include "woct/signals.hpp"
#include "woct/transforms.hpp"
#include "woct/verify.hpp"

namespace woct {

namespace {

using nlohmann::json;

struct Options {
  std::string config_path;
  std::vector<std::string> checks;
  std::string beta_sweep;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string grid;
  std::string in;
  std::vector<std::string> inputs;
  std::string kind;
  std::string what = "signal";
  std::string order = "reversed";
};

bool is_io_kind(ErrorKind k) {
  return k == ErrorKind::Io || k == ErrorKind::MalformedHeader || k == ErrorKind::TruncatedPayload ||
         k == ErrorKind::VersionMismatch;
}

RunConfig resolve_config(const Options& o) {
  RunConfig c = o.config_path.empty() ? RunConfig::defaults() : load_config(o.config_path);
  if (!o.grid.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(o.grid);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    if (parts.size() != 4) throw Error(ErrorKind::BadSpec, "--grid expects n1,n2,n3,spacing");
    try {
      std::size_t pos = 0;
      std::array<std::size_t, 3> n{};
      for (int a = 0; a < 3; ++a) {
        const long v = std::stol(parts[a], &pos);
        if (v <= 0 || pos != parts[a].size()) throw std::invalid_argument("count");
        n[a] = static_cast<std::size_t>(v);
      }
      const double h = std::stod(parts[3], &pos);
      if (!(h > 0.0) || pos != parts[3].size()) throw std::invalid_argument("spacing");
      c.set_grid(n[0], n[1], n[2], h);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadSpec, "--grid expects positive n1,n2,n3,spacing");
    }
  }
  if (o.seed_set) {
    c.seed = o.seed;
    if (c.signal.kind == SignalKind::RandomOctonion) c.signal.seed = o.seed, c.signal.has_seed = true;
    if (c.window.kind == SignalKind::RandomOctonion) c.window.seed = o.seed + 1, c.window.has_seed = true;
  }
  return c;
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << report.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
  f << report.dump(2) << '\n';
  if (!f) throw Error(ErrorKind::Io, "short write to " + path);
}

SampledField3D make_signal(const RunConfig& c) { return generate_signal(c.signal, c.t_grid); }
WindowSpec make_window(const RunConfig& c) { return WindowSpec(generate_signal(c.window, c.window_grid)); }

Octonion random_octonion(std::mt19937_64& rng, bool real_only) {
  std::normal_distribution<double> n;
  Octonion v;
  for (std::size_t k = 0; k < (real_only ? 1u : 8u); ++k) v[k] = n(rng);
  return v;
}

// Failed checks are reported, not thrown, so one bad check never hides the rest.
ReportEntry failed_entry(const std::string& name, const std::exception& e) {
  ReportEntry r;
  r.name = name;
  r.residual = std::numeric_limits<double>::infinity();
  r.config = {{"error", e.what()}};
  return r;
}

ReportEntry run_verify_check(const std::string& name, const RunConfig& c, const SampledField3D& f,
                             const WindowSpec& w) {
  const auto tol = [&](double d) { return c.tolerance(name, d); };
  if (name == "reassembly") return to_entry(verify_reassembly(f, w, c.params, c.omega_grid, c.mu_grid, tol(1e-10)));
  if (name == "parity") return to_entry(verify_parity(f, w, c.params, c.omega_grid, c.mu_grid, Variant::Nominal, tol(1e-12)));
  if (name == "parity-even") return to_entry(verify_parity(f, w, c.params, c.omega_grid, c.mu_grid, Variant::Exact, tol(1e-12)));
  if (name == "shift") {
    return to_entry(verify_shift(f, w, c.params, c.omega_grid, c.mu_grid, 0, c.t_grid.axes[0].spacing, tol(1e-10)));
  }
  if (name == "oclct-oft") return to_entry(verify_oclct_oft_relation(f, c.omega_grid, Variant::Nominal, tol(1e-12)));
  if (name == "oclct-oft-separable") return to_entry(verify_oclct_oft_relation(f, c.omega_grid, Variant::Exact, tol(1e-12)));
  if (name == "linearity" || name == "linearity-real") {
    const bool real = name == "linearity-real";
    std::mt19937_64 rng(c.seed);
    const Octonion eta = random_octonion(rng, real);
    const Octonion lambda = random_octonion(rng, real);
    SignalSpec gs = c.signal;
    gs.kind = SignalKind::Gaussian;
    gs.center = {0.5 * c.t_grid.axes[0].spacing, 0.0, -0.5 * c.t_grid.axes[2].spacing};
    gs.widths = {0.8, 1.1, 0.9};
    const SampledField3D g = generate_signal(gs, c.t_grid);
    ReportEntry e = to_entry(verify_linearity(f, g, eta, lambda, w, c.params, c.omega_grid, c.mu_grid, tol(1e-12)));
    e.name = name;
    e.config["informational"] = real;
    return e;
  }
  if (name == "woclct-oclct") {
    const WoclctResult g = woclct_forward(f, w, c.params, c.omega_grid, c.mu_grid);
    std::vector<Octonion> rhs;
    rhs.reserve(g.values.size());
    for (std::size_t m = 0; m < c.mu_grid.size(); ++m) {
      SampledField3D prod = shifted_window(w, c.t_grid, c.mu_grid.point(m));
      for (std::size_t q = 0; q < prod.values.size(); ++q) prod.values[q] = f.values[q] * prod.values[q];
      const SampledField3D s = oclct_forward(prod, c.params, c.omega_grid);
      rhs.insert(rhs.end(), s.values.begin(), s.values.end());
    }
    PropertyResidual r;
    r.name = name;
    r.residual = relative_l2(g.values, rhs);
    r.tolerance = tol(1e-12);
    r.passed = r.residual <= r.tolerance;
    return to_entry(r);
  }
  if (name == "oclct-roundtrip") {
    const SampledField3D back = oclct_inverse(oclct_forward(f, c.params, c.omega_grid), c.params, c.t_grid);
    PropertyResidual r;
    r.name = name;
    r.lhs_norm = l2_norm(back);
    r.rhs_norm = l2_norm(f);
    r.residual = relative_l2(back.values, f.values);
    r.tolerance = tol(5e-2);
    r.passed = r.residual <= r.tolerance;
    return to_entry(r);
  }
  if (name == "woclct-roundtrip") {
    const WoclctResult g = woclct_forward(f, w, c.params, c.omega_grid, c.mu_grid);
    const SampledField3D back = woclct_inverse(g, w, c.params, c.t_grid);
    PropertyResidual r;
    r.name = name;
    r.lhs_norm = l2_norm(back);
    r.rhs_norm = l2_norm(f);
    r.residual = relative_l2(back.values, f.values);
    r.tolerance = tol(1e-1);
    r.passed = r.residual <= r.tolerance;
    return to_entry(r);
  }
  throw Error(ErrorKind::BadSpec, "unknown check '" + name + "'");
}

std::vector<ReportEntry> run_inequality_check(const std::string& name, const RunConfig& c,
                                              const TransformCase& tc, const std::vector<double>& betas) {
  std::vector<ReportEntry> out;
  if (name == "pitt") {
    for (double b : betas) out.push_back(to_entry(check_pitt(tc, b)));
  } else if (name == "log-uncertainty") {
    out.push_back(to_entry(check_log_uncertainty(tc)));
  } else if (name == "young-hausdorff") {
    for (double p : {1.0, 1.25, 1.5, 1.75}) out.push_back(to_entry(check_young_hausdorff(tc, p)));
  } else if (name == "heisenberg") {
    out.push_back(to_entry(check_heisenberg(tc)));
  } else if (name == "donoho-stark") {
    const Region sigma = box_region(c.t_grid, {4.0 * c.signal.widths[0], 4.0 * c.signal.widths[1], 4.0 * c.signal.widths[2]},
                                    c.signal.center);
    std::array<double, 3> half{};
    for (int a = 0; a < 3; ++a) {
      half[a] = 0.5 * std::max(std::abs(c.omega_grid.axes[a].origin), std::abs(c.omega_grid.axes[a].last()));
    }
    out.push_back(to_entry(check_donoho_stark(tc, sigma, box_region(c.omega_grid, half))));
  } else {
    throw Error(ErrorKind::BadSpec, "unknown check '" + name + "'");
  }
  return out;
}

int cmd_verify(const Options& o, std::ostream& out) {
  RunConfig c = resolve_config(o);
  if (!o.checks.empty()) c.checks = o.checks;
  if (c.checks.empty()) {
    c.checks = {"reassembly", "parity", "shift", "oclct-oft", "linearity", "woclct-oclct"};
  }
  c.validate(verify_check_names());
  const SampledField3D f = make_signal(c);
  const WindowSpec w = make_window(c);
  std::vector<ReportEntry> entries;
  for (const auto& name : c.checks) {
    try {
      entries.push_back(run_verify_check(name, c, f, w));
    } catch (const Error& e) {
      if (is_io_kind(e.kind())) throw;
      entries.push_back(failed_entry(name, e));
    }
  }
  emit(make_report("verify", c.seed, config_to_json(c), entries), o.out, out);
  return all_passed(entries) ? kExitPass : kExitCheckFailed;
}

int cmd_inequalities(const Options& o, std::ostream& out) {
  RunConfig c = resolve_config(o);
  if (!o.checks.empty()) c.checks = o.checks;
  if (c.checks.empty()) c.checks = inequality_check_names();
  c.validate(inequality_check_names());
  const std::vector<double> betas =
      o.beta_sweep.empty() ? std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0} : parse_sweep(o.beta_sweep);
  const TransformCase tc = TransformCase::compute(make_signal(c), make_window(c).normalized(), c.params,
                                                  c.omega_grid, c.mu_grid);
  std::vector<ReportEntry> entries;
  for (const auto& name : c.checks) {
    try {
      for (auto& e : run_inequality_check(name, c, tc, betas)) entries.push_back(std::move(e));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::OutOfRange) throw;
      entries.push_back(failed_entry(name, e));
    }
  }
  json cfg = config_to_json(c);
  cfg["beta_sweep"] = betas;
  cfg["window_normalized"] = true;
  emit(make_report("inequalities", c.seed, cfg, entries), o.out, out);
  return all_passed(entries) ? kExitPass : kExitCheckFailed;
}

int cmd_gen_signal(const Options& o, std::ostream& out) {
  const RunConfig c = resolve_config(o);
  if (o.what != "signal" && o.what != "window") throw Error(ErrorKind::BadSpec, "--what must be signal or window");
  const SampledField3D f = o.what == "signal" ? make_signal(c) : generate_signal(c.window, c.window_grid);
  write_field(o.out, f);
  json cfg = config_to_json(c);
  cfg["output"] = o.out;
  emit(make_report("gen-signal", c.seed, cfg, {}), "", out);
  return kExitPass;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const RunConfig c = resolve_config(o);
  const SampledField3D f = o.in.empty() ? make_signal(c) : read_field(o.in);
  const std::string kind = o.kind.empty() ? "woclct" : o.kind;
  if (kind == "oft") {
    write_field(o.out, oft_forward(f, c.omega_grid));
  } else if (kind == "oclct") {
    write_field(o.out, oclct_forward(f, c.params, c.omega_grid));
  } else if (kind == "woclct") {
    write_woclct(o.out, woclct_forward(f, make_window(c), c.params, c.omega_grid, c.mu_grid));
  } else {
    throw Error(ErrorKind::BadSpec, "--kind must be oft, oclct or woclct");
  }
  json cfg = config_to_json(c);
  cfg["kind"] = kind;
  cfg["output"] = o.out;
  emit(make_report("transform", c.seed, cfg, {}), "", out);
  return kExitPass;
}

int cmd_inverse(const Options& o, std::ostream& out) {
  const RunConfig c = resolve_config(o);
  const std::string kind = o.kind.empty() ? "woclct" : o.kind;
  KernelOrder order = KernelOrder::Reversed;
  if (o.order == "forward") {
    order = KernelOrder::Forward;
  } else if (o.order != "reversed") {
    throw Error(ErrorKind::BadSpec, "--order must be reversed or forward");
  }
  if (kind == "oclct") {
    write_field(o.out, oclct_inverse(read_field(o.in), c.params, c.t_grid, order));
  } else if (kind == "woclct") {
    write_field(o.out, woclct_inverse(read_woclct(o.in), make_window(c), c.params, c.t_grid, order));
  } else {
    throw Error(ErrorKind::BadSpec, "--kind must be oclct or woclct");
  }
  json cfg = config_to_json(c);
  cfg["kind"] = kind;
  cfg["order"] = o.order;
  cfg["output"] = o.out;
  emit(make_report("inverse", c.seed, cfg, {}), "", out);
  return kExitPass;
}

int cmd_report(const Options& o, std::ostream& out) {
  std::vector<ReportEntry> entries;
  json sources = json::array();
  for (const auto& path : o.inputs) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    json doc;
    try {
      doc = json::parse(in);
      for (const auto& r : doc.at("results")) {
        ReportEntry e;
        e.name = r.at("name").get<std::string>();
        e.lhs = r.at("lhs").is_null() ? NAN : r.at("lhs").get<double>();
        e.rhs = r.at("rhs").is_null() ? NAN : r.at("rhs").get<double>();
        e.ratio = r.at("ratio").is_null() ? NAN : r.at("ratio").get<double>();
        e.residual = r.at("residual").is_null() ? NAN : r.at("residual").get<double>();
        e.tolerance = r.at("tolerance").get<double>();
        e.passed = r.at("passed").get<bool>();
        e.config = r.at("config");
        e.config["source"] = path;
        entries.push_back(std::move(e));
      }
    } catch (const json::exception& e) {
      throw Error(ErrorKind::MalformedHeader, path + ": not a report: " + e.what());
    }
    sources.push_back(path);
  }
  emit(make_report("report", 0, {{"sources", sources}}, entries), o.out, out);
  return all_passed(entries) ? kExitPass : kExitCheckFailed;
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "reassembly", "parity",       "parity-even",  "shift",           "oclct-oft",       "oclct-oft-separable",
      "linearity",  "linearity-real", "woclct-oclct", "oclct-roundtrip", "woclct-roundtrip"};
  return names;
}

const std::vector<std::string>& inequality_check_names() {
  static const std::vector<std::string> names = {"pitt", "log-uncertainty", "young-hausdorff", "heisenberg",
                                                 "donoho-stark"};
  return names;
}

std::vector<double> parse_sweep(const std::string& text) {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof() ||
      !(step > 0.0) || stop < start) {
    throw Error(ErrorKind::BadSpec, "sweep must be start:stop:step with step > 0 and stop >= start");
  }
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Windowed octonion linear canonical transforms: transforms, property checks, inequalities",
               "woct"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "Run configuration (JSON)");
    sub->add_option("--seed", o.seed, "Seed for every random draw")->each([&](const std::string&) { o.seed_set = true; });
    sub->add_option("--grid", o.grid, "Signal grid n1,n2,n3,spacing");
  };

  auto* gen = app.add_subcommand("gen-signal", "Write the configured signal or window as a FieldFile");
  common(gen);
  gen->add_option("--what", o.what, "signal or window");
  gen->add_option("--out", o.out, "Output FieldFile")->required();

  auto* tr = app.add_subcommand("transform", "Forward OFT, OCLCT or WOCLCT");
  common(tr);
  tr->add_option("--kind", o.kind, "oft, oclct or woclct");
  tr->add_option("--in", o.in, "Input FieldFile (default: configured signal)");
  tr->add_option("--out", o.out, "Output file")->required();

  auto* inv = app.add_subcommand("inverse", "Inverse OCLCT or WOCLCT");
  common(inv);
  inv->add_option("--kind", o.kind, "oclct or woclct");
  inv->add_option("--in", o.in, "Spectrum file")->required();
  inv->add_option("--order", o.order, "reversed or forward");
  inv->add_option("--out", o.out, "Output FieldFile")->required();

  auto* ver = app.add_subcommand("verify", "Run property checks");
  common(ver);
  ver->add_option("--check", o.checks, "Check name (repeatable)");
  ver->add_option("--out", o.out, "Report path (default: stdout)");

  auto* ineq = app.add_subcommand("inequalities", "Evaluate the uncertainty inequalities");
  common(ineq);
  ineq->add_option("--check", o.checks, "Inequality name (repeatable)");
  ineq->add_option("--beta-sweep", o.beta_sweep, "Pitt exponents start:stop:step");
  ineq->add_option("--out", o.out, "Report path (default: stdout)");

  auto* rep = app.add_subcommand("report", "Merge reports and recompute the verdict");
  rep->add_option("--in", o.inputs, "Report file (repeatable)")->required();
  rep->add_option("--out", o.out, "Merged report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen_signal(o, out);
    if (tr->parsed()) return cmd_transform(o, out);
    if (inv->parsed()) return cmd_inverse(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (ineq->parsed()) return cmd_inequalities(o, out);
    return cmd_report(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_io_kind(e.kind()) ? kExitIo : kExitUsage;
  }
}

}  // namespace woct
