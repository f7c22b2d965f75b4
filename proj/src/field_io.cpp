#include "woct/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "woct/error.hpp"

namespace woct {

namespace {

constexpr char kFieldMagic[4] = {'O', 'C', 'T', '3'};
constexpr char kWoclctMagic[4] = {'O', 'C', 'W', '6'};
constexpr std::size_t kGridHeaderBytes = 9 * 8;

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

double get_f64(const unsigned char* p) { return std::bit_cast<double>(get_u64(p)); }

void put_grid(std::vector<unsigned char>& out, const Grid3D& g) {
  for (const auto& a : g.axes) put_u64(out, a.count);
  for (const auto& a : g.axes) put_f64(out, a.spacing);
  for (const auto& a : g.axes) put_f64(out, a.origin);
}

Grid3D get_grid(const unsigned char* p, const std::string& path) {
  Grid3D g;
  for (int a = 0; a < 3; ++a) {
    g.axes[a].count = get_u64(p + 8 * a);
    g.axes[a].spacing = get_f64(p + 24 + 8 * a);
    g.axes[a].origin = get_f64(p + 48 + 8 * a);
    if (g.axes[a].count == 0 || g.axes[a].count > (1u << 20) || !(g.axes[a].spacing > 0.0)) {
      throw Error(ErrorKind::MalformedHeader, path + ": invalid grid header");
    }
  }
  return g;
}

void put_values(std::vector<unsigned char>& out, const std::vector<Octonion>& v) {
  for (const auto& x : v)
    for (std::size_t k = 0; k < 8; ++k) put_f64(out, x[k]);
}

void get_values(const unsigned char* p, std::vector<Octonion>& v) {
  for (auto& x : v)
    for (std::size_t k = 0; k < 8; ++k, p += 8) x[k] = get_f64(p);
}

std::vector<unsigned char> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void dump(const std::string& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "short write to " + path);
}

// Validates magic and version; returns the offset past them.
std::size_t check_preamble(const std::vector<unsigned char>& bytes, const char (&magic)[4],
                           std::size_t header_bytes, const std::string& path) {
  if (bytes.size() < 12 + header_bytes) {
    std::ostringstream msg;
    msg << path << ": header needs " << 12 + header_bytes << " bytes, file has " << bytes.size();
    throw Error(ErrorKind::MalformedHeader, msg.str());
  }
  if (std::memcmp(bytes.data(), magic, 4) != 0) {
    throw Error(ErrorKind::MalformedHeader, path + ": bad magic, expected " + std::string(magic, 4));
  }
  const std::uint64_t version = get_u64(bytes.data() + 4);
  if (version != kFieldFileVersion) {
    std::ostringstream msg;
    msg << path << ": version " << version << ", expected " << kFieldFileVersion;
    throw Error(ErrorKind::VersionMismatch, msg.str());
  }
  return 12;
}

void check_payload(std::size_t have, std::size_t points, std::size_t header, const std::string& path) {
  const std::size_t want = header + points * 64;
  if (have != want) {
    std::ostringstream msg;
    msg << path << ": expected " << want << " bytes, found " << have;
    throw Error(ErrorKind::TruncatedPayload, msg.str());
  }
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

SampledField3D read_json_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    Grid3D g;
    const auto& jg = doc.at("grid");
    for (int a = 0; a < 3; ++a) {
      g.axes[a].count = jg.at("counts").at(a).get<std::size_t>();
      g.axes[a].spacing = jg.at("spacing").at(a).get<double>();
      g.axes[a].origin = jg.at("origin").at(a).get<double>();
      if (g.axes[a].count == 0 || !(g.axes[a].spacing > 0.0)) {
        throw Error(ErrorKind::MalformedHeader, path + ": invalid grid");
      }
    }
    if (g.size() > kJsonFixtureMaxPoints) {
      throw Error(ErrorKind::MalformedHeader, path + ": JSON fixtures are limited to 8^3 samples");
    }
    const auto& jv = doc.at("values");
    if (jv.size() != g.size()) {
      std::ostringstream msg;
      msg << path << ": expected " << g.size() << " samples, found " << jv.size();
      throw Error(ErrorKind::TruncatedPayload, msg.str());
    }
    SampledField3D f(g);
    for (std::size_t q = 0; q < g.size(); ++q) {
      if (jv[q].size() != 8) throw Error(ErrorKind::MalformedHeader, path + ": samples need 8 components");
      for (std::size_t k = 0; k < 8; ++k) f.values[q][k] = jv[q][k].get<double>();
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedHeader, path + ": " + e.what());
  }
}

}  // namespace

SampledField3D read_field(const std::string& path) {
  if (is_json_path(path)) return read_json_field(path);
  const auto bytes = slurp(path);
  const std::size_t off = check_preamble(bytes, kFieldMagic, kGridHeaderBytes, path);
  const Grid3D g = get_grid(bytes.data() + off, path);
  check_payload(bytes.size(), g.size(), off + kGridHeaderBytes, path);
  SampledField3D f(g);
  get_values(bytes.data() + off + kGridHeaderBytes, f.values);
  return f;
}

void write_field(const std::string& path, const SampledField3D& f) {
  std::vector<unsigned char> out(kFieldMagic, kFieldMagic + 4);
  out.reserve(12 + kGridHeaderBytes + f.values.size() * 64);
  put_u64(out, kFieldFileVersion);
  put_grid(out, f.grid);
  put_values(out, f.values);
  dump(path, out);
}

WoclctResult read_woclct(const std::string& path) {
  const auto bytes = slurp(path);
  const std::size_t off = check_preamble(bytes, kWoclctMagic, 2 * kGridHeaderBytes, path);
  const Grid3D wg = get_grid(bytes.data() + off, path);
  const Grid3D mg = get_grid(bytes.data() + off + kGridHeaderBytes, path);
  check_payload(bytes.size(), wg.size() * mg.size(), off + 2 * kGridHeaderBytes, path);
  WoclctResult g(wg, mg);
  get_values(bytes.data() + off + 2 * kGridHeaderBytes, g.values);
  return g;
}

void write_woclct(const std::string& path, const WoclctResult& g) {
  std::vector<unsigned char> out(kWoclctMagic, kWoclctMagic + 4);
  put_u64(out, kFieldFileVersion);
  put_grid(out, g.omega_grid);
  put_grid(out, g.mu_grid);
  put_values(out, g.values);
  dump(path, out);
}

}  // namespace woct
