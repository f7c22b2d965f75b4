#pragma once

// FieldFile: binary octonion fields.
//
//   bytes 0..3   "OCT3"
//   u64          version (1)
//   u64 x 3      axis counts
//   f64 x 3      spacings
//   f64 x 3      origins
//   f64 x 8 x N  samples, axis 3 fastest, components e0..e7
//
// All numbers little-endian. Windowed transform results use the same layout
// with magic "OCW6" and two grid headers (omega, then mu); samples run
// mu-outer, omega-inner.
//
// Paths ending in ".json" are read as a text fixture instead:
//   {"grid": {"counts": [..], "spacing": [..], "origin": [..]},
//    "values": [[c0, ..., c7], ...]}
// limited to 8^3 samples.

#include <cstdint>
#include <string>

#include "woct/grid.hpp"

namespace woct {

inline constexpr std::uint64_t kFieldFileVersion = 1;
inline constexpr std::size_t kJsonFixtureMaxPoints = 512;

SampledField3D read_field(const std::string& path);
void write_field(const std::string& path, const SampledField3D& f);

WoclctResult read_woclct(const std::string& path);
void write_woclct(const std::string& path, const WoclctResult& g);

}  // namespace woct
