#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace minigolf {

/// Fixed 6-decimal rendering used by every canonical document.
std::string fmt6(double v);

/// Canonical JSON text: object keys sorted, every float printed with
/// 6 decimals. Byte-stable across runs and platforms.
std::string canonical_dump(const nlohmann::json& j);

/// Deterministic splitmix64 stream; used instead of std distributions so
/// generated artifacts are byte-identical everywhere.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(next() % n); }
};

}  // namespace minigolf
