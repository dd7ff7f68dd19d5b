#pragma once

#include <cstdint>

namespace ppt {

// Deterministic splitmix64 stream; the only randomness source in the
// library, so runs are reproducible across platforms.
inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline double rng_unit(std::uint64_t& s) {  // in [0, 1)
  return static_cast<double>(splitmix64(s) >> 11) * (1.0 / 9007199254740992.0);
}

inline int rng_below(std::uint64_t& s, int n) {  // in [0, n)
  return static_cast<int>(splitmix64(s) % static_cast<std::uint64_t>(n));
}

}  // namespace ppt
