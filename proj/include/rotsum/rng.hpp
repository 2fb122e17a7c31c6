#pragma once

#include <cstdint>
#include <string_view>

namespace rotsum {

// Counter-based splittable RNG.  A stream is keyed by (seed, tag, index);
// draws inside a stream walk the splitmix64 sequence.  Sample i of an
// experiment always sees the same stream no matter which thread runs it,
// which is what makes parallel runs byte-reproducible.
inline std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

constexpr std::uint64_t stream_tag(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    state_ = mix64(seed ^ 0x5851f42d4c957f2dULL);
    state_ = mix64(state_ ^ tag);
    state_ = mix64(state_ ^ index);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1), 53 random bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

}  // namespace rotsum
