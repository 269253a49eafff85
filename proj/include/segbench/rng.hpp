#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace segbench {

// splitmix64 finalizer; the building block of every RNG stream in the project.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Counter-based stream keyed by (seed, index, purpose). Streams with distinct
// keys are independent, so adding patients or purposes never perturbs the
// draws of existing ones. Fully specified arithmetic: identical sequences on
// every platform.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t index, std::string_view purpose) {
    std::uint64_t k = mix64(seed);
    k = mix64(k ^ index);
    key_ = mix64(k ^ fnv1a64(purpose));
  }

  std::uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++)); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_u64() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Box-Muller; consumes two uniforms per pair, caches the spare.
  double gaussian();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace segbench
