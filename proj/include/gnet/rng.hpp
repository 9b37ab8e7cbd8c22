#pragma once

#include <cstdint>
#include <cmath>

namespace gnet {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Order-sensitive fold of tag/index words into a single 64-bit seed.
// Work-unit seeds (per draw, per cell, ...) are derived this way so results
// do not depend on thread scheduling.
inline std::uint64_t seed_of(std::uint64_t a) {
  std::uint64_t s = a;
  return splitmix64(s);
}
template <class... Rest>
std::uint64_t seed_of(std::uint64_t a, Rest... rest) {
  std::uint64_t s = a ^ (seed_of(static_cast<std::uint64_t>(rest)...) + 0x9E3779B97F4A7C15ull);
  return splitmix64(s);
}

// xoshiro256** with splitmix64 seeding; all sampling in the library goes
// through this generator so runs are reproducible bit-for-bit for a fixed
// seed regardless of the thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // index in [0, n)
  std::uint64_t index(std::uint64_t n) { return next() % n; }

  // standard normal, polar method (rejection keeps it in pure arithmetic)
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gnet
