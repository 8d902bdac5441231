#ifndef IM_RNG_HPP
#define IM_RNG_HPP

#include <cstdint>
#include <random>

namespace im {

// Deterministic random stream with counter-derived substreams.
// Doubles are produced from the raw 64-bit output so results are
// bit-identical across platforms and worker counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform draw strictly inside (0, 1).
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Integer in {0, ..., n-1}.
  int uniform_int(int n) {
    return static_cast<int>(uniform01() * n) % n;
  }

  // Independent stream derived from (seed, index); order of substream
  // creation does not matter.
  Rng substream(std::uint64_t index) const {
    return Rng(mix(seed_ ^ mix(index + 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace im

#endif
