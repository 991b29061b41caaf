#ifndef DOMDYN_RNG_HPP
#define DOMDYN_RNG_HPP

#include <cstdint>

namespace domdyn {

// Portable 64-bit generator (splitmix64 recurrence; constants from the
// reference implementation). Used for all instance generation so sequences
// reproduce bit-exactly across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r < threshold);
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace domdyn

#endif  // DOMDYN_RNG_HPP
