#ifndef CQZE_RNG_HPP
#define CQZE_RNG_HPP

#include <cstdint>
#include <random>

namespace cqze {

// splitmix64; used only to derive well-separated substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Domains keep unrelated consumers of the same user seed on disjoint
// substreams (noise trials vs. per-bit session streams vs. bit generation).
enum class StreamDomain : std::uint64_t {
  kNoiseTrial = 1,
  kSessionBit = 2,
  kBitstream = 3,
};

/// Seed for the `index`-th substream of `domain` under a user seed. Each
/// (seed, domain, index) triple maps to a fixed value, so substreams can be
/// consumed in any order (or in parallel) without changing results.
constexpr std::uint64_t substream_seed(std::uint64_t seed, StreamDomain domain,
                                       std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ (static_cast<std::uint64_t>(domain) << 56)) + index);
}

/// Deterministic uniform stream. Wraps std::mt19937_64 (bit-exact across
/// platforms by the standard) and converts to doubles without going through
/// std::uniform_real_distribution, whose output is implementation-defined.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cqze

#endif  // CQZE_RNG_HPP
