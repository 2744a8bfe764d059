#ifndef LIQ_DETAIL_RNG_HPP
#define LIQ_DETAIL_RNG_HPP

#include <cstdint>

namespace liq {
namespace detail {

/// splitmix64: tiny, fast, bit-exact across platforms. Used everywhere a
/// reproducible stream is needed; std:: distributions are avoided because
/// their output is implementation-defined.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    // multiply-shift; bias is negligible for n << 2^64 and the result is
    // identical on every platform with __uint128_t
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

private:
  std::uint64_t state_;
};

/// Derive an independent stream seed from (seed, index). Scheduling-order
/// independence of parallel work depends on this.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL));
  mix.next_u64();
  return mix.next_u64();
}

}  // namespace detail
}  // namespace liq

#endif  // LIQ_DETAIL_RNG_HPP
