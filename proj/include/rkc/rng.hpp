#ifndef RKC_RNG_HPP
#define RKC_RNG_HPP

#include <cstdint>

namespace rkc {

/// Counter-based splittable random stream.
///
/// Draw j of trial i under (seed, stream) is a pure function of the key, so
/// trials can be evaluated in any order or on any number of workers and still
/// replay bit-for-bit. The exact schedule, for cross-implementation replay:
///
///   mix(z)  = splitmix64 finalizer:
///             z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///             z ^ (z >> 31)
///   GOLDEN  = 0x9E3779B97F4A7C15
///   base    = mix(mix(mix(seed + GOLDEN) ^ (GOLDEN * (stream + 1)))
///                 ^ (GOLDEN * (trial + 1)))
///   draw j  = mix(base + GOLDEN * (j + 1))
///
/// Bounded draws use rejection below the largest multiple of the bound, so
/// they are exactly uniform.
class SplitRng {
  public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    SplitRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
        : base_(mix(mix(mix(seed + kGolden) ^ (kGolden * (stream + 1))) ^ (kGolden * (trial + 1)))) {}

    explicit SplitRng(std::uint64_t seed) : SplitRng(seed, 0, 0) {}

    std::uint64_t next() { return mix(base_ + kGolden * (++counter_)); }

    /// Uniform value in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int digit(int q) { return (int)below((std::uint64_t)q); }

  private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace rkc

#endif
