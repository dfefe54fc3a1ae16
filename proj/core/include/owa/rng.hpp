#ifndef OWA_RNG_HPP
#define OWA_RNG_HPP

#include <cstdint>

namespace owa {

// Counter-based uniform random numbers. Every draw is a pure function of
// (seed, stream, counter), so scenario j / item i can be regenerated in any
// order -- and from any thread -- with bit-identical results.

/// SplitMix64 finalizer: a 64-bit avalanche permutation.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Hash of a (seed, a, b) key with full avalanche in each component.
inline std::uint64_t keyed_bits(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = mix64(seed + 0x9e3779b97f4a7c15ULL);
    z = mix64(z ^ (a + 0x9e3779b97f4a7c15ULL));
    z = mix64(z ^ (b + 0x9e3779b97f4a7c15ULL));
    return z;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double keyed_uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return static_cast<double>(keyed_bits(seed, a, b) >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi); returns lo exactly when lo == hi.
inline double keyed_uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                            double lo, double hi) {
    return lo + keyed_uniform01(seed, a, b) * (hi - lo);
}

/// Uniform integer in {lo, ..., hi} (inclusive bounds).
inline long keyed_uniform_int(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                              long lo, long hi) {
    const auto span = static_cast<unsigned long>(hi - lo + 1);
    const auto offset = static_cast<long>(keyed_uniform01(seed, a, b) * static_cast<double>(span));
    return lo + (offset >= static_cast<long>(span) ? static_cast<long>(span) - 1 : offset);
}

/// Derives an independent child seed from a base seed and a stream tag.
/// Used to keep instance generation, solver sampling and final evaluation
/// on disjoint streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    return mix64(keyed_bits(base, tag, a) ^ mix64(b + 0x9e3779b97f4a7c15ULL));
}

namespace seed_stream {
inline constexpr std::uint64_t kGenerate = 0x67656E;   // instance generation
inline constexpr std::uint64_t kSolve = 0x736F6C;      // solver scenario sampling
inline constexpr std::uint64_t kEvaluate = 0x65766C;   // final high-K evaluation
} // namespace seed_stream

} // namespace owa

#endif // OWA_RNG_HPP
