#ifndef ACCA_RNG_HPP
#define ACCA_RNG_HPP

#include <cstdint>
#include <random>

namespace acca {

// Deterministic random source. The engine is std::mt19937_64, whose
// output sequence for a given seed is fixed by the standard, so the
// same seed reproduces the same trajectory on every platform. The
// distribution helpers below avoid std::uniform_*_distribution, whose
// algorithms are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        ++draws_;
        return engine_();
    }

    // Uniform double in [0, 1) with 53 random bits. One raw draw.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in {0, ..., n-1} by 128-bit multiply-shift.
    // One raw draw; per-outcome bias is below n / 2^64, which is under
    // 1e-12 for every n used by the samplers (n <= 2^40).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Number of raw engine extractions so far; used to test the
    // fixed-draw-count contracts of the samplers.
    std::uint64_t raw_draws() const { return draws_; }

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

// SplitMix64 finalizer; full-period mixing of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable derivation of substream seeds: feeding the same words in the
// same order always yields the same seed, and distinct word sequences
// decorrelate. Used to give every (cell, replicate) its own stream.
inline std::uint64_t derive_seed(std::uint64_t base) { return mix64(base); }

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t word, Rest... rest) {
    return derive_seed(mix64(base ^ mix64(word)), rest...);
}

}  // namespace acca

#endif  // ACCA_RNG_HPP
