// rng.hpp
//
// Deterministic random streams and the seed-derivation contract.
//
// Every stochastic routine in this library consumes uniforms from a
// caller-supplied stream, so a result is a pure function of the seed(s)
// feeding it. Substreams are derived with mix_seed(), a fixed 64-bit
// integer hash (SplitMix64 finalizer), so that per-trial and per-grid
// streams are independent of scheduling and worker count:
//
//   grid seed   = mix_seed(master_seed, grid_index)
//   trial seed  = mix_seed(grid_seed, trial_index)

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rclab {

// SplitMix64 finalizer (Steele, Lea & Flood; same constants as
// java.util.SplittableRandom). Bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Derives the substream seed for `index` under `seed`.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
}

// Source of i.i.d. uniforms on [0,1). Implementations own their state;
// two streams never interact.
class UniformStream {
public:
    virtual ~UniformStream() = default;
    virtual double next() = 0;
};

// mt19937_64-backed stream. The engine and the bits-to-double mapping
// ((x >> 11) * 2^-53) are both pinned, so sequences are reproducible
// across platforms for a given seed.
class Mt19937Stream final : public UniformStream {
public:
    explicit Mt19937Stream(std::uint64_t seed) : engine_(seed) {}

    double next() override {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

// Exp(1) variate by inverse transform; exact at u = 0.
inline double standard_exponential(UniformStream& stream) {
    return -std::log1p(-stream.next());
}

}  // namespace rclab
