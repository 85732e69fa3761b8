#pragma once

#include <cstdint>
#include <random>

namespace dynsamp {

/// Seeded uniform generator with named substreams. Substreams derived from
/// (seed, stream_id) are decorrelated, so per-trial draws stay reproducible
/// no matter how trials are scheduled across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(mix(seed, 0x9e3779b97f4a7c15ull)) {}

    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(mix(seed ^ (stream_id * 0x2545f4914f6cdd1dull), stream_id));
    }

    /// Uniform in [0, 1). The bit mapping is explicit so that output is
    /// identical across standard library implementations.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [-eps, eps).
    double uniform_pm(double eps) { return eps * (2.0 * uniform() - 1.0); }

private:
    static std::uint64_t mix(std::uint64_t z, std::uint64_t salt) {
        z += salt + 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
};

}  // namespace dynsamp
