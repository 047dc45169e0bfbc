#pragma once

#include <cstdint>
#include <random>

namespace holo {

/// Seeded generator with a platform-independent integer draw
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for item `index`, stable under any scheduling.
    static Rng for_item(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace holo
