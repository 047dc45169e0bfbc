#include "holo/random.hpp"

#include <limits>

#include "holo/errors.hpp"

namespace holo {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_item(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return Rng(splitmix(splitmix(seed ^ splitmix(stream)) + index));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw precondition_error("empty range in Rng::uniform");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
    const std::uint64_t n = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % n);
}

}  // namespace holo
