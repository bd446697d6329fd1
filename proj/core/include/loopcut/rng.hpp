#pragma once

#include <cstdint>
#include <random>

namespace loopcut {

/// Deterministic random stream: identical (seed, stream) pairs yield identical
/// draw sequences on every platform; distinct streams derived via substream()
/// are statistically independent.  Randomized solvers give every trial its own
/// substream, so results do not depend on trial execution order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    RandomStream substream(std::uint64_t index) const;

    double uniform01();                                // [0, 1)
    std::uint64_t uniform_below(std::uint64_t bound);  // [0, bound), bound >= 1
    std::uint64_t uniform_in(std::uint64_t lo, std::uint64_t hi);  // inclusive

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace loopcut
