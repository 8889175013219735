#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace symrep {

// mt19937_64 whose seed is derived from (seed, stream) through SplitMix64, so
// sample i of a run can be drawn independently of every other sample.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return engine_(); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    Rng split(std::uint64_t child) const;

    double uniform();
    double normal();
    // uniform on [lo, hi]
    int uniform_int(int lo, int hi);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace symrep
