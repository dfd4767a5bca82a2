#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include "proxdeg/geometry.hpp"
#include "proxdeg/point_set.hpp"

namespace proxdeg {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based 64-bit generator. Output i of stream (seed, id) is
/// mix64(key + (i + 1) * golden) with key = mix64(seed ^ mix64(id + golden)),
/// so every (seed, id) pair names an independent, reproducible stream and
/// any position can be reached without replaying earlier draws.
class RandomStream {
public:
    using result_type = std::uint64_t;

    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
        : key_(mix64(seed ^ mix64(stream_id + kGolden))) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * kGolden);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    std::uint64_t position() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// m independent uniform points in the region. Rectangle unions pick a
/// rectangle with probability proportional to its area; the rotated square
/// uses rejection from its bounding box.
PointSet sample_uniform(const Region& region, std::size_t m, RandomStream& stream);

}  // namespace proxdeg
