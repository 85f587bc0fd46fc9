#pragma once

#include <cstdint>
#include <vector>

#include "son/tensor.hpp"

namespace son {

/// Counter-based random stream. A draw at (seed, counter) is a pure function
/// of those two words, so identical streams replay bit-identically on any
/// platform and sub-streams forked by key are independent of draw order.
/// One stream must never be shared across threads; fork instead.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    explicit RngStream(std::uint64_t seed_ = 0, std::uint64_t counter_ = 0)
        : seed(seed_), counter(counter_) {}

    /// Independent sub-stream; (key-derived seed, counter 0).
    RngStream fork(std::uint64_t key) const;

    /// Uniform in [0, 1); consumes one counter step.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller; consumes two counter steps.
    double normal();

    std::uint64_t next_u64();
};

/// Tensor of i.i.d. standard-normal entries, advancing the stream.
Tensor gaussian(RngStream& stream, std::vector<std::size_t> shape);
/// Tensor of i.i.d. Uniform[lo, hi) entries.
Tensor uniform_tensor(RngStream& stream, std::vector<std::size_t> shape, double lo, double hi);

}  // namespace son
