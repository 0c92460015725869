#pragma once

#include <cstdint>

namespace bcube {

/// Counter-based generator: the k-th draw of stream (seed, stream) is a pure
/// function of (seed, stream, k), so instances can be generated in any order
/// or on any thread and still agree.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Fair +-1.
    double sign() { return (next() >> 63) ? 1.0 : -1.0; }
    /// Standard normal (Box-Muller, one output per call).
    double normal();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace bcube
