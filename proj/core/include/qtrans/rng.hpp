#pragma once

#include <cstdint>

namespace qtrans {

/// Counter-based generator: the n-th draw of stream (seed, stream_id) is a pure
/// function of (seed, stream_id, n), so parallel trajectory sampling is
/// independent of thread schedule.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    /// Uniform double in [0, 1).
    double uniform() { return to_unit(next()); }

    uint64_t next() { return mix(seed_, stream_, counter_++); }

    static uint64_t mix(uint64_t seed, uint64_t stream, uint64_t counter);
    static double to_unit(uint64_t bits) {
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t counter_ = 0;
};

inline uint64_t CounterRng::mix(uint64_t seed, uint64_t stream, uint64_t counter) {
    // splitmix64 finalizer applied to a seed/stream/counter combination
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1) + 0xbf58476d1ce4e5b9ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace qtrans
