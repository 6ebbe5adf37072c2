#pragma once

#include <cstdint>

namespace stepsha {

/// Counter-based generator: every output is a pure function of (seed, stream, index),
/// so trials can be evaluated in any order or partition without shared state.
/// Built from the SplitMix64 finalizer.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ mix(stream + kGolden) ^ kStreamSalt)) {}

    std::uint64_t operator()(std::uint64_t index) const { return mix(key_ + (index + 1) * kGolden); }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kStreamSalt = 0x2545f4914f6cdd1dULL;
    std::uint64_t key_;
};

}  // namespace stepsha
