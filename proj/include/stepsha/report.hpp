#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stepsha/differential.hpp"

namespace stepsha {

struct StoredCollision {
    std::uint64_t trial = 0;
    CollisionPair pair;

    friend bool operator==(const StoredCollision&, const StoredCollision&) = default;
};

/// Aggregate of one search run. Everything except elapsed_seconds is a pure
/// function of (strategy, seed, budget, steps).
struct SearchReport {
    std::string strategy;
    std::string note;
    Variant variant = Variant::Sha256;
    int steps = 22;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    /// First distinct colliding pairs by trial index, deduplicated on m1, at most kMaxStoredCollisions.
    std::vector<StoredCollision> collisions;
    /// Successful trials not listed in `collisions` (duplicates and overflow).
    std::uint64_t unlisted_successes = 0;
    bool path_checked = false;
    /// First-divergence step -> count of non-colliding trials. Key `steps` means the
    /// trial followed the whole path yet did not collide.
    std::map<int, std::uint64_t> divergence_histogram;
    double elapsed_seconds = 0.0;

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

inline constexpr std::size_t kMaxStoredCollisions = 64;

/// Equality ignoring wall-clock time.
bool same_outcome(const SearchReport& a, const SearchReport& b);

}  // namespace stepsha
