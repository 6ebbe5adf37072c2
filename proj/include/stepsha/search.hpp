#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stepsha/differential.hpp"
#include "stepsha/report.hpp"

namespace stepsha {

// Candidate generators. None of them is a message-modification technique; they
// sample pairs with prescribed word differences and measure how often they collide.

/// Evaluate the template pair unchanged on every trial.
struct Replay {
    CollisionPair pair;
};

/// Randomize the listed message words of the template (same value in both
/// messages) and keep every other word and every word difference.
struct RandomPrefix {
    CollisionPair pair;
    std::vector<int> indices{0, 1, 2, 3, 4, 5, 6, 7};
};

/// Fully random m1, m2 = m1 + deltas word-wise.
struct FixedDeltas {
    Variant variant = Variant::Sha256;
    WordDeltas deltas;
};

struct SearchStrategy {
    std::variant<Replay, RandomPrefix, FixedDeltas> generator;
    std::optional<DifferentialPath> target_path;
    /// Permits FIXED_DELTAS with all-zero deltas (every trial trivially collides).
    bool allow_trivial = false;

    Variant variant() const;
};

/// Throws std::invalid_argument when the strategy is malformed for `steps`.
void validate(const SearchStrategy& strategy, int steps);
std::string describe(const SearchStrategy& strategy);

struct TrialOutcome {
    CollisionPair pair;
    bool collided = false;
    std::optional<bool> path_matched;
    std::optional<int> first_divergence_step;

    friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

CollisionPair generate_candidate(const SearchStrategy& strategy, std::uint64_t trial_index, std::uint64_t seed,
                                 int steps);

/// Deterministic in (strategy, trial_index, seed, steps, iv). Does not re-validate the strategy.
TrialOutcome run_trial(const SearchStrategy& strategy, std::uint64_t trial_index, std::uint64_t seed, int steps,
                       const RegisterState& iv);
TrialOutcome run_trial(const SearchStrategy& strategy, std::uint64_t trial_index, std::uint64_t seed, int steps);

struct SearchConfig {
    SearchStrategy strategy;
    std::uint64_t budget = std::uint64_t{1} << 20;
    std::uint64_t seed = 0;
    /// 0 selects the available hardware parallelism.
    int workers = 0;
    int steps = 22;
    /// Defaults to the variant's standard IV.
    std::optional<RegisterState> iv;
};

/// OpenMP-parallel search over trial indices [0, budget). The report does not
/// depend on `workers`.
SearchReport search(const SearchConfig& config);

/// Single-threaded reference; produces the same report as search().
SearchReport search_serial(const SearchConfig& config);

int default_workers();

}  // namespace stepsha
