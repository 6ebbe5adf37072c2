#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stepsha/report.hpp"

namespace stepsha {

/// Empirical success probability on a log2 scale.
struct Estimate {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    /// Empty when no trial succeeded.
    std::optional<double> log2_probability;
    /// 95% bounds. With no successes the low bound is -inf and the high bound is log2(3/n).
    double log2_low = 0.0;
    double log2_high = 0.0;

    bool no_successes() const { return !log2_probability.has_value(); }
};

/// Clopper-Pearson interval; throws std::invalid_argument when trials == 0 or successes > trials.
Estimate estimate_probability(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);
Estimate estimate_probability(const SearchReport& report);

std::string format_estimate(const Estimate& e);

}  // namespace stepsha
