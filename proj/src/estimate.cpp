#include "stepsha/estimate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace stepsha {

Estimate estimate_probability(std::uint64_t successes, std::uint64_t trials, double confidence) {
    if (trials == 0) throw std::invalid_argument("estimate needs at least one trial");
    if (successes > trials) throw std::invalid_argument("successes exceed trials");
    if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");

    Estimate e;
    e.successes = successes;
    e.trials = trials;
    const double n = static_cast<double>(trials);
    const double s = static_cast<double>(successes);

    if (successes == 0) {
        // Rule of three.
        e.log2_low = -std::numeric_limits<double>::infinity();
        e.log2_high = std::log2(std::min(1.0, 3.0 / n));
        return e;
    }

    const double alpha = 1.0 - confidence;
    const double low = boost::math::ibeta_inv(s, n - s + 1.0, alpha / 2.0);
    const double high = successes == trials ? 1.0 : boost::math::ibeta_inv(s + 1.0, n - s, 1.0 - alpha / 2.0);
    e.log2_probability = std::log2(s / n);
    e.log2_low = std::log2(low);
    e.log2_high = std::log2(high);
    return e;
}

Estimate estimate_probability(const SearchReport& report) {
    return estimate_probability(report.successes, report.trials);
}

std::string format_estimate(const Estimate& e) {
    char buf[256];
    if (e.no_successes()) {
        std::snprintf(buf, sizeof buf,
                      "successes: 0 / %llu\nlog2 p: no successes\n95%% upper bound (rule of three): log2 p <= %.4f\n",
                      static_cast<unsigned long long>(e.trials), e.log2_high);
    } else {
        std::snprintf(buf, sizeof buf, "successes: %llu / %llu\nlog2 p: %.4f\n95%% interval: [%.4f, %.4f]\n",
                      static_cast<unsigned long long>(e.successes), static_cast<unsigned long long>(e.trials),
                      *e.log2_probability, e.log2_low, e.log2_high);
    }
    return buf;
}

}  // namespace stepsha
