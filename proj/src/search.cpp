#include "stepsha/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stepsha/counter_rng.hpp"

namespace stepsha {

namespace {

constexpr const char* kStrategyNote =
    "candidate generators sample pairs with fixed word differences; rates are per trial "
    "and are not a message-modification attack";

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string index_list(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<int> nonzero_indices(const WordDeltas& d) {
    std::vector<int> out;
    for (int i = 0; i < 16; ++i)
        if (!d.dw[static_cast<std::size_t>(i)].is_zero()) out.push_back(i);
    return out;
}

/// Per-partition running totals. Trials must be added in increasing index order.
struct Accumulator {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::vector<StoredCollision> collisions;
    std::map<int, std::uint64_t> histogram;

    void add(std::uint64_t trial, TrialOutcome&& o) {
        ++trials;
        if (o.collided) {
            ++successes;
            // Later trials of this partition can never displace an earlier distinct m1.
            if (collisions.size() < kMaxStoredCollisions &&
                std::none_of(collisions.begin(), collisions.end(),
                             [&](const StoredCollision& c) { return c.pair.m1 == o.pair.m1; })) {
                collisions.push_back(StoredCollision{trial, std::move(o.pair)});
            }
        } else if (o.first_divergence_step) {
            ++histogram[*o.first_divergence_step];
        }
    }
};

SearchReport merge(const SearchConfig& cfg, std::vector<Accumulator>& parts) {
    SearchReport r;
    r.strategy = describe(cfg.strategy);
    r.note = kStrategyNote;
    r.variant = cfg.strategy.variant();
    r.steps = cfg.steps;
    r.seed = cfg.seed;
    r.path_checked = cfg.strategy.target_path.has_value();

    std::vector<StoredCollision> all;
    for (Accumulator& a : parts) {
        r.trials += a.trials;
        r.successes += a.successes;
        for (const auto& [step, n] : a.histogram) r.divergence_histogram[step] += n;
        std::move(a.collisions.begin(), a.collisions.end(), std::back_inserter(all));
    }
    std::sort(all.begin(), all.end(),
              [](const StoredCollision& x, const StoredCollision& y) { return x.trial < y.trial; });
    for (StoredCollision& c : all) {
        if (r.collisions.size() == kMaxStoredCollisions) break;
        const bool dup = std::any_of(r.collisions.begin(), r.collisions.end(),
                                     [&](const StoredCollision& s) { return s.pair.m1 == c.pair.m1; });
        if (!dup) r.collisions.push_back(std::move(c));
    }
    r.unlisted_successes = r.successes - r.collisions.size();
    return r;
}

RegisterState resolve_iv(const SearchConfig& cfg) {
    const Sha2Params& p = params_for(cfg.strategy.variant());
    if (cfg.iv) {
        check_width(*cfg.iv, p);
        return *cfg.iv;
    }
    return standard_iv(p);
}

void check_config(const SearchConfig& cfg) {
    if (cfg.budget < 1) throw std::invalid_argument("budget must be at least 1");
    if (cfg.workers < 0) throw std::invalid_argument("workers must be non-negative");
    validate(cfg.strategy, cfg.steps);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Variant SearchStrategy::variant() const {
    return std::visit(overloaded{[](const Replay& s) { return s.pair.variant; },
                                 [](const RandomPrefix& s) { return s.pair.variant; },
                                 [](const FixedDeltas& s) { return s.variant; }},
                      generator);
}

void validate(const SearchStrategy& strategy, int steps) {
    const Variant v = strategy.variant();
    const Sha2Params& p = params_for(v);
    check_steps(steps, p);
    std::visit(overloaded{[](const Replay& s) { check_pair(s.pair); },
                          [](const RandomPrefix& s) {
                              check_pair(s.pair);
                              const WordDeltas d = extract_word_deltas(s.pair);
                              for (int i : s.indices) {
                                  if (i < 0 || i > 15) {
                                      throw std::invalid_argument("random-prefix index " + std::to_string(i) +
                                                                  " outside 0..15");
                                  }
                                  if (!d.dw[static_cast<std::size_t>(i)].is_zero()) {
                                      throw std::invalid_argument("random-prefix index " + std::to_string(i) +
                                                                  " carries a nonzero word difference");
                                  }
                              }
                          },
                          [&](const FixedDeltas& s) {
                              for (const Delta& d : s.deltas.dw) {
                                  if (!p.fits(d.value)) throw std::invalid_argument("word delta exceeds width");
                              }
                              if (s.deltas.is_zero() && !strategy.allow_trivial) {
                                  throw std::invalid_argument(
                                      "fixed-deltas with all-zero deltas only yields trivial collisions "
                                      "(override with allow_trivial)");
                              }
                          }},
               strategy.generator);
    if (strategy.target_path) {
        if (strategy.target_path->variant != v) throw std::invalid_argument("target path variant differs");
        if (strategy.target_path->steps.size() != static_cast<std::size_t>(steps)) {
            throw std::invalid_argument("target path has " + std::to_string(strategy.target_path->steps.size()) +
                                        " steps, search uses " + std::to_string(steps));
        }
    }
}

std::string describe(const SearchStrategy& strategy) {
    std::string s = std::visit(
        overloaded{[](const Replay&) { return std::string("replay"); },
                   [](const RandomPrefix& r) { return "random-prefix(indices=" + index_list(r.indices) + ")"; },
                   [](const FixedDeltas& f) {
                       return "fixed-deltas(nonzero=" + index_list(nonzero_indices(f.deltas)) + ")";
                   }},
        strategy.generator);
    s += " ";
    s += variant_name(strategy.variant());
    if (strategy.target_path) s += " +path";
    return s;
}

CollisionPair generate_candidate(const SearchStrategy& strategy, std::uint64_t trial_index, std::uint64_t seed,
                                 int steps) {
    const Sha2Params& p = params_for(strategy.variant());
    const CounterRng rng(seed, trial_index);
    return std::visit(overloaded{[](const Replay& s) { return s.pair; },
                                 [&](const RandomPrefix& s) {
                                     CollisionPair c = s.pair;
                                     c.step_count = steps;
                                     for (int i : s.indices) {
                                         const auto idx = static_cast<std::size_t>(i);
                                         const Word w = rng(idx) & p.mask;
                                         c.m1[idx] = w;
                                         c.m2[idx] = w;
                                     }
                                     return c;
                                 },
                                 [&](const FixedDeltas& s) {
                                     CollisionPair c{s.variant, steps, {}, {}};
                                     for (std::size_t i = 0; i < 16; ++i) c.m1[i] = rng(i) & p.mask;
                                     c.m2 = apply_word_deltas(c.m1, s.deltas, p);
                                     return c;
                                 }},
                      strategy.generator);
}

TrialOutcome run_trial(const SearchStrategy& strategy, std::uint64_t trial_index, std::uint64_t seed, int steps,
                       const RegisterState& iv) {
    const Sha2Params& p = params_for(strategy.variant());
    check_steps(steps, p);
    TrialOutcome out;
    out.pair = generate_candidate(strategy, trial_index, seed, steps);
    out.pair.step_count = steps;

    const auto n = static_cast<std::size_t>(steps);
    std::array<Word, 80> w1, w2;
    expand_message_into(out.pair.m1, std::span<Word>(w1.data(), n), p);
    expand_message_into(out.pair.m2, std::span<Word>(w2.data(), n), p);

    const DifferentialPath* path = strategy.target_path ? &*strategy.target_path : nullptr;
    RegisterState s1 = iv, s2 = iv;
    for (std::size_t t = 0; t < n; ++t) {
        s1 = step(s1, w1[t], p.k[t], p);
        s2 = step(s2, w2[t], p.k[t], p);
        if (path && !out.first_divergence_step && state_delta(s1, s2, p) != path->steps[t]) {
            out.first_divergence_step = static_cast<int>(t);
        }
    }
    // Feedforward with a shared IV preserves equality; compared explicitly anyway.
    RegisterState h1 = s1, h2 = s2;
    for (std::size_t i = 0; i < 8; ++i) {
        h1[i] = (h1[i] + iv[i]) & p.mask;
        h2[i] = (h2[i] + iv[i]) & p.mask;
    }
    out.collided = h1 == h2;
    if (path) {
        out.path_matched = !out.first_divergence_step.has_value();
        if (!out.collided && !out.first_divergence_step) out.first_divergence_step = steps;
    }
    return out;
}

TrialOutcome run_trial(const SearchStrategy& strategy, std::uint64_t trial_index, std::uint64_t seed, int steps) {
    return run_trial(strategy, trial_index, seed, steps, standard_iv(params_for(strategy.variant())));
}

int default_workers() {
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads());
#else
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
#endif
}

SearchReport search(const SearchConfig& config) {
    check_config(config);
    const auto start = std::chrono::steady_clock::now();
    const RegisterState iv = resolve_iv(config);
    const int workers = config.workers > 0 ? config.workers : default_workers();
    const std::uint64_t budget = config.budget;

    // Contiguous index ranges, one accumulator each; a partition is walked in index order.
    const auto parts = static_cast<std::int64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), budget));
    std::vector<Accumulator> acc(static_cast<std::size_t>(parts));

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t part = 0; part < parts; ++part) {
        const auto u = static_cast<std::uint64_t>(part);
        const std::uint64_t begin = budget / static_cast<std::uint64_t>(parts) * u +
                                    std::min<std::uint64_t>(u, budget % static_cast<std::uint64_t>(parts));
        const std::uint64_t len = budget / static_cast<std::uint64_t>(parts) +
                                  (u < budget % static_cast<std::uint64_t>(parts) ? 1 : 0);
        Accumulator& a = acc[static_cast<std::size_t>(part)];
        for (std::uint64_t i = begin; i < begin + len; ++i) {
            a.add(i, run_trial(config.strategy, i, config.seed, config.steps, iv));
        }
    }

    SearchReport report = merge(config, acc);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SearchReport search_serial(const SearchConfig& config) {
    check_config(config);
    const auto start = std::chrono::steady_clock::now();
    const RegisterState iv = resolve_iv(config);
    std::vector<Accumulator> acc(1);
    for (std::uint64_t i = 0; i < config.budget; ++i) {
        acc[0].add(i, run_trial(config.strategy, i, config.seed, config.steps, iv));
    }
    SearchReport report = merge(config, acc);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

bool same_outcome(const SearchReport& a, const SearchReport& b) {
    SearchReport x = a;
    x.elapsed_seconds = b.elapsed_seconds;
    return x == b;
}

}  // namespace stepsha
