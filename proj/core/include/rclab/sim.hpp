// sim.hpp
//
// One time slot of the one-hop network: m source-destination pairs are
// switched on, every active receiver sees its own direct gain against
// noise plus the sum of the other m-1 active transmitters' cross gains,
// and a reception succeeds when SINR >= beta.
//
// Sources and destinations are disjoint index sets (2n logical antennas);
// a node's own transmission never enters its interference sum. Only the
// m direct gains and the m(m-1) cross gains of the active set are ever
// drawn - all links are i.i.d. and selection acts on direct gains alone,
// so the remaining n^2 - m^2 links are irrelevant to the slot.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rclab/dist.hpp"
#include "rclab/rng.hpp"

namespace rclab {

// How the m active pairs are chosen.
enum class ActivationPolicy {
    TopM,     // the m pairs with strongest direct gains
    RandomM,  // a uniformly random m-subset
};

// How TopM selection is realized.
enum class SelectionMode {
    Spacing,    // O(m) spacing sampler for the joint top-m law
    NaiveSort,  // O(n) draw-all-and-sort verification oracle
};

struct NetworkConfig {
    std::uint64_t n = 0;  // source-destination pairs in the network
    std::uint64_t m = 0;  // active pairs per slot, 1 <= m <= n
    double beta = 1.0;    // SINR success threshold, > 0
    double noise = 1.0;   // receiver noise power, >= 0
    ActivationPolicy policy = ActivationPolicy::TopM;
    SelectionMode selection = SelectionMode::Spacing;
    std::shared_ptr<const ParentDistribution> distribution;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::domain_error on violation
};

// One slot realization.
struct TrialOutcome {
    std::vector<double> direct_gains;  // active pairs' gains, descending
    std::vector<double> interference;  // per-receiver cross-gain sums
    std::vector<double> sinr;          // per-receiver SINR
    std::uint32_t successes = 0;       // #{r : sinr[r] >= beta}
};

struct ThroughputEstimate {
    double mean_M = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    double success_rate = 0.0;  // mean_M / m
    bool degenerate = false;    // single-trial sample, std_error not estimable
};

// Direct gains of the active set, descending. TopM draws the joint top-m
// order statistics of n i.i.d. gains; RandomM draws m fresh i.i.d. gains
// (any m-subset's direct gains are i.i.d. by exchangeability) and sorts
// them for uniform downstream handling.
std::vector<double> select_active_pairs(const ParentDistribution& d, std::uint64_t n,
                                        std::uint64_t m, ActivationPolicy policy,
                                        SelectionMode mode, UniformStream& stream);

// direct / (noise + interference_sum). A zero denominator yields +inf for
// a positive numerator (counted as success for any finite beta) and 0
// otherwise.
double sinr(double direct, double interference_sum, double noise);

// One slot: select the active set, draw the m(m-1) cross gains, evaluate
// every receiver, count successes.
TrialOutcome run_trial(const NetworkConfig& cfg, UniformStream& stream);

// cfg.trials independent slots, trial t on a fresh stream seeded
// mix_seed(cfg.seed, t). Outcomes land in per-trial slots, so the result
// is bit-identical for any worker count.
std::vector<TrialOutcome> run_trials(const NetworkConfig& cfg, unsigned threads = 1);

// Mean/SE of the success count over existing outcomes. Accumulates the
// integer success counts exactly, keeping the reduction order-independent.
ThroughputEstimate summarize_trials(const NetworkConfig& cfg,
                                    const std::vector<TrialOutcome>& outcomes);

ThroughputEstimate estimate_throughput(const NetworkConfig& cfg, unsigned threads = 1);

}  // namespace rclab
