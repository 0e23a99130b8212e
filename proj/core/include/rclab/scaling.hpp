// scaling.hpp
//
// Sweeps over the network size n, the activation rule m(n) = n^(1/3-delta),
// and the empirical checks behind the throughput scaling claim: a log-log
// exponent fit, the Markov interference bound, and the tail event at the
// weakest active pair.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rclab/sim.hpp"

namespace rclab {

struct SweepPlan {
    std::vector<std::uint64_t> n_grid;  // strictly ascending, entries >= 2
    double epsilon = 0.3;               // Pareto tail margin
    double delta = 0.1;                 // activation exponent shrink, in (0, 1/3)
    double beta = 1.0;
    double noise = 1.0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    ActivationPolicy policy = ActivationPolicy::TopM;
    SelectionMode selection = SelectionMode::Spacing;

    void validate() const;  // throws std::domain_error on violation
};

// Fitted log-log throughput slope.
struct ScalingFit {
    double exponent;
    double intercept;
    double r_squared;
    double exponent_stderr;
};

// Empirical probabilities of the proof-chain events at the weakest active
// pair, plus the analytic Markov bound they are checked against. All
// events use the threshold 2 * beta * mean_gain * m.
struct BoundCheck {
    double markov_event_prob;  // P{noise + interference > threshold}
    double markov_bound;       // (noise + (m-1)*mean_gain) / threshold, capped at 1
    double tail_event_prob;    // P{weakest direct gain > threshold}
    double quarter_ratio;      // mean successes / m
};

struct SweepRow {
    std::uint64_t n;
    std::uint64_t m;
    ThroughputEstimate estimate;
    BoundCheck bounds;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool complete = true;
    std::string error;  // nonempty when a grid point aborted the sweep
};

// Activation count m = max(1, round(n^(1/3 - delta))), round half up.
// Requires n >= 2 and 0 < delta < 1/3.
std::uint64_t active_pair_count(std::uint64_t n, double delta);

// Runs one grid point per n: m from active_pair_count, throughput over
// plan.trials slots, bound checks on the same outcomes. Grid point g uses
// seed mix_seed(plan.seed, g). A failing point stops the sweep; rows
// produced so far are preserved and the result is marked incomplete.
SweepResult run_sweep(const SweepPlan& plan, unsigned threads = 1);

// Ordinary least squares of log(mean_M) on log(n). Requires >= 3 rows and
// strictly positive mean_M.
ScalingFit fit_exponent(const std::vector<std::pair<double, double>>& rows);

// Evaluates the proof-chain events on existing outcomes. Requires the
// TopM policy (the weakest active pair is the last of the descending
// gains) and a nonempty outcome list. The mean gain in the threshold is
// the exact closed-form mean of cfg.distribution, not an empirical mean.
BoundCheck bound_checks(const NetworkConfig& cfg,
                        const std::vector<TrialOutcome>& outcomes);

// Reference curve c * n^(1/3) for plotting next to sweep results.
std::vector<std::pair<std::uint64_t, double>> upper_bound_reference(
    const std::vector<std::uint64_t>& n_grid, double c);

}  // namespace rclab
