#include "rclab/scaling.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace rclab {

void SweepPlan::validate() const {
    if (n_grid.empty()) throw std::domain_error("SweepPlan: n_grid is empty");
    for (std::size_t g = 0; g < n_grid.size(); ++g) {
        if (n_grid[g] < 2) throw std::domain_error("SweepPlan: grid entries must be >= 2");
        if (g > 0 && n_grid[g] <= n_grid[g - 1]) {
            throw std::domain_error("SweepPlan: n_grid must be strictly ascending");
        }
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::domain_error("SweepPlan: epsilon must be positive and finite");
    }
    if (!(delta > 0.0 && delta < 1.0 / 3.0)) {
        throw std::domain_error("SweepPlan: delta must lie in (0, 1/3)");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::domain_error("SweepPlan: beta must be positive and finite");
    }
    if (!(noise >= 0.0) || !std::isfinite(noise)) {
        throw std::domain_error("SweepPlan: noise must be nonnegative and finite");
    }
    if (trials < 1) throw std::domain_error("SweepPlan: trials must be positive");
}

std::uint64_t active_pair_count(std::uint64_t n, double delta) {
    if (n < 2) throw std::domain_error("active_pair_count: n must be >= 2");
    if (!(delta > 0.0 && delta < 1.0 / 3.0)) {
        throw std::domain_error("active_pair_count: delta must lie in (0, 1/3)");
    }
    const double raw = std::pow(static_cast<double>(n), 1.0 / 3.0 - delta);
    const auto rounded = static_cast<std::uint64_t>(std::llround(raw));
    return std::max<std::uint64_t>(1, rounded);
}

SweepResult run_sweep(const SweepPlan& plan, unsigned threads) {
    plan.validate();
    const auto dist = std::make_shared<ParetoTailDistribution>(plan.epsilon);

    SweepResult result;
    result.rows.reserve(plan.n_grid.size());
    for (std::size_t g = 0; g < plan.n_grid.size(); ++g) {
        try {
            const std::uint64_t n = plan.n_grid[g];
            NetworkConfig cfg;
            cfg.n = n;
            cfg.m = active_pair_count(n, plan.delta);
            cfg.beta = plan.beta;
            cfg.noise = plan.noise;
            cfg.policy = plan.policy;
            cfg.selection = plan.selection;
            cfg.distribution = dist;
            cfg.trials = plan.trials;
            cfg.seed = mix_seed(plan.seed, g);

            const auto outcomes = run_trials(cfg, threads);
            SweepRow row;
            row.n = n;
            row.m = cfg.m;
            row.estimate = summarize_trials(cfg, outcomes);
            if (plan.policy == ActivationPolicy::TopM) {
                row.bounds = bound_checks(cfg, outcomes);
            } else {
                // The proof-chain events are defined for TopM selection only.
                const double nan = std::numeric_limits<double>::quiet_NaN();
                row.bounds = BoundCheck{nan, nan, nan, row.estimate.success_rate};
            }
            result.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            result.complete = false;
            result.error = e.what();
            break;
        }
    }
    return result;
}

ScalingFit fit_exponent(const std::vector<std::pair<double, double>>& rows) {
    if (rows.size() < 3) {
        throw std::domain_error("fit_exponent: need at least 3 rows");
    }
    const auto count = static_cast<double>(rows.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [n, mean_m] : rows) {
        if (!(n > 0.0) || !(mean_m > 0.0)) {
            throw std::domain_error("fit_exponent: rows must have positive n and mean_M");
        }
        sx += std::log(n);
        sy += std::log(mean_m);
    }
    const double x_bar = sx / count;
    const double y_bar = sy / count;

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [n, mean_m] : rows) {
        const double dx = std::log(n) - x_bar;
        const double dy = std::log(mean_m) - y_bar;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (!(sxx > 0.0)) {
        throw std::domain_error("fit_exponent: n values must not all coincide");
    }

    ScalingFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = y_bar - fit.exponent * x_bar;

    double ss_res = 0.0, ss_tot = 0.0;
    for (const auto& [n, mean_m] : rows) {
        const double y = std::log(mean_m);
        const double pred = fit.intercept + fit.exponent * std::log(n);
        ss_res += (y - pred) * (y - pred);
        ss_tot += (y - y_bar) * (y - y_bar);
    }
    // Flat data fits its own constant exactly; report a perfect fit rather
    // than 0/0.
    fit.r_squared = ss_tot > 0.0
                        ? std::min(1.0, std::max(0.0, 1.0 - ss_res / ss_tot))
                        : 1.0;
    fit.exponent_stderr =
        rows.size() > 2 ? std::sqrt(std::max(0.0, ss_res / (count - 2.0)) / sxx) : 0.0;
    return fit;
}

BoundCheck bound_checks(const NetworkConfig& cfg,
                        const std::vector<TrialOutcome>& outcomes) {
    if (outcomes.empty()) {
        throw std::domain_error("bound_checks: no outcomes");
    }
    if (cfg.policy != ActivationPolicy::TopM) {
        throw std::domain_error("bound_checks: defined for the TopM policy only");
    }
    const double mean_gain = cfg.distribution->mean();
    const double m = static_cast<double>(cfg.m);
    const double threshold = 2.0 * cfg.beta * mean_gain * m;

    std::uint64_t markov_events = 0;
    std::uint64_t tail_events = 0;
    std::uint64_t success_sum = 0;
    for (const TrialOutcome& t : outcomes) {
        const std::size_t weakest = t.direct_gains.size() - 1;
        if (cfg.noise + t.interference[weakest] > threshold) ++markov_events;
        if (t.direct_gains[weakest] > threshold) ++tail_events;
        success_sum += t.successes;
    }
    const double count = static_cast<double>(outcomes.size());

    BoundCheck check;
    check.markov_event_prob = static_cast<double>(markov_events) / count;
    check.markov_bound =
        std::min(1.0, (cfg.noise + (m - 1.0) * mean_gain) / threshold);
    check.tail_event_prob = static_cast<double>(tail_events) / count;
    check.quarter_ratio = static_cast<double>(success_sum) / (count * m);
    return check;
}

std::vector<std::pair<std::uint64_t, double>> upper_bound_reference(
    const std::vector<std::uint64_t>& n_grid, double c) {
    if (!(c > 0.0)) {
        throw std::domain_error("upper_bound_reference: c must be positive");
    }
    std::vector<std::pair<std::uint64_t, double>> curve;
    curve.reserve(n_grid.size());
    for (const std::uint64_t n : n_grid) {
        curve.emplace_back(n, c * std::cbrt(static_cast<double>(n)));
    }
    return curve;
}

}  // namespace rclab
