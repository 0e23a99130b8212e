#include "rclab/sim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "rclab/order_stats.hpp"

namespace rclab {

void NetworkConfig::validate() const {
    if (n < 1) throw std::domain_error("NetworkConfig: n must be positive");
    if (m < 1 || m > n) throw std::domain_error("NetworkConfig: need 1 <= m <= n");
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::domain_error("NetworkConfig: beta must be positive and finite");
    }
    if (!(noise >= 0.0) || !std::isfinite(noise)) {
        throw std::domain_error("NetworkConfig: noise must be nonnegative and finite");
    }
    if (trials < 1) throw std::domain_error("NetworkConfig: trials must be positive");
    if (!distribution) throw std::domain_error("NetworkConfig: distribution is required");
}

std::vector<double> select_active_pairs(const ParentDistribution& d, std::uint64_t n,
                                        std::uint64_t m, ActivationPolicy policy,
                                        SelectionMode mode, UniformStream& stream) {
    if (m < 1 || m > n) {
        throw std::domain_error("select_active_pairs: need 1 <= m <= n");
    }
    if (policy == ActivationPolicy::RandomM) {
        auto gains = sample_iid(d, m, stream);
        std::sort(gains.begin(), gains.end(), std::greater<double>());
        return gains;
    }
    return mode == SelectionMode::NaiveSort
               ? sample_top_order_statistics_naive(d, n, m, stream)
               : sample_top_order_statistics(d, n, m, stream);
}

double sinr(double direct, double interference_sum, double noise) {
    if (!(direct >= 0.0) || !(interference_sum >= 0.0) || !(noise >= 0.0)) {
        throw std::domain_error("sinr: arguments must be nonnegative");
    }
    const double denom = noise + interference_sum;
    if (denom <= 0.0) {
        return direct > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return direct / denom;
}

TrialOutcome run_trial(const NetworkConfig& cfg, UniformStream& stream) {
    const ParentDistribution& d = *cfg.distribution;
    TrialOutcome t;
    t.direct_gains =
        select_active_pairs(d, cfg.n, cfg.m, cfg.policy, cfg.selection, stream);
    const std::size_t m = t.direct_gains.size();
    t.interference.resize(m);
    t.sinr.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        double sum = 0.0;
        for (std::size_t j = 0; j + 1 < m; ++j) sum += sample_one(d, stream);
        t.interference[r] = sum;
        t.sinr[r] = sinr(t.direct_gains[r], sum, cfg.noise);
        if (t.sinr[r] >= cfg.beta) ++t.successes;
    }
    return t;
}

std::vector<TrialOutcome> run_trials(const NetworkConfig& cfg, unsigned threads) {
    cfg.validate();
    const std::uint64_t total = cfg.trials;
    std::vector<TrialOutcome> out(total);

    auto worker = [&cfg, &out](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            Mt19937Stream stream(mix_seed(cfg.seed, t));
            out[t] = run_trial(cfg, stream);
        }
    };

    const std::uint64_t workers =
        std::min<std::uint64_t>(std::max(1u, threads), total);
    if (workers == 1) {
        worker(0, total);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
    return out;
}

ThroughputEstimate summarize_trials(const NetworkConfig& cfg,
                                    const std::vector<TrialOutcome>& outcomes) {
    if (outcomes.empty()) {
        throw std::domain_error("summarize_trials: no outcomes");
    }
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
    for (const TrialOutcome& t : outcomes) {
        sum += t.successes;
        sum_sq += static_cast<std::uint64_t>(t.successes) * t.successes;
    }
    const auto trials = static_cast<std::uint64_t>(outcomes.size());
    const double count = static_cast<double>(trials);

    ThroughputEstimate est;
    est.trials = trials;
    est.mean_M = static_cast<double>(sum) / count;
    est.success_rate = est.mean_M / static_cast<double>(cfg.m);
    if (trials > 1) {
        const double variance = std::max(
            0.0, (static_cast<double>(sum_sq) - static_cast<double>(sum) * est.mean_M) /
                     (count - 1.0));
        est.std_error = std::sqrt(variance / count);
    } else {
        est.std_error = 0.0;
        est.degenerate = true;
    }
    return est;
}

ThroughputEstimate estimate_throughput(const NetworkConfig& cfg, unsigned threads) {
    return summarize_trials(cfg, run_trials(cfg, threads));
}

}  // namespace rclab
