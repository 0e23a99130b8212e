// dist.hpp
//
// Channel-power parent distributions for the random connection model.
//
// A link's channel power is drawn i.i.d. from a common parent law. The
// admissible class here is laws on [0, inf) with finite mean and finite
// variance; ParetoTailDistribution is the heavy-tailed member of record,
// ExponentialDistribution a light-tailed comparison member.
//
// Upper-tail evaluations (survival, upper_quantile) are first-class
// because the sweep machinery probes quantiles at 1 - m/n with n up to
// 1e8, where forming 1 - u in doubles would destroy the tail.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "rclab/rng.hpp"

namespace rclab {

struct Moments {
    double mean;
    double variance;
};

// Abstract parent law on [0, inf). Immutable after construction and
// safely shareable across threads.
class ParentDistribution {
public:
    virtual ~ParentDistribution() = default;

    // Density f(x); zero for x < 0. Throws std::domain_error on non-finite x.
    virtual double density(double x) const = 0;

    // Cumulative F(x); 0 for x <= 0, nondecreasing, -> 1.
    virtual double cumulative(double x) const = 0;

    // Survival 1 - F(x), evaluated without cancellation where possible.
    virtual double survival(double x) const;

    // Smallest x with F(x) >= u, for 0 <= u < 1. Default is bisection on
    // cumulative() to 1e-12 absolute in u-space; concrete laws override
    // with closed forms.
    virtual double quantile(double u) const;

    // quantile(1 - tail) for 0 < tail <= 1, computed directly from the
    // tail mass so that tails down to ~1e-300 keep full precision.
    virtual double upper_quantile(double tail) const;

    virtual double mean() const = 0;
    virtual double variance() const = 0;

    // x * f(x) / (1 - F(x)) for x > 0. Throws std::runtime_error when the
    // survival underflows to zero. For laws with a regularly varying tail
    // this ratio converges to the tail index as x grows.
    virtual double von_mises_ratio(double x) const;

    virtual std::string name() const = 0;

protected:
    double quantile_by_bisection(double u) const;
};

Moments moments(const ParentDistribution& d);

// One inverse-transform draw.
inline double sample_one(const ParentDistribution& d, UniformStream& stream) {
    return d.quantile(stream.next());
}

// `count` inverse-transform draws; a deterministic function of the stream
// state (no rejection steps).
std::vector<double> sample_iid(const ParentDistribution& d, std::size_t count,
                               UniformStream& stream);

// Pareto-type law with density (2+eps) * (1+x)^-(3+eps) on x >= 0.
//
//   F(x)        = 1 - (1+x)^-(2+eps)
//   quantile(u) = (1-u)^(-1/(2+eps)) - 1
//   mean        = 1/(1+eps),  variance finite for every eps > 0
//
// eps is the tail margin beyond the finite-variance boundary: the tail
// index is 2+eps, and eps <= 0 (infinite variance) is rejected at
// construction.
class ParetoTailDistribution final : public ParentDistribution {
public:
    explicit ParetoTailDistribution(double epsilon);

    double density(double x) const override;
    double cumulative(double x) const override;
    double survival(double x) const override;
    double quantile(double u) const override;
    double upper_quantile(double tail) const override;
    double mean() const override;
    double variance() const override;
    std::string name() const override { return "pareto"; }

    double epsilon() const { return epsilon_; }
    // Tail index 2+eps; also the large-x limit of von_mises_ratio().
    double tail_index() const { return 2.0 + epsilon_; }

private:
    double epsilon_;
};

// Standard exponential law with the given rate.
class ExponentialDistribution final : public ParentDistribution {
public:
    explicit ExponentialDistribution(double rate);

    double density(double x) const override;
    double cumulative(double x) const override;
    double survival(double x) const override;
    double quantile(double u) const override;
    double upper_quantile(double tail) const override;
    double mean() const override;
    double variance() const override;
    std::string name() const override { return "exponential"; }

    double rate() const { return rate_; }

private:
    double rate_;
};

}  // namespace rclab
