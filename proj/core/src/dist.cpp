#include "rclab/dist.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rclab {

namespace {

void require_probability(double u, const char* where) {
    if (!(u >= 0.0 && u < 1.0)) {
        throw std::domain_error(std::string(where) + ": u must lie in [0, 1)");
    }
}

void require_tail(double tail, const char* where) {
    if (!(tail > 0.0 && tail <= 1.0)) {
        throw std::domain_error(std::string(where) + ": tail mass must lie in (0, 1]");
    }
}

void require_finite(double x, const char* where) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(where) + ": argument must be finite");
    }
}

}  // namespace

double ParentDistribution::survival(double x) const {
    return 1.0 - cumulative(x);
}

double ParentDistribution::quantile(double u) const {
    require_probability(u, "quantile");
    return quantile_by_bisection(u);
}

double ParentDistribution::upper_quantile(double tail) const {
    require_tail(tail, "upper_quantile");
    return quantile(1.0 - tail);
}

double ParentDistribution::quantile_by_bisection(double u) const {
    if (u <= cumulative(0.0)) return 0.0;

    // Grow the bracket until it covers u, then bisect. The loop count is
    // generous; doubles exhaust after ~1100 halvings from any bracket.
    double lo = 0.0;
    double hi = 1.0;
    int grow = 0;
    while (cumulative(hi) < u) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 1100) {
            throw std::runtime_error("quantile_by_bisection: bracket growth failed");
        }
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = cumulative(mid);
        if (std::fabs(fm - u) <= 1e-12) return mid;
        (fm < u ? lo : hi) = mid;
    }
    return hi;
}

double ParentDistribution::von_mises_ratio(double x) const {
    require_finite(x, "von_mises_ratio");
    if (!(x > 0.0)) {
        throw std::domain_error("von_mises_ratio: x must be positive");
    }
    const double s = survival(x);
    if (!(s > 0.0)) {
        throw std::runtime_error("von_mises_ratio: survival vanished at x");
    }
    return x * density(x) / s;
}

Moments moments(const ParentDistribution& d) {
    return Moments{d.mean(), d.variance()};
}

std::vector<double> sample_iid(const ParentDistribution& d, std::size_t count,
                               UniformStream& stream) {
    if (count == 0) {
        throw std::domain_error("sample_iid: count must be positive");
    }
    std::vector<double> out(count);
    for (double& v : out) v = d.quantile(stream.next());
    return out;
}

// ---------------------------------------------------------------------------
// ParetoTailDistribution

ParetoTailDistribution::ParetoTailDistribution(double epsilon) : epsilon_(epsilon) {
    if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
        throw std::invalid_argument(
            "ParetoTailDistribution: epsilon must be finite and > 0 "
            "(variance diverges otherwise)");
    }
}

double ParetoTailDistribution::density(double x) const {
    require_finite(x, "density");
    if (x < 0.0) return 0.0;
    const double alpha = tail_index();
    return (alpha) * std::exp(-(alpha + 1.0) * std::log1p(x));
}

double ParetoTailDistribution::cumulative(double x) const {
    if (std::isnan(x)) return x;
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return -std::expm1(-tail_index() * std::log1p(x));
}

double ParetoTailDistribution::survival(double x) const {
    if (std::isnan(x)) return x;
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    return std::exp(-tail_index() * std::log1p(x));
}

double ParetoTailDistribution::quantile(double u) const {
    require_probability(u, "quantile");
    return std::expm1(-std::log1p(-u) / tail_index());
}

double ParetoTailDistribution::upper_quantile(double tail) const {
    require_tail(tail, "upper_quantile");
    return std::expm1(-std::log(tail) / tail_index());
}

double ParetoTailDistribution::mean() const {
    return 1.0 / (1.0 + epsilon_);
}

double ParetoTailDistribution::variance() const {
    // Shifted-Pareto second moment: alpha/(alpha-2) - (alpha/(alpha-1))^2
    // with alpha = 2+eps; finite because eps > 0.
    const double alpha = tail_index();
    const double m1 = alpha / (alpha - 1.0);
    return alpha / (alpha - 2.0) - m1 * m1;
}

// ---------------------------------------------------------------------------
// ExponentialDistribution

ExponentialDistribution::ExponentialDistribution(double rate) : rate_(rate) {
    if (!(std::isfinite(rate) && rate > 0.0)) {
        throw std::invalid_argument("ExponentialDistribution: rate must be finite and > 0");
    }
}

double ExponentialDistribution::density(double x) const {
    require_finite(x, "density");
    if (x < 0.0) return 0.0;
    return rate_ * std::exp(-rate_ * x);
}

double ExponentialDistribution::cumulative(double x) const {
    if (std::isnan(x)) return x;
    if (x <= 0.0) return 0.0;
    return -std::expm1(-rate_ * x);
}

double ExponentialDistribution::survival(double x) const {
    if (std::isnan(x)) return x;
    if (x <= 0.0) return 1.0;
    return std::exp(-rate_ * x);
}

double ExponentialDistribution::quantile(double u) const {
    require_probability(u, "quantile");
    return -std::log1p(-u) / rate_;
}

double ExponentialDistribution::upper_quantile(double tail) const {
    require_tail(tail, "upper_quantile");
    return -std::log(tail) / rate_;
}

double ExponentialDistribution::mean() const {
    return 1.0 / rate_;
}

double ExponentialDistribution::variance() const {
    return 1.0 / (rate_ * rate_);
}

}  // namespace rclab
