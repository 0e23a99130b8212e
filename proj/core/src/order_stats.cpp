#include "rclab/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rclab {

FalkNormalization falk_constants(const ParentDistribution& d, OrderStatSpec spec) {
    if (spec.i < 1 || spec.i >= spec.n) {
        throw std::domain_error("falk_constants: need 1 <= i < n");
    }
    const double tail = static_cast<double>(spec.i) / static_cast<double>(spec.n);
    const double center = d.upper_quantile(tail);
    const double fd = d.density(center);
    if (!(fd > 0.0)) {
        throw std::runtime_error("falk_constants: density vanishes at centering point");
    }
    const double scale =
        std::sqrt(static_cast<double>(spec.i)) / (static_cast<double>(spec.n) * fd);
    return FalkNormalization{center, scale};
}

std::vector<double> sample_top_order_statistics(const ParentDistribution& d,
                                                std::uint64_t n, std::uint64_t m,
                                                UniformStream& stream) {
    if (m < 1 || m > n) {
        throw std::domain_error("sample_top_order_statistics: need 1 <= m <= n");
    }
    std::vector<double> out;
    out.reserve(m);
    double log_u = 0.0;  // log of the current descending uniform order statistic
    for (std::uint64_t k = 0; k < m; ++k) {
        log_u -= standard_exponential(stream) / static_cast<double>(n - k);
        // 1 - U computed as -expm1(log U); clamped away from an exact zero
        // so the upper-tail quantile stays finite on the measure-zero event
        // of a zero spacing.
        const double tail =
            std::max(-std::expm1(log_u), std::numeric_limits<double>::min());
        out.push_back(d.upper_quantile(tail));
    }
    return out;
}

std::vector<double> sample_top_order_statistics_naive(const ParentDistribution& d,
                                                      std::uint64_t n, std::uint64_t m,
                                                      UniformStream& stream) {
    if (m < 1 || m > n) {
        throw std::domain_error("sample_top_order_statistics_naive: need 1 <= m <= n");
    }
    // Sorting the uniforms and mapping the top m through the (monotone)
    // quantile equals sorting the mapped values, and skips n - m
    // quantile evaluations.
    std::vector<double> u(n);
    for (double& v : u) v = stream.next();
    std::partial_sort(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(m), u.end(),
                      std::greater<double>());
    std::vector<double> out;
    out.reserve(m);
    for (std::uint64_t k = 0; k < m; ++k) out.push_back(d.quantile(u[k]));
    return out;
}

double standard_normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

double ks_statistic_vs_normal(std::vector<double> samples) {
    if (samples.empty()) {
        throw std::domain_error("ks_statistic_vs_normal: empty sample");
    }
    std::sort(samples.begin(), samples.end());
    const double count = static_cast<double>(samples.size());
    double dist = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double phi = standard_normal_cdf(samples[k]);
        const double upper = static_cast<double>(k + 1) / count - phi;
        const double lower = phi - static_cast<double>(k) / count;
        dist = std::max(dist, std::max(upper, lower));
    }
    return dist;
}

NormalityDiagnostic normality_diagnostic(const ParentDistribution& d, OrderStatSpec spec,
                                         std::size_t replicates, UniformStream& stream) {
    if (replicates == 0) {
        throw std::domain_error("normality_diagnostic: replicates must be positive");
    }
    const FalkNormalization norm = falk_constants(d, spec);
    std::vector<double> normalized;
    normalized.reserve(replicates);
    for (std::size_t rep = 0; rep < replicates; ++rep) {
        const auto top = sample_top_order_statistics(d, spec.n, spec.i, stream);
        normalized.push_back((top[spec.i - 1] - norm.center) / norm.scale);
    }
    double ks = ks_statistic_vs_normal(normalized);
    return NormalityDiagnostic{ks, std::move(normalized)};
}

}  // namespace rclab
