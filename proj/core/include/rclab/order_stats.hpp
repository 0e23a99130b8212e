// order_stats.hpp
//
// Intermediate order statistics: Falk normalization constants, exact
// samplers for the joint top-m order statistics of n i.i.d. draws, and
// normality diagnostics.
//
// The i-th largest of n draws, for i growing with n while i/n -> 0, is
// asymptotically normal under the von Mises tail condition once centered
// at a_n = F^-1(1 - i/n) and scaled by b_n = sqrt(i) / (n f(a_n)). The
// diagnostics here measure how close a finite-n ensemble gets.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rclab/dist.hpp"
#include "rclab/rng.hpp"

namespace rclab {

// The i-th largest of n i.i.d. draws.
struct OrderStatSpec {
    std::uint64_t n = 0;
    std::uint64_t i = 0;
};

// Centering/scale pair for an intermediate order statistic.
struct FalkNormalization {
    double center;  // a_n = F^-1(1 - i/n)
    double scale;   // b_n = sqrt(i) / (n f(a_n)), > 0
};

// Computes (a_n, b_n) for spec. Requires 1 <= i < n; throws
// std::runtime_error if the density vanishes at the centering point.
FalkNormalization falk_constants(const ParentDistribution& d, OrderStatSpec spec);

// Joint sample of the m largest among n i.i.d. draws, descending, in
// O(m) time and memory. Descending uniform order statistics come from
// the spacing recursion U_(n) = V_1^(1/n), U_(n-k) = U_(n-k+1) *
// V_(k+1)^(1/(n-k)), accumulated in log space as sums of Exp(1)/(n-k)
// so that n up to 1e8 keeps full tail precision; each uniform is then
// pushed through the upper-tail quantile.
std::vector<double> sample_top_order_statistics(const ParentDistribution& d,
                                                std::uint64_t n, std::uint64_t m,
                                                UniformStream& stream);

// Verification-oracle sampler: draws all n variates, sorts, returns the
// top m descending. O(n log m); same joint law as the spacing sampler.
std::vector<double> sample_top_order_statistics_naive(const ParentDistribution& d,
                                                      std::uint64_t n, std::uint64_t m,
                                                      UniformStream& stream);

// Standard normal CDF via erfc; absolute error well below 1e-12.
double standard_normal_cdf(double x);

// Two-sided Kolmogorov-Smirnov sup-distance between the empirical CDF of
// `samples` and the standard normal. Throws std::domain_error on empty
// input. Reported as a raw statistic; thresholds belong to the caller.
double ks_statistic_vs_normal(std::vector<double> samples);

struct NormalityDiagnostic {
    double ks;                      // KS distance of `normalized` to N(0,1)
    std::vector<double> normalized; // (x - a_n)/b_n per replicate
};

// Draws `replicates` copies of the i-th largest of n via the spacing
// sampler, normalizes with falk_constants, and reports the KS distance
// to the standard normal together with the normalized sample.
NormalityDiagnostic normality_diagnostic(const ParentDistribution& d, OrderStatSpec spec,
                                         std::size_t replicates, UniformStream& stream);

}  // namespace rclab
