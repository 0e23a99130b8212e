// Order statistics tests: Falk constants against bisection oracles, the
// O(m) spacing sampler against the naive sort-all oracle, KS machinery,
// and the asymptotic-normality diagnostics.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rclab/dist.hpp"
#include "rclab/order_stats.hpp"
#include "rclab/rng.hpp"
#include "test_support.hpp"

using rclab::falk_constants;
using rclab::FalkNormalization;
using rclab::ks_statistic_vs_normal;
using rclab::Mt19937Stream;
using rclab::normality_diagnostic;
using rclab::OrderStatSpec;
using rclab::ParetoTailDistribution;
using rclab::sample_top_order_statistics;
using rclab::sample_top_order_statistics_naive;
using rclab::standard_normal_cdf;

TEST_CASE("falk constants: closed values match bisection oracle") {
    const ParetoTailDistribution d(1.0);

    const FalkNormalization big = falk_constants(d, {1000000, 100});
    const double a_frozen = 20.544346900318832;  // 10^(4/3) - 1
    CHECK(big.center == doctest::Approx(a_frozen).epsilon(1e-13));
    const double a_oracle = oracles::bisect_quantile(
        [&](double x) { return d.cumulative(x); }, 1.0 - 1e-4);
    CHECK(big.center == doctest::Approx(a_oracle).epsilon(1e-10));

    // b_n = sqrt(100) / (1e6 * f(a_n)) recomputed from scratch.
    const double b_oracle = 10.0 / (1e6 * 3.0 * std::pow(1.0 + a_frozen, -4.0));
    CHECK(big.scale == doctest::Approx(0.7181).epsilon(2e-4));
    CHECK(big.scale == doctest::Approx(b_oracle).epsilon(1e-12));

    const FalkNormalization small = falk_constants(d, {4, 2});
    CHECK(small.center == doctest::Approx(0.25992104989487316).epsilon(1e-13));

    CHECK_THROWS_AS(falk_constants(d, {10, 0}), std::domain_error);
    CHECK_THROWS_AS(falk_constants(d, {10, 10}), std::domain_error);
    CHECK_THROWS_AS(falk_constants(d, {10, 11}), std::domain_error);
}

TEST_CASE("spacing sampler: shape, ordering, degenerate cases") {
    const ParetoTailDistribution d(1.0);

    Mt19937Stream s(31);
    CHECK_THROWS_AS(sample_top_order_statistics(d, 5, 6, s), std::domain_error);
    CHECK_THROWS_AS(sample_top_order_statistics(d, 5, 0, s), std::domain_error);

    // Top-1 of 1 is just a parent draw.
    Mt19937Stream s1(32);
    std::vector<double> singles;
    for (int rep = 0; rep < 4000; ++rep) {
        singles.push_back(sample_top_order_statistics(d, 1, 1, s1)[0]);
    }
    const double ks =
        oracles::one_sample_ks(singles, [&](double x) { return d.cumulative(x); });
    CHECK(ks < 1.63 / std::sqrt(4000.0));

    Mt19937Stream s2(33);
    for (int rep = 0; rep < 2000; ++rep) {
        const auto pair = sample_top_order_statistics(d, 50, 2, s2);
        CHECK(pair[0] >= pair[1]);
    }
    Mt19937Stream s3(34);
    for (int rep = 0; rep < 200; ++rep) {
        const auto top = sample_top_order_statistics(d, 500, 20, s3);
        for (std::size_t k = 1; k < top.size(); ++k) CHECK(top[k - 1] >= top[k]);
    }
}

TEST_CASE("spacing sampler agrees with the naive oracle per rank") {
    const ParetoTailDistribution d(1.0);
    const std::uint64_t n = 1000;
    const std::uint64_t m = 20;
    const std::size_t reps = 4000;

    std::vector<std::vector<double>> fast(m), slow(m);
    Mt19937Stream sf(101);
    Mt19937Stream sn(202);
    for (std::size_t rep = 0; rep < reps; ++rep) {
        const auto a = sample_top_order_statistics(d, n, m, sf);
        const auto b = sample_top_order_statistics_naive(d, n, m, sn);
        for (std::uint64_t k = 0; k < m; ++k) {
            fast[k].push_back(a[k]);
            slow[k].push_back(b[k]);
        }
    }
    const double crit = oracles::two_sample_ks_critical_99(reps, reps);
    for (const std::uint64_t rank : {std::uint64_t{0}, std::uint64_t{9}, m - 1}) {
        CHECK(oracles::two_sample_ks(fast[rank], slow[rank]) < crit);
    }
}

TEST_CASE("standard normal cdf: table values") {
    CHECK(standard_normal_cdf(0.0) == 0.5);
    CHECK(std::fabs(standard_normal_cdf(1.959964) - 0.975) < 1e-6);
    CHECK(standard_normal_cdf(-8.0) == doctest::Approx(6.22e-16).epsilon(0.01));
    CHECK(std::fabs(standard_normal_cdf(1.0) - 0.841344746068543) < 1e-12);
    CHECK(std::fabs(standard_normal_cdf(2.0) - 0.977249868051821) < 1e-12);
    CHECK(std::fabs(standard_normal_cdf(-3.0) - 0.001349898031630) < 1e-12);
    for (const double x : {0.3, 1.7, 4.2}) {
        CHECK(standard_normal_cdf(x) + standard_normal_cdf(-x) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("ks statistic vs normal: exact small cases and calibration") {
    CHECK_THROWS_AS(ks_statistic_vs_normal({}), std::domain_error);
    CHECK(ks_statistic_vs_normal({0.0}) == doctest::Approx(0.5).epsilon(1e-14));

    // Points placed at Phi^-1((k-0.5)/K) bracket Phi by exactly 0.5/K.
    const int grid = 10;
    std::vector<double> staged;
    for (int k = 1; k <= grid; ++k) {
        staged.push_back(oracles::bisect_increasing(
            [](double x) { return standard_normal_cdf(x); },
            (k - 0.5) / grid, -10.0, 10.0));
    }
    CHECK(ks_statistic_vs_normal(staged) == doctest::Approx(0.05).epsilon(1e-9));

    // Genuine normal draws (Box-Muller) stay under the 99% band.
    Mt19937Stream s(55);
    std::vector<double> normals;
    for (int k = 0; k < 100000; ++k) {
        const double r = std::sqrt(-2.0 * std::log1p(-s.next()));
        normals.push_back(r * std::cos(2.0 * 3.14159265358979324 * s.next()));
    }
    CHECK(ks_statistic_vs_normal(normals) < 1.63 / std::sqrt(100000.0));
}

TEST_CASE("normality diagnostic: smoke case and regime improvement") {
    const ParetoTailDistribution d(1.0);

    Mt19937Stream tiny(9);
    const auto smoke = normality_diagnostic(d, {10, 1}, 1, tiny);
    CHECK(smoke.normalized.size() == 1);

    // KS to N(0,1) shrinks as n grows with i = ceil(n^(1/3)), within
    // 2x the Monte Carlo fluctuation scale 1.36/sqrt(replicates).
    const std::size_t reps = 4000;
    const double noise = 1.36 / std::sqrt(static_cast<double>(reps));
    double prev = 1.0;
    int grid_index = 0;
    for (const std::uint64_t n : {std::uint64_t{1000}, std::uint64_t{100000}}) {
        const auto i =
            static_cast<std::uint64_t>(std::ceil(std::cbrt(static_cast<double>(n)) - 1e-9));
        Mt19937Stream s(rclab::mix_seed(77, static_cast<std::uint64_t>(grid_index++)));
        const auto diag = normality_diagnostic(d, {n, i}, reps, s);
        CHECK(diag.ks < prev + 2.0 * noise);
        CHECK(diag.normalized.size() == reps);
        prev = diag.ks;
    }
    CHECK(prev < 0.08);
}

TEST_CASE("falk centering: the i-th largest concentrates at a_n") {
    // The finite-n median of the i-th largest sits b_n/(3 sqrt(i)) below
    // a_n (the Gamma(i) median offset), so the window is that offset plus
    // four standard errors of a median, 1.2533 * b_n / sqrt(reps).
    const ParetoTailDistribution d(0.3);
    const std::uint64_t n = 1000000;
    const std::uint64_t i = 100;
    const std::size_t reps = 10000;
    const FalkNormalization norm = falk_constants(d, {n, i});

    Mt19937Stream s(404);
    std::vector<double> values;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        values.push_back(sample_top_order_statistics(d, n, i, s)[i - 1]);
    }
    const double median = oracles::median_of(values);
    const double window =
        norm.scale * (1.0 / (3.0 * std::sqrt(static_cast<double>(i))) +
                      4.0 * 1.2533 / std::sqrt(static_cast<double>(reps)));
    CHECK(std::fabs(median - norm.center) < window);
}

TEST_CASE("a_n growth: measured exponent matches the closed form") {
    // With i = n^(1/3 - delta) and delta = eps/3, log(a_n + 1)/log(n)
    // equals (2/3 + delta)/(2 + eps) = 1/3 for every n.
    const ParetoTailDistribution d(1.0);
    for (const std::uint64_t n :
         {std::uint64_t{1000}, std::uint64_t{1000000}, std::uint64_t{100000000}}) {
        const std::uint64_t i = 1;  // n^(1/3 - 1/3)
        const FalkNormalization norm = falk_constants(d, {n, i});
        const double measured =
            std::log1p(norm.center) / std::log(static_cast<double>(n));
        CHECK(measured == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }

    // Rounded i = round(n^(1/3 - delta)) at eps = 0.3, delta = 0.1 tracks
    // the same identity: log(a_n + 1)/log(n) = (1 - log i/log n)/(2+eps).
    const ParetoTailDistribution d03(0.3);
    for (const std::uint64_t n :
         {std::uint64_t{1000}, std::uint64_t{10000}, std::uint64_t{1000000}}) {
        const auto i = static_cast<std::uint64_t>(
            std::llround(std::pow(static_cast<double>(n), 1.0 / 3.0 - 0.1)));
        const FalkNormalization norm = falk_constants(d03, {n, i});
        const double measured =
            std::log1p(norm.center) / std::log(static_cast<double>(n));
        const double identity =
            (1.0 - std::log(static_cast<double>(i)) / std::log(static_cast<double>(n))) /
            2.3;
        CHECK(measured == doctest::Approx(identity).epsilon(1e-12));
        CHECK(std::fabs(measured - 1.0 / 3.0) < 0.02);
    }
}
