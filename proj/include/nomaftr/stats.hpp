// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nomaftr::stats {

//! Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

struct Interval {
    double estimate = 0;
    double lo = 0;
    double hi = 0;
};

//! Wilson score interval for a binomial proportion.
Interval wilson(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

//! Running mean and variance; merge() is exact so chunk reductions are order-stable.
struct Moments {
    std::uint64_t count = 0;
    double mean = 0;
    double m2 = 0;

    void add(double x);
    void merge(const Moments& other);
    double variance() const;
    double std_error() const;
    //! Normal-approximation interval on the mean.
    Interval interval(double z = kZ95) const;
};

struct MeanInterval {
    double mean = 0;
    double std_error = 0;
    double lo = 0;
    double hi = 0;
};

MeanInterval mean_interval(const std::vector<double>& values, double z = kZ95);

//! sup |F_n - F| of the empirical distribution of the samples.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace nomaftr::stats
