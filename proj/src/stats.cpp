// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/stats.hpp"

#include <algorithm>
#include <cmath>

#include "nomaftr/error.hpp"

namespace nomaftr::stats {

Interval wilson(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0)
        throw DomainError("wilson: no trials");
    if (successes > trials)
        throw DomainError("wilson: more successes than trials");
    const double n = static_cast<double>(trials);
    const double p = successes / n;
    const double z2 = z * z;
    const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return {p, lo, hi};
}

void Moments::add(double x)
{
    ++count;
    const double d = x - mean;
    mean += d / count;
    m2 += d * (x - mean);
}

void Moments::merge(const Moments& other)
{
    if (other.count == 0)
        return;
    if (count == 0) {
        *this = other;
        return;
    }
    const double n = static_cast<double>(count + other.count);
    const double d = other.mean - mean;
    mean += d * other.count / n;
    m2 += other.m2 + d * d * (static_cast<double>(count) * other.count / n);
    count += other.count;
}

double Moments::variance() const
{
    return count > 1 ? m2 / (count - 1) : 0.0;
}

double Moments::std_error() const
{
    return count > 0 ? std::sqrt(variance() / count) : 0.0;
}

Interval Moments::interval(double z) const
{
    const double half = z * std_error();
    return {mean, mean - half, mean + half};
}

MeanInterval mean_interval(const std::vector<double>& values, double z)
{
    if (values.empty())
        throw DomainError("mean_interval: no values");
    Moments acc;
    for (double v : values)
        acc.add(v);
    const double se = acc.std_error();
    return {acc.mean, se, acc.mean - z * se, acc.mean + z * se};
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf)
{
    if (samples.empty())
        throw DomainError("ks_distance: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        worst = std::max({worst, (i + 1) / n - f, f - i / n});
    }
    return worst;
}

}  // namespace nomaftr::stats
