// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "nomaftr/ftr.hpp"

namespace nomaftr {

//! Deterministic link gains and average transmit SNR (linear).
struct LinkBudget {
    double q_p = 1;        //!< near-user gain
    double q_q = 0.1;      //!< far-user gain
    double gamma_bar = 1;  //!< P_s / N_0

    //! Throws DomainError unless all fields are positive and q_p > q_q.
    void validate() const;
};

struct GpaConfig {
    double a = 0.2;  //!< power fraction of the near user

    void validate() const;
    //! 1 - a - a gamma_th; the far user is always in outage when this is <= 0.
    double a_th(double gamma_th) const { return 1 - a - a * gamma_th; }
};

struct Scheme {
    enum class Kind { gpa, opa, tdma };
    Kind kind = Kind::opa;
    double a = 0;  //!< used by gpa only

    static Scheme gpa(double a) { return {Kind::gpa, a}; }
    static Scheme opa() { return {Kind::opa, 0}; }
    static Scheme tdma() { return {Kind::tdma, 0}; }
    //! "gpa", "opa" or "tdma"
    std::string name() const;
};

struct SinrPair {
    double p = 0;
    double q = 0;
};

struct Interval {
    double lo = 0;
    double hi = 0;
    bool empty() const { return lo > hi; }
};

namespace noma {

inline double db_to_linear(double db)
{
    return std::pow(10.0, db / 10);
}

inline double linear_to_db(double x)
{
    return 10 * std::log10(x);
}

SinrPair sinr_gpa(double a, const LinkBudget& budget, double h_p, double h_q);

//! Sum-rate maximizing near-user fraction 1 / (sqrt(1 + gamma_bar Q_q h_q) + 1).
double a_opt(const LinkBudget& budget, double h_q);

//! Fractions keeping both users above their TDMA rates; empty when Q_p h_p < Q_q h_q.
Interval a_range(const LinkBudget& budget, double h_p, double h_q);

SinrPair sinr_opa(const LinkBudget& budget, double h_p, double h_q);

//! Bits/s/Hz of both users combined.
double sum_rate(const Scheme& scheme, const LinkBudget& budget, double h_p, double h_q);

//! d/da of the GPA sum rate.
double sum_rate_derivative(double a, const LinkBudget& budget, double h_p, double h_q);

struct OrderEstimate {
    double probability = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

//! Monte Carlo Pr{Q_p h_p > Q_q h_q} at Q_p / Q_q = ratio, with a Wilson 95% interval.
OrderEstimate prob_channel_order(double ratio, const FtrParams& params_p,
                                 const FtrParams& params_q, std::uint64_t n, std::uint64_t seed);

//! (1 - a_opt) / a_opt = sqrt(1 + gamma_bar Q_q h_q)
double sic_power_ratio(const LinkBudget& budget, double h_q);

//! SNR above which fixed allocation a gives the near user the better SINR.
double crossover_gamma_bar(double a, const LinkBudget& budget, double h_q);

//! Threshold where the far-user outage order of the two schemes flips.
double crossover_gamma_th(double a);

}  // namespace noma
}  // namespace nomaftr
