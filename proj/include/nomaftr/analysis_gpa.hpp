// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nomaftr/ftr.hpp"
#include "nomaftr/noma.hpp"

namespace nomaftr {

//! Two users under a fixed near-user power fraction.
struct GpaScenario {
    FtrSeries user_p;
    FtrSeries user_q;
    LinkBudget budget;
    GpaConfig gpa;

    //! 1 / (2 sigma_p^2 gamma_bar Q_p)
    double alpha() const;
    //! 1 / (2 sigma_q^2 gamma_bar Q_q)
    double beta() const;
    void validate() const;
};

namespace gpa {

double op_p(double gamma_th, const GpaScenario& s);
//! Exactly 1 when a_th <= 0.
double op_q(double gamma_th, const GpaScenario& s);

//! High-SNR form, proportional to 1 / gamma_bar.
double op_p_asymptotic(double gamma_th, const GpaScenario& s);
//! Proportional to 1 / gamma_bar when a_th > 0, else 1.
double op_q_asymptotic(double gamma_th, const GpaScenario& s);

//! E[log2(1 + b h)] from the series.
double ec_lambda(double b, const FtrSeries& series);
//! The same expectation by adaptive quadrature against the density.
double ec_lambda_quadrature(double b, const FtrSeries& series);

//! Expected sum rate of both users.
double ec(const GpaScenario& s);

}  // namespace gpa
}  // namespace nomaftr
