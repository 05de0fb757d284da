// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nomaftr/ftr.hpp"
#include "nomaftr/noma.hpp"

namespace nomaftr {

enum class OpaOutageForm {
    //! binomial expansion about z = 1; every term positive
    shifted,
    //! expansion about z = 0 with alternating signs; long double, valid at high SNR only
    literal,
};

//! Two users under the per-state sum-rate optimal allocation.
struct OpaScenario {
    FtrSeries user_p;
    FtrSeries user_q;
    LinkBudget budget;
    int quad_op_nodes = 64;  //!< starting Chebyshev-Gauss nodes of the literal outage form
    int quad_ec_nodes = 64;  //!< starting Chebyshev-Gauss nodes of the I9 term
    OpaOutageForm outage_form = OpaOutageForm::shifted;

    double alpha() const;
    double beta() const;
    void validate() const;
};

namespace opa {

//! Node doubling stops when the value moves by at most this much.
inline constexpr double kNodeStability = 1e-6;
inline constexpr int kMaxNodes = 1024;

double op_p(double gamma_th, const OpaScenario& s);
//! Near-user outage conditioned on the far-user gain h_q.
double op_p_given(double gamma_th, double h_q, const OpaScenario& s);
//! Direct one-dimensional integral of the conditional outage against f_q.
double op_p_quadrature(double gamma_th, const OpaScenario& s);
double op_q(double gamma_th, const OpaScenario& s);

//! Proportional to gamma_bar^{-1/2}.
double op_p_asymptotic(double gamma_th, const OpaScenario& s);
//! Proportional to gamma_bar^{-1}.
double op_q_asymptotic(double gamma_th, const OpaScenario& s);

//! Moments entering the ergodic capacity; X = gamma_bar Q_p h_p, Z = sqrt(1 + gamma_bar Q_q h_q).
struct CapacityTerms {
    double mean_x = 0;       //!< E[X]
    double mean_x_sq = 0;    //!< E[X^2]
    double mean_z = 0;       //!< E[Z]
    double mean_z_sq = 0;    //!< E[Z^2] = 1 + E[gamma_bar Q_q h_q]
    double mean_ln_x = 0;    //!< E[ln X]
    double mean_ln_z = 0;    //!< E[ln Z]
    double i8_approx = 0;    //!< second-order Taylor form of E[log2(1 + X + Z)]
    double i8_lower = 0;
    double i8_upper = 0;
    double i9 = 0;           //!< E[log2(1 + 1/Z)]
    int i9_nodes = 0;        //!< nodes at which I9 settled; 0 when i9_quadrature was used
};

CapacityTerms capacity_terms(const OpaScenario& s);

//! E[log2(1 + 1/Z)] by Chebyshev-Gauss quadrature with the given node count.
double i9_fixed(const OpaScenario& s, int nodes);
//! The same expectation by adaptive quadrature per mixture term; used when the
//! Chebyshev-Gauss rule does not settle within kMaxNodes.
double i9_quadrature(const OpaScenario& s);

double ec_approx(const OpaScenario& s);
double ec_lower(const OpaScenario& s);
double ec_upper(const OpaScenario& s);

}  // namespace opa
}  // namespace nomaftr
