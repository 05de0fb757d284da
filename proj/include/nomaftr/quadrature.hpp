// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace nomaftr::quad {

enum class RuleKind { chebyshev_gauss_first_kind, gauss_laguerre };

/*!
 * Fixed-node rule.
 *
 * Chebyshev-Gauss: int_{-1}^{1} f(x)/sqrt(1-x^2) dx ~ sum w_k f(x_k).
 * Gauss-Laguerre: int_0^inf x^alpha e^{-x} f(x) dx ~ sum w_k f(x_k).
 */
struct QuadratureRule {
    RuleKind kind;
    int node_count = 0;
    std::vector<double> nodes;
    std::vector<double> weights;

    template<class F>
    double apply(F&& f) const
    {
        double sum = 0;
        for (int k = 0; k < node_count; ++k)
            sum += weights[k] * f(nodes[k]);
        return sum;
    }
};

//! Nodes cos((2k-1)pi/(2n)), k = 1..n, uniform weights pi/n.
QuadratureRule chebyshev_gauss_rule(int count);

//! Generalized Gauss-Laguerre rule with weight x^alpha e^{-x}, alpha > -1.
QuadratureRule gauss_laguerre_rule(int count, double alpha = 0.0);

struct IntegrationOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    std::size_t max_evaluations = 1'000'000;
};

struct IntegrationResult {
    double value = 0;
    double abs_error = 0;
    std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

//! Globally adaptive 21-point Gauss-Kronrod on [lo, hi].
IntegrationResult integrate(const Integrand& f, double lo, double hi,
                            const IntegrationOptions& options = {});

//! Same on [lo, inf) through x = lo + t/(1-t).
IntegrationResult integrate_to_infinity(const Integrand& f, double lo,
                                        const IntegrationOptions& options = {});

/*!
 * E[g(U)] for U ~ Gamma(shape, 1), by adaptive quadrature split around the
 * bulk of the density.
 */
double gamma_expectation(const Integrand& g, double shape,
                         const IntegrationOptions& options = {0.0, 1e-12, 1'000'000});

}  // namespace nomaftr::quad
