// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace nomaftr::specfun {

//! ln Gamma(x) for x > 0.
double ln_gamma(double x);

//! ln n! for integer n >= 0.
double ln_factorial(int n);

//! Euler psi function for x > 0.
double digamma(double x);

//! ln of 1*3*5*...*n for odd n >= 1 (n = -1 gives 0).
double ln_double_factorial(int n);

//! Product of odd integers up to n; may overflow to infinity for n > 300.
double double_factorial(int n);

//! exp(x^2) erfc(x).
double erfcx(double x);

/*!
 * First-kind Legendre function P^order_degree(arg) on the real axis arg >= 1.
 *
 * Uses the Gauss hypergeometric series in (1-z)/2 for z <= 2 and its Pfaff
 * transform in (z-1)/(z+1) beyond. Positive orders are mapped to negative
 * ones through the integer-order reflection, so the Gamma pole of the
 * defining representation never appears. The imaginary part is always zero
 * on this branch.
 */
std::complex<double> legendre_p(double degree, int order, double arg);

//! Tricomi confluent hypergeometric function U(a, b, z) for a, z > 0.
double kummer_u(double a, double b, double z);

//! z^a U(a, b, z), the bounded form E[(1 + G/z)^(b-a-1)] with G ~ Gamma(a).
double kummer_u_scaled(double a, double b, double z);

//! D_order(arg) for order in {0, -1, -2, ...} and arg >= 0.
double parabolic_cylinder_d(double order, double arg);

/*!
 * ln s_nu(x) for nu = 0..max_order, where
 * s_nu(x) = int_0^inf t^nu exp(-x t - t^2/2) dt and x >= 0.
 */
std::vector<double> ln_gaussian_moments(double x, int max_order);

/*!
 * ln int_0^inf w^nu exp(-c w - b w^2) dw for nu = 0..max_order, c >= 0, b > 0.
 */
std::vector<double> ln_gaussian_integrals(double c, double b, int max_order);

//! int_0^inf u^j e^{-u} ln(1 + y u) du.
double meijer_g_log(int j, double y);

//! E[ln(1 + y U)] with U ~ Gamma(j + 1, 1); meijer_g_log(j, y) / j!.
double gamma_mean_log1p(int j, double y);

}  // namespace nomaftr::specfun
