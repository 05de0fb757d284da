// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>

#include "nomaftr/error.hpp"

namespace nomaftr::specfun::detail {

inline constexpr int kHypergeometricCap = 10000;

/*!
 * P^{-n}_nu(z) for integer n >= 0, nu >= -1/2 and z >= 1.
 *
 * Generic in the real type so the coefficient sums can run in extended
 * precision. tol is the relative truncation tolerance of the 2F1 series.
 */
template<class T>
T legendre_negative_order(const T& nu, int n, const T& z, const T& tol)
{
    using std::abs;
    using std::pow;
    if (z == 1)
        return n == 0 ? T(1) : T(0);

    T factorial = 1;
    for (int i = 2; i <= n; ++i)
        factorial *= i;
    const T ratio = (z - 1) / (z + 1);
    T prefactor = pow(ratio, T(n) / 2) / factorial;

    T a = -nu;
    T b;
    T x;
    if (z <= 2) {
        b = nu + 1;
        x = (1 - z) / 2;
    } else {
        // Pfaff transform keeps the series argument in (1/3, 1)
        b = T(n) - nu;
        x = ratio;
        prefactor *= pow((1 + z) / 2, nu);
    }
    const T c = T(n + 1);
    const T abs_a = abs(a);
    const T abs_b = abs(b);
    const T abs_x = abs(x);

    T term = 1;
    T sum = 1;
    for (int k = 0; k < kHypergeometricCap; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
        sum += term;
        if (term == 0)
            return prefactor * sum;
        // every later term ratio is below r, so the tail is at most |term| r/(1-r)
        const T i = T(k + 1);
        T fa = (abs_a + i) / (i + 1);
        T fb = (abs_b + i) / (c + i);
        if (fa < 1)
            fa = 1;
        if (fb < 1)
            fb = 1;
        const T r = fa * fb * abs_x;
        if (r < 1 && abs(term) * r / (1 - r) <= tol * abs(sum))
            return prefactor * sum;
    }
    throw ConvergenceError("legendre_p: hypergeometric series did not converge within " +
                           std::to_string(kHypergeometricCap) + " terms");
}

}  // namespace nomaftr::specfun::detail
