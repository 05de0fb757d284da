#!/usr/bin/env python3
"""Reference values for the unit tests, computed with mpmath.

Writes tests/oracles/oracle_values.hpp. The FTR mixture weights are obtained
from the angular-average representation
    d_j = Gamma(j+m)/pi * int_0^pi (1+D cos t)^j / (m+K+K D cos t)^(j+m) dt
which does not go through the Legendre sum the library implements.

Usage: python3 generate_oracles.py > oracle_values.hpp
"""
from mpmath import mp, mpf, cos, pi, exp, log, loggamma, quad, sqrt, inf
from mpmath import legenp, hyperu, pcfd, digamma, e1, gammainc, hyp2f1, gamma, binomial

mp.dps = 40
NTHETA = 800


def fmt(x):
    return mp.nstr(mpf(x), 20, min_fixed=-5, max_fixed=8)


def mixture_weights(m, K, D, n):
    m, K, D = mpf(m), mpf(K), mpf(D)
    th = [2 * pi * (i + mpf(1) / 2) / NTHETA for i in range(NTHETA)]
    cs = [cos(t) for t in th]
    out = []
    for j in range(n):
        avg = sum((1 + D * c) ** j / (m + K + K * D * c) ** (j + m) for c in cs) / NTHETA
        dj = exp(loggamma(j + m)) * avg
        if K == 0:
            h = m ** m * dj / gamma(m) if j == 0 else mpf(0)
        else:
            h = exp(m * log(m) + j * log(K) - loggamma(m) - loggamma(j + 1)) * dj
        out.append((dj, h))
    return out


def legendre_sum_d(j, m, K, D):
    """Direct high-precision summation of the Legendre double sum."""
    mp.dps = 200
    m, K, D = mpf(m), mpf(K), mpf(D)
    S = sqrt((m + K) ** 2 - (K * D) ** 2)
    z = (m + K) / S
    acc = mpf(0)
    for k in range(j + 1):
        for l in range(k + 1):
            sign = 1 if (2 * l - k) % 2 == 0 else -1
            acc += (binomial(j, k) * (D / 2) ** k * binomial(k, l) * sign
                    * gamma(j + m + 2 * l - k) * legenp(j + m - 1, k - 2 * l, z, type=3).real)
    val = acc / S ** (j + m)
    mp.dps = 40
    return val


def ftr_cdf(x, sigma, weights):
    t = mpf(x) / (2 * mpf(sigma) ** 2)
    return sum(h * gammainc(j + 1, 0, t, regularized=True) for j, (_, h) in enumerate(weights))


def ftr_pdf(x, sigma, weights):
    s2 = 2 * mpf(sigma) ** 2
    t = mpf(x) / s2
    return sum(h * exp(j * log(t) - t - loggamma(j + 1)) / s2 if t > 0 else (h / s2 if j == 0 else 0)
               for j, (_, h) in enumerate(weights))


CASES = {
    "1p": (10.8, 5, 0.5, 0.2887), "1q": (5.5, 10, 0.35, 0.2132),
    "2p": (5.5, 8, 0.35, 0.2981), "2q": (15.5, 5, 0.5, 0.3162),
    "3p": (5.5, 8, 0.1, 0.2357), "3q": (3.3, 10, 0.4, 0.2335),
    "4p": (15.5, 8, 0.35, 0.2357), "4q": (3.3, 15, 0.4, 0.1936),
    "6p": (3.5, 5, 0.5, 0.3162), "6q": (3.5, 5, 0.5, 0.2739),
}


def emit(name, value):
    print(f"inline constexpr double {name} = {fmt(value)};")


def main():
    print("// Generated by generate_oracles.py (mpmath). Do not edit.")
    print("#pragma once\n")
    print("namespace oracle {\n")

    emit("kLnGamma_0_1", loggamma(mpf("0.1")))
    emit("kLnGamma_7_3", loggamma(mpf("7.3")))
    emit("kLnGamma_150_5", loggamma(mpf("150.5")))
    emit("kDigamma_10", digamma(10))
    emit("kDigamma_0_3", digamma(mpf("0.3")))
    emit("kDigamma_50_5", digamma(mpf("50.5")))

    emit("kLegendre_4_5_m2_1_25", legenp(mpf("4.5"), -2, mpf("1.25"), type=3).real)
    emit("kLegendre_2_7_p3_1_8", legenp(mpf("2.7"), 3, mpf("1.8"), type=3).real)
    emit("kLegendre_6_5_m4_3_5", legenp(mpf("6.5"), -4, mpf("3.5"), type=3).real)
    emit("kLegendre_10_5_0_5", legenp(mpf("10.5"), 0, mpf(5), type=3).real)
    emit("kLegendre_30_3_m7_1_02", legenp(mpf("30.3"), -7, mpf("1.02"), type=3).real)
    # defining series of P^{-2}_{4.5}(1.25), summed to convergence
    z = mpf("1.25")
    series = ((z - 1) / (z + 1)) ** 1 * hyp2f1(-mpf("4.5"), mpf("5.5"), 3, (1 - z) / 2) / gamma(3)
    emit("kLegendreSeries_4_5_m2_1_25", series)

    emit("kKummerU_1_1_1", hyperu(1, 1, 1))
    emit("kKummerU_1_2_5_0_5", hyperu(1, mpf("2.5"), mpf("0.5")))
    emit("kKummerU_3_5_5_0_02", hyperu(3, mpf("5.5"), mpf("0.02")))
    emit("kKummerU_2_3_5_1e6_scaled", hyperu(2, mpf("3.5"), mpf(10) ** 6) * mpf(10) ** 12)
    emit("kExpE1_1", exp(1) * e1(1))

    emit("kPcfD_m3_1_2", pcfd(-3, mpf("1.2")))
    emit("kPcfD_m1_3", pcfd(-1, 3))
    emit("kPcfD_m11_0_3", pcfd(-11, mpf("0.3")))
    emit("kPcfD_m50_7", pcfd(-50, 7))
    emit("kPcfD_m200_0_05", pcfd(-200, mpf("0.05")))
    emit("kPcfD_m120_10", pcfd(-120, 10))

    def mgl(j, y):
        return quad(lambda u: u ** j * exp(-u) * log(1 + y * u), [0, j + 1, 4 * (j + 1) + 40, inf])

    emit("kMeijerLog_3_2_5", mgl(3, mpf("2.5")))
    emit("kMeijerLog_0_1", mgl(0, 1))
    emit("kMeijerLog_20_1e4", mgl(20, mpf(10) ** 4))
    emit("kMeijerLog_5_1e_3", mgl(5, mpf("1e-3")))

    # FTR coefficients
    emit("kCoeffD_2_m5_5_K10_D0_35", legendre_sum_d(2, mpf("5.5"), 10, mpf("0.35")))
    w = mixture_weights(mpf("5.5"), 10, mpf("0.35"), 3)
    emit("kCoeffD_2_m5_5_K10_D0_35_theta", w[2][0])
    w1p = mixture_weights(*CASES["1p"][:3], 1)
    emit("kCoeffD_0_case1p", w1p[0][0])
    w4q = mixture_weights(*CASES["4q"][:3], 41)
    emit("kCoeffD_40_case4q", w4q[40][0])
    emit("kCoeffH_40_case4q", w4q[40][1])

    # FTR distribution values from 200-term angular-average weights
    wt = {}
    for key in ("1p", "2q", "6p", "1q"):
        m, K, D, s = CASES[key]
        wt[key] = mixture_weights(m, K, D, 200)
    emit("kPdf_case1p_0_5", ftr_pdf(mpf("0.5"), CASES["1p"][3], wt["1p"]))
    emit("kCdf_case2q_1_0", ftr_cdf(mpf("1.0"), CASES["2q"][3], wt["2q"]))
    emit("kCdf_case6p_0_2", ftr_cdf(mpf("0.2"), CASES["6p"][3], wt["6p"]))
    emit("kCdf_case1p_1e_3", ftr_cdf(mpf("1e-3"), CASES["1p"][3], wt["1p"]))
    emit("kMoment2_case2q", (2 * mpf(CASES["2q"][3]) ** 2) ** 2
         * sum(h * (j + 1) * (j + 2) for j, (_, h) in enumerate(wt["2q"])))

    # capacity kernel on case 2 user q at b = 5
    m, K, D, s = CASES["2q"]
    b = mpf(5)
    lam = sum(h * quad(lambda u: exp(j * log(u) - u - loggamma(j + 1)) * log(1 + 2 * b * mpf(s) ** 2 * u),
                       [0, j + 1, 4 * (j + 1) + 40, inf])
              for j, (_, h) in enumerate(wt["2q"])) / log(2)
    emit("kEcLambda_case2q_b5", lam)

    # OPA near-user outage, parameter set 1, gamma_bar = 10 dB and 30 dB, gamma_th = 10
    sp, sq = CASES["1p"][3], CASES["1q"][3]
    for gb_db in (10, 30):
        gb = mpf(10) ** (mpf(gb_db) / 10)
        qp, qq, gth = mpf("1.5"), mpf("0.15"), mpf(10)

        def integrand(y):
            return (ftr_cdf(gth * (sqrt(1 + gb * qq * y) + 1) / (gb * qp), sp, wt["1p"])
                    * ftr_pdf(y, sq, wt["1q"]))
        mp.dps = 25
        val = quad(integrand, [0, mpf("0.3"), 1, 2, 4, 10, inf])
        mp.dps = 40
        emit(f"kOpaOutageP_case1_{gb_db}dB_gth10", val)

    # mean of log2(1 + 1/sqrt(1+gb Q_q h_q)), capacity setting user q, gamma_bar = 20 dB, Q_q = 0.1
    m, K, D, s = (15.5, 5, 0.5, 0.3162)
    wq = mixture_weights(m, K, D, 120)
    gb, qq = mpf(100), mpf("0.1")
    mp.dps = 25
    i9 = quad(lambda y: log(1 + 1 / sqrt(1 + gb * qq * y)) / log(2) * ftr_pdf(y, s, wq), [0, 0.5, 1, 2, 4, 10, inf])
    mean_sqrt = quad(lambda y: sqrt(1 + gb * qq * y) * ftr_pdf(y, s, wq), [0, 0.5, 1, 2, 4, 10, inf])
    mp.dps = 40
    emit("kOpaI9_capacity_20dB", i9)
    emit("kOpaMeanSqrt_capacity_20dB", mean_sqrt)

    print("\n}  // namespace oracle")


if __name__ == "__main__":
    main()
