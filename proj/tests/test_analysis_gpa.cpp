// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "nomaftr/analysis_gpa.hpp"
#include "nomaftr/error.hpp"
#include "nomaftr/montecarlo.hpp"
#include "nomaftr/rng.hpp"
#include "nomaftr/validation.hpp"
#include "oracles/oracle_values.hpp"
#include "test_support.hpp"

using namespace nomaftr;
using testing::rel_err;

namespace {

const FtrSeries& series_1p()
{
    static const FtrSeries s = ftr::build_series(testing::kCase1p);
    return s;
}

const FtrSeries& series_1q()
{
    static const FtrSeries s = ftr::build_series(testing::kCase1q);
    return s;
}

GpaScenario case1(double gamma_bar_db, double q_q = 0.15, double a = 0.2)
{
    return {series_1p(), series_1q(), {1.5, q_q, noma::db_to_linear(gamma_bar_db)}, {a}};
}

// |closed - MC| in binomial standard deviations under the closed-form probability
double outage_z(double closed, double mc, double n)
{
    return std::abs(closed - mc) / std::sqrt(closed * (1 - closed) / n);
}

}  // namespace

TEST_SUITE("analysis_gpa")
{
    TEST_CASE("scenario parameters")
    {
        const auto s = case1(10);
        CHECK(s.alpha() == doctest::Approx(1 / (2 * 0.2887 * 0.2887 * 10 * 1.5)).epsilon(1e-14));
        CHECK(s.beta() == doctest::Approx(1 / (2 * 0.2132 * 0.2132 * 10 * 0.15)).epsilon(1e-14));
        CHECK_NOTHROW(s.validate());
        CHECK_THROWS_AS(case1(10, 0.15, 0.5).validate(), DomainError);
    }

    TEST_CASE("op_p")
    {
        const auto s = case1(30);
        CHECK(gpa::op_p(1e-12, s) < 1e-12);
        for (double gth : {0.5, 2.0, 10.0, 40.0}) {
            const double x = gth / (0.2 * s.budget.gamma_bar * 1.5);
            CHECK(std::abs(gpa::op_p(gth, s) - ftr::cdf(x, series_1p())) < 1e-12);
        }
    }

    TEST_CASE("op_q")
    {
        for (double db : {0.0, 20.0, 60.0}) {
            CHECK(gpa::op_q(5, case1(db)) == 1.0);
            CHECK(gpa::op_q(4, case1(db)) == 1.0);  // a_th = 0 exactly
        }
        const auto s = case1(25, 0.5);
        CHECK(gpa::op_q(1e-12, s) < 1e-12);
        const double a_th = 1 - 0.2 - 0.2 * 2;
        CHECK(std::abs(gpa::op_q(2, s) - ftr::cdf(2 / (a_th * s.budget.gamma_bar * 0.5), series_1q())) <
              1e-12);
    }

    TEST_CASE("outage against Monte Carlo at 1e7 states")
    {
        Scenario sc;
        sc.user_p = testing::kCase1p;
        sc.user_q = testing::kCase1q;
        sc.budget = {1.5, 0.5, 1};
        sc.schemes = {Scheme::gpa(0.2)};
        sc.gamma_bar_grid_db = {25, 30};
        sc.gamma_th_list = {2, 10};
        sc.seed = 101;
        const auto mc_results = mc::simulate_op(sc);
        const double n = static_cast<double>(sc.n_samples);
        for (const auto& r : mc_results) {
            const double gth = std::stod(r.meta_value("gamma_th"));
            for (std::size_t i = 0; i < r.axis.size(); ++i) {
                const GpaScenario g = case1(r.axis[i], 0.5);
                if (r.metric == Metric::op_p && gth == 10 && r.axis[i] == 30)
                    CHECK(outage_z(gpa::op_p(gth, g), r.estimate[i], n) < 3);
                if (r.metric == Metric::op_q && gth == 2 && r.axis[i] == 25)
                    CHECK(outage_z(gpa::op_q(gth, g), r.estimate[i], n) < 3);
                if (r.metric == Metric::op_q && gth == 10)
                    CHECK(r.estimate[i] == 1.0);
            }
        }
    }

    TEST_CASE("asymptotic forms")
    {
        const double gth = 2;
        CHECK(gpa::op_p_asymptotic(gth, case1(43.0103)) ==
              doctest::Approx(gpa::op_p_asymptotic(gth, case1(40)) / 2).epsilon(1e-4));
        const auto a = case1(40);
        auto b = a;
        b.budget.gamma_bar *= 2;
        CHECK(gpa::op_p_asymptotic(gth, b) == doctest::Approx(gpa::op_p_asymptotic(gth, a) / 2).epsilon(1e-14));
        CHECK(gpa::op_q_asymptotic(gth, b) == doctest::Approx(gpa::op_q_asymptotic(gth, a) / 2).epsilon(1e-14));

        const auto hi = case1(60);
        CHECK(gpa::op_p_asymptotic(10, hi) / gpa::op_p(10, hi) == doctest::Approx(1).epsilon(0.05));
        CHECK(gpa::op_q_asymptotic(2, hi) / gpa::op_q(2, hi) == doctest::Approx(1).epsilon(0.05));
        for (double db : {0.0, 30.0, 70.0})
            CHECK(gpa::op_q_asymptotic(5, case1(db)) == 1.0);

        // slope of the exact closed forms over 50-70 dB, far user with a_th > 0
        std::vector<double> grid{50, 55, 60, 65, 70}, p, q;
        for (double db : grid) {
            p.push_back(gpa::op_p(10, case1(db)));
            q.push_back(gpa::op_q(2, case1(db)));
        }
        CHECK(fit_loglog_slope(grid, p) == doctest::Approx(-1).epsilon(0.05));
        CHECK(fit_loglog_slope(grid, q) == doctest::Approx(-1).epsilon(0.05));
        std::vector<double> asym;
        for (double db : grid)
            asym.push_back(gpa::op_q_asymptotic(2, case1(db)));
        CHECK(fit_loglog_slope(grid, asym) == doctest::Approx(-1).epsilon(1e-12));
    }

    TEST_CASE("property: outage monotone and bounded")
    {
        for (double db = 0; db <= 40; db += 5) {
            double prev_p = 0, prev_q = 0;
            for (double gth : {0.1, 0.5, 1.0, 2.0, 3.0, 3.9, 5.0, 10.0, 50.0}) {
                const double p = gpa::op_p(gth, case1(db));
                const double q = gpa::op_q(gth, case1(db));
                CHECK(p >= 0);
                CHECK(p <= 1);
                CHECK(q <= 1);
                CHECK(p >= prev_p);
                CHECK(q >= prev_q);
                prev_p = p;
                prev_q = q;
            }
        }
        for (double gth : {0.5, 2.0, 10.0}) {
            double prev_p = 1, prev_q = 1;
            for (double db = -10; db <= 60; db += 5) {
                const double p = gpa::op_p(gth, case1(db));
                const double q = gpa::op_q(gth, case1(db));
                CHECK(p <= prev_p);
                CHECK(q <= prev_q);
                prev_p = p;
                prev_q = q;
            }
        }
        // certain outage for every gamma_th >= 1/a - 1
        for (double a : {0.1, 0.2, 0.3, 0.45})
            for (double gth : {1 / a - 1, 1 / a, 2 / a, 100.0})
                CHECK(gpa::op_q(gth, case1(20, 0.15, a)) == 1.0);
    }

    TEST_CASE("ec_lambda")
    {
        const FtrSeries rayleigh = ftr::build_series({2.0, 0.0, 0.0, 0.5});
        CHECK(gpa::ec_lambda(1e-12, rayleigh) < 1e-11);
        CHECK(gpa::ec_lambda(2, rayleigh) == doctest::Approx(oracle::kExpE1_1 / std::log(2)).epsilon(1e-12));

        const FtrSeries s2q = ftr::build_series(testing::kCase2q, 120);
        CHECK(rel_err(gpa::ec_lambda(5, s2q), oracle::kEcLambda_case2q_b5) < 1e-9);
        CHECK(rel_err(gpa::ec_lambda_quadrature(5, s2q), gpa::ec_lambda(5, s2q)) < 1e-6);
    }

    TEST_CASE("property: ec_lambda equals direct quadrature")
    {
        static const std::vector<FtrSeries> pool{
            series_1p(), series_1q(), ftr::build_series(testing::kCase2p),
            ftr::build_series(testing::kCase3p), ftr::build_series(testing::kCase6q)};
        rng::Stream s(21, 0, 0);
        for (int i = 0; i < 20; ++i) {
            const auto& series = pool[static_cast<std::size_t>(s.uniform() * pool.size())];
            const double b = std::pow(10.0, -2 + 6 * s.uniform());
            CHECK(rel_err(gpa::ec_lambda_quadrature(b, series), gpa::ec_lambda(b, series)) < 1e-6);
        }
    }

    TEST_CASE("ec")
    {
        const FtrSeries sp = ftr::build_series(testing::kCapacityP);
        const FtrSeries sq = ftr::build_series(testing::kCapacityQ);
        auto scenario = [&](double db) {
            return GpaScenario{sp, sq, {2, 0.1, noma::db_to_linear(db)}, {0.2}};
        };
        CHECK(gpa::ec(scenario(-80)) < 1e-6);
        double prev = 0;
        for (double db = 0; db <= 45; db += 5) {
            const double v = gpa::ec(scenario(db));
            CHECK(v >= prev);
            prev = v;
        }

        Scenario sc;
        sc.user_p = testing::kCapacityP;
        sc.user_q = testing::kCapacityQ;
        sc.budget = {2, 0.1, 1};
        sc.schemes = {Scheme::gpa(0.2)};
        sc.gamma_bar_grid_db = {20, 30};
        sc.seed = 102;
        const auto r = mc::simulate_ec(sc).front();
        for (std::size_t i = 0; i < r.axis.size(); ++i)
            CHECK(rel_err(gpa::ec(scenario(r.axis[i])), r.estimate[i]) < 0.01);
    }
}
