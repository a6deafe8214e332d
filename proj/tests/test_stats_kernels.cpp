#include <doctest.h>

#include <cmath>
#include <numbers>

#include "poolstat/errors.hpp"
#include "poolstat/stats_kernels.hpp"

using namespace poolstat;

TEST_CASE("alpha range") {
    CHECK_THROWS_AS(Alpha(0.0), data_error);
    CHECK_THROWS_AS(Alpha(1.0), data_error);
    CHECK_NOTHROW(Alpha(0.025));
}

TEST_CASE("student t quantile closed forms") {
    // df = 1 is Cauchy: quantile = tan(pi (p - 1/2)).
    for (const double p : {0.6, 0.9, 0.975, 0.999}) {
        CHECK(student_t_quantile(1, p) ==
              doctest::Approx(std::tan(std::numbers::pi * (p - 0.5))).epsilon(1e-8));
    }
    CHECK(student_t_quantile(1, 0.975) == doctest::Approx(12.7062).epsilon(1e-5));

    // df = 2 closed form: g sqrt(2 / (1 - g^2)) with g = 2p - 1.
    for (const double p : {0.55, 0.8, 0.975}) {
        const double g = 2.0 * p - 1.0;
        CHECK(student_t_quantile(2, p) ==
              doctest::Approx(g * std::sqrt(2.0 / (1.0 - g * g))).epsilon(1e-8));
    }

    CHECK(student_t_quantile(7, 0.5) == 0.0);
    CHECK(student_t_quantile(10, 0.975) == doctest::Approx(2.2281).epsilon(1e-4));
}

TEST_CASE("student t antisymmetry and CDF roundtrip") {
    for (const int df : {1, 2, 5, 30, 199}) {
        for (const double p : {0.01, 0.31, 0.62, 0.9, 0.995}) {
            const double q = student_t_quantile(df, p);
            CHECK(q + student_t_quantile(df, 1.0 - p) == doctest::Approx(0.0).epsilon(1e-9));
            CHECK(student_t_cdf(df, q) == doctest::Approx(p).epsilon(1e-7));
        }
    }
    CHECK_THROWS_AS(student_t_quantile(0, 0.5), data_error);
    CHECK_THROWS_AS(student_t_quantile(3, 1.0), data_error);
}

TEST_CASE("chi square quantile") {
    // df = 2 is exponential with mean 2: quantile = -2 ln(1 - p).
    for (const double p : {0.025, 0.5, 0.975}) {
        CHECK(chi_square_quantile(2, p) ==
              doctest::Approx(-2.0 * std::log1p(-p)).epsilon(1e-8));
    }
    CHECK(chi_square_quantile(2, 0.975) == doctest::Approx(7.3778).epsilon(1e-4));
    CHECK(chi_square_quantile(2, 0.025) == doctest::Approx(0.0506).epsilon(1e-2));
    CHECK(chi_square_quantile(40, 0.975) == doctest::Approx(59.342).epsilon(1e-4));

    for (const int df : {1, 2, 5, 40, 160}) {
        double prev = 0.0;
        for (const double p : {0.01, 0.2, 0.5, 0.8, 0.99}) {
            const double q = chi_square_quantile(df, p);
            CHECK(q > prev);
            prev = q;
            CHECK(chi_square_cdf(df, q) == doctest::Approx(p).epsilon(1e-7));
        }
    }
    CHECK_THROWS_AS(chi_square_quantile(0, 0.5), data_error);
    CHECK_THROWS_AS(chi_square_quantile(2, 0.0), data_error);
}

TEST_CASE("ks critical value") {
    // Asymptotic approximation at n = 30 (95% band).
    CHECK(std::fabs(ks_critical(30, Alpha(0.025)) - 0.2417) < 5e-5);

    // First term dominates for huge n.
    const double first = std::sqrt(std::log(40.0) / (2.0 * 1e6));
    CHECK(std::fabs(ks_critical(1000000, Alpha(0.025)) - first) < 1e-4);

    // Small-sample table anchors.
    CHECK(ks_critical(1, Alpha(0.025)) == doctest::Approx(0.975).epsilon(1e-12));
    CHECK(ks_critical(5, Alpha(0.025)) == doctest::Approx(0.56328).epsilon(1e-12));
    CHECK(ks_critical(20, Alpha(0.05)) == doctest::Approx(0.26473).epsilon(1e-12));
    CHECK(ks_critical(10, Alpha(0.1)) == doctest::Approx(0.32260).epsilon(1e-12));

    // Table/formula seam stays continuous and ordered.
    for (const double a : {0.1, 0.05, 0.025}) {
        const double at20 = ks_critical(20, Alpha(a));
        const double at21 = ks_critical(21, Alpha(a));
        CHECK(std::fabs(at20 - at21) < 0.01);
        CHECK(at21 < at20);
    }

    // Decreasing in n on each branch.
    for (const double a : {0.1, 0.05, 0.025}) {
        for (long n = 2; n <= 20; ++n) {
            CHECK(ks_critical(n, Alpha(a)) < ks_critical(n - 1, Alpha(a)));
        }
        for (long n = 22; n <= 200; ++n) {
            CHECK(ks_critical(n, Alpha(a)) < ks_critical(n - 1, Alpha(a)));
        }
    }

    // Decreasing as alpha grows, for fixed n.
    for (const long n : {5L, 30L, 100L}) {
        CHECK(ks_critical(n, Alpha(0.1)) < ks_critical(n, Alpha(0.05)));
        CHECK(ks_critical(n, Alpha(0.05)) < ks_critical(n, Alpha(0.025)));
    }

    CHECK_THROWS_AS(ks_critical(30, Alpha(0.07)), data_error);
    CHECK_THROWS_AS(ks_critical(0, Alpha(0.05)), data_error);
}
