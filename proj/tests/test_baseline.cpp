#include <doctest.h>

#include <cmath>
#include <random>

#include "randext/baseline.hpp"
#include "randext/grid.hpp"

using namespace randext;

TEST_CASE("exponential closed forms") {
    BaselineModel m = make_exponential(1.0);
    CHECK(m.survival(0.0) == doctest::Approx(1.0));
    CHECK(m.survival(1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-12));
    CHECK(m.cdf(1.0) + m.survival(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(m.lower == 0.0);
    CHECK(std::isinf(m.upper));

    BaselineModel m2 = make_exponential(2.0);
    HazardPair hp2 = hazard_pair(m2);
    for (double x : {0.1, 0.5, 1.0, 3.0, 7.0}) {
        CHECK(hp2.hazard(x) == doctest::Approx(2.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(make_exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_exponential(-1.0), std::invalid_argument);
}

TEST_CASE("cdf limits at support endpoints") {
    BaselineModel m = make_exponential(1.0);
    CHECK(m.cdf(1e-9) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(m.cdf(40.0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("hazard pair of the exponential") {
    BaselineModel m = make_exponential(1.0);
    HazardPair hp = hazard_pair(m);
    CHECK(hp.hazard(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hp.hazard(1e-8) == doctest::Approx(1.0).epsilon(1e-7));
    // rbar(1) = 1/(e-1)
    CHECK(hp.reversed_hazard(1.0) == doctest::Approx(0.5819767068693265).epsilon(1e-12));
    BaselineModel m2 = make_exponential(2.0);
    // rbar(1) = 2/(e^2-1)
    CHECK(hazard_pair(m2).reversed_hazard(1.0) ==
          doctest::Approx(0.3130352854993313).epsilon(1e-12));
    // underflowing survival yields a marker, not a crash
    CHECK(is_indeterminate(hp.hazard(1000.0)));
    // reversed hazard at the lower bound has a zero denominator
    CHECK(is_indeterminate(hp.reversed_hazard(0.0)));
}

TEST_CASE("lemma ratio values and limits") {
    double u = std::exp(-1.0);
    CHECK(lemma_ratio(1.0, u) == doctest::Approx(0.5819767068693265).epsilon(1e-12));
    CHECK(lemma_ratio(0.0, u) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lemma_ratio(0.5, 0.5) >= lemma_ratio(2.0, 0.5));
    CHECK(lemma_ratio(1.0, 0.0) == 0.0);
    CHECK(std::isinf(lemma_ratio(2.0, 1.0)));
    CHECK_THROWS_AS(lemma_ratio(1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(lemma_ratio(1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(lemma_ratio(-1.0, 0.5), std::invalid_argument);
}

TEST_CASE("lemma ratio is nonincreasing in x") {
    // log-spaced x in (0, 50], u swept over (0,1)
    std::vector<double> xs;
    for (int i = 0; i <= 60; ++i) xs.push_back(50.0 * std::pow(10.0, -4.0 * (60 - i) / 60.0));
    for (int k = 1; k <= 40; ++k) {
        double u = static_cast<double>(k) / 41.0;
        for (std::size_t i = 1; i < xs.size(); ++i) {
            CHECK(lemma_ratio(xs[i - 1], u) >= lemma_ratio(xs[i], u) - 1e-12);
        }
    }
}

TEST_CASE("density matches finite difference of cdf") {
    for (const BaselineModel& m : {make_exponential(1.3), make_weibull(2.0, 1.5)}) {
        EvaluationGrid grid = make_linear_grid(0.05, 5.0, 64);
        double h = 1e-6;
        for (double x : grid.xs) {
            double fd = (m.cdf(x + h) - m.cdf(x - h)) / (2.0 * h);
            double f = m.density(x);
            CHECK(std::abs(fd - f) <= std::max(1e-6, 1e-4 * std::abs(f)));
        }
    }
}

TEST_CASE("weibull sanity") {
    BaselineModel m = make_weibull(2.0, 1.0);
    CHECK(m.survival(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(m.cdf(0.7) + m.survival(0.7) == doctest::Approx(1.0).epsilon(1e-13));
    // quantile inverts the cdf
    for (double p : {0.1, 0.5, 0.9, 0.999}) {
        CHECK(m.cdf(m.quantile(p)) == doctest::Approx(p).epsilon(1e-10));
    }
    CHECK_THROWS_AS(make_weibull(-1.0, 1.0), std::invalid_argument);
}
