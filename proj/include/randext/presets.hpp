#pragma once

// Built-in worked-example configurations: five proportional components with
// exponents (0.1, 0.2, 0.25, 0.35, 0.5) against (0.05, 0.15, 0.23, 0.33, 0.5)
// over a unit-rate exponential baseline, and sample size N with
// p(3)=1/5, p(4)=2/5, p(5)=2/5.

#include "randext/power_systems.hpp"
#include "randext/random_extremes.hpp"

namespace randext {

struct ExampleSetup {
    ProportionalSystem sysX;
    ProportionalSystem sysY;
    SampleSizePMF pmf;
};

inline std::vector<double> example_x_exponents() { return {0.1, 0.2, 0.25, 0.35, 0.5}; }
inline std::vector<double> example_y_exponents() { return {0.05, 0.15, 0.23, 0.33, 0.5}; }

inline SampleSizePMF example_pmf() {
    return SampleSizePMF({3, 4, 5}, {1.0 / 5.0, 2.0 / 5.0, 2.0 / 5.0});
}

// Survival-power components: minima and their reversed hazards.
inline ExampleSetup example1() {
    BaselineModel base = make_exponential(1.0);
    return {ProportionalSystem(base, PowerKind::SurvivalPower, example_x_exponents(), "X"),
            ProportionalSystem(base, PowerKind::SurvivalPower, example_y_exponents(), "Y"),
            example_pmf()};
}

// Cdf-power components: maxima and their hazards.
inline ExampleSetup example2() {
    BaselineModel base = make_exponential(1.0);
    return {ProportionalSystem(base, PowerKind::CdfPower, example_x_exponents(), "X"),
            ProportionalSystem(base, PowerKind::CdfPower, example_y_exponents(), "Y"),
            example_pmf()};
}

}  // namespace randext
