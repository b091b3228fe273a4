#pragma once

// Grid-based verification of the four stochastic orders (st, hr, rh, lr)
// and sample-size reversed-hazard monotonicity. Verdicts are semi-decisions:
// "holds" means no violation was found on the supplied grid.

#include <cmath>
#include <functional>
#include <vector>

#include "randext/baseline.hpp"
#include "randext/grid.hpp"
#include "randext/power_systems.hpp"

namespace randext {

enum class OrderKind { St, Hr, Rh, Lr };

struct OrderWitness {
    double x;
    double lhs;
    double rhs;
};

struct OrderVerdict {
    bool holds = false;
    OrderKind order = OrderKind::St;
    std::vector<OrderWitness> witnesses;
    int indeterminate_count = 0;
    // True when every grid point was indeterminate: neither holds nor fails.
    bool all_indeterminate = false;
};

inline double monotone_slack(double value) {
    return std::max(1e-9, 1e-9 * std::abs(value));
}

namespace detail {

// Nondecreasing-ratio check shared by hr/rh/lr: num(x)/den(x) must not
// decrease along the grid by more than the relative slack. Points whose
// denominator underflows are excluded and counted.
inline OrderVerdict ratio_nondecreasing(const RealFn& num, const RealFn& den,
                                        const EvaluationGrid& grid, OrderKind order) {
    validate_grid(grid);
    OrderVerdict verdict;
    verdict.order = order;
    double prev = indeterminate();
    double prev_x = 0.0;
    int valid = 0;
    for (double x : grid.xs) {
        double d = den(x);
        double n = num(x);
        if (!std::isfinite(d) || !std::isfinite(n) || !(d > kDenomFloor)) {
            ++verdict.indeterminate_count;
            continue;
        }
        double ratio = n / d;
        if (!std::isfinite(ratio)) {
            ++verdict.indeterminate_count;
            continue;
        }
        ++valid;
        if (!is_indeterminate(prev) && ratio < prev - monotone_slack(prev)) {
            verdict.witnesses.push_back({x, prev, ratio});
        }
        prev = ratio;
        prev_x = x;
    }
    (void)prev_x;
    verdict.all_indeterminate = valid == 0;
    verdict.holds = !verdict.all_indeterminate && verdict.witnesses.empty();
    return verdict;
}

}  // namespace detail

// X <=_st Y: Fbar_X <= Fbar_Y pointwise.
inline OrderVerdict check_st(const RealFn& survivalX, const RealFn& survivalY,
                             const EvaluationGrid& grid) {
    validate_grid(grid);
    OrderVerdict verdict;
    verdict.order = OrderKind::St;
    int valid = 0;
    for (double x : grid.xs) {
        double sx = survivalX(x);
        double sy = survivalY(x);
        if (!std::isfinite(sx) || !std::isfinite(sy)) {
            ++verdict.indeterminate_count;
            continue;
        }
        ++valid;
        if (sx > sy + 1e-12) {
            verdict.witnesses.push_back({x, sx, sy});
        }
    }
    verdict.all_indeterminate = valid == 0;
    verdict.holds = !verdict.all_indeterminate && verdict.witnesses.empty();
    return verdict;
}

// X <=_hr Y: Fbar_Y / Fbar_X nondecreasing.
inline OrderVerdict check_hr(const RealFn& survivalX, const RealFn& survivalY,
                             const EvaluationGrid& grid) {
    return detail::ratio_nondecreasing(survivalY, survivalX, grid, OrderKind::Hr);
}

// X <=_rh Y: F_Y / F_X nondecreasing.
inline OrderVerdict check_rh(const RealFn& cdfX, const RealFn& cdfY, const EvaluationGrid& grid) {
    return detail::ratio_nondecreasing(cdfY, cdfX, grid, OrderKind::Rh);
}

// X <=_lr Y: f_Y / f_X nondecreasing.
inline OrderVerdict check_lr(const RealFn& densityX, const RealFn& densityY,
                             const EvaluationGrid& grid) {
    return detail::ratio_nondecreasing(densityY, densityX, grid, OrderKind::Lr);
}

// X_{1:n1} >=_rh X_{1:n2} for n1 <= n2: F_{1:n1}/F_{1:n2} nondecreasing in x.
inline OrderVerdict check_samplesize_rh_monotone(const ProportionalSystem& sys, int n1, int n2,
                                                 const EvaluationGrid& grid) {
    if (n2 < n1) throw std::invalid_argument("check_samplesize_rh_monotone: need n1 <= n2");
    return detail::ratio_nondecreasing(
        [&sys, n1](double x) { return min_cdf(sys, n1, x); },
        [&sys, n2](double x) { return min_cdf(sys, n2, x); }, grid, OrderKind::Rh);
}

}  // namespace randext
