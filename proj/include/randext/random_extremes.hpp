#pragma once

// Random-sample-size mixtures of extreme order statistics and a seeded
// Monte-Carlo sampler used as an independent cross-check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "randext/grid.hpp"
#include "randext/power_systems.hpp"

namespace randext {

struct SampleSizePMF {
    std::vector<int> support;   // strictly increasing, positive
    std::vector<double> probs;  // positive, sums to 1

    SampleSizePMF(std::vector<int> s, std::vector<double> p)
        : support(std::move(s)), probs(std::move(p)) {
        if (support.empty() || support.size() != probs.size()) {
            throw std::invalid_argument("SampleSizePMF: support/probs mismatch");
        }
        int prev = 0;
        double total = 0.0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (support[i] <= prev) {
                throw std::invalid_argument("SampleSizePMF: support must be strictly increasing positive");
            }
            if (!(probs[i] > 0.0)) {
                throw std::invalid_argument("SampleSizePMF: probabilities must be positive");
            }
            prev = support[i];
            total += probs[i];
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw std::invalid_argument("SampleSizePMF: probabilities must sum to 1");
        }
    }

    int min_n() const { return support.front(); }
    int max_n() const { return support.back(); }
};

enum class CurveKind { MinCdf, MinSurvival, MaxCdf, MaxSurvival };

struct MixtureCurve {
    EvaluationGrid grid;
    std::vector<double> values;
    CurveKind kind;
};

namespace detail {

inline void require_compatible(const ProportionalSystem& sys, const SampleSizePMF& pmf) {
    if (pmf.max_n() > sys.size()) {
        throw std::invalid_argument("pmf support exceeds system size");
    }
}

template <typename FixedN>
MixtureCurve mix(const ProportionalSystem& sys, const SampleSizePMF& pmf,
                 const EvaluationGrid& grid, CurveKind kind, FixedN fixed) {
    require_compatible(sys, pmf);
    validate_grid(grid);
    MixtureCurve curve{grid, std::vector<double>(grid.size(), 0.0), kind};
    for (std::size_t k = 0; k < pmf.support.size(); ++k) {
        int n = pmf.support[k];
        double p = pmf.probs[k];
        for (std::size_t j = 0; j < grid.size(); ++j) {
            curve.values[j] += p * fixed(n, grid.xs[j]);
        }
    }
    return curve;
}

}  // namespace detail

inline MixtureCurve random_min_cdf(const ProportionalSystem& sys, const SampleSizePMF& pmf,
                                   const EvaluationGrid& grid) {
    return detail::mix(sys, pmf, grid, CurveKind::MinCdf,
                       [&sys](int n, double x) { return min_cdf(sys, n, x); });
}

inline MixtureCurve random_min_survival(const ProportionalSystem& sys, const SampleSizePMF& pmf,
                                        const EvaluationGrid& grid) {
    return detail::mix(sys, pmf, grid, CurveKind::MinSurvival,
                       [&sys](int n, double x) { return min_survival(sys, n, x); });
}

inline MixtureCurve random_max_cdf(const ProportionalSystem& sys, const SampleSizePMF& pmf,
                                   const EvaluationGrid& grid) {
    return detail::mix(sys, pmf, grid, CurveKind::MaxCdf,
                       [&sys](int n, double x) { return max_cdf(sys, n, x); });
}

inline MixtureCurve random_max_survival(const ProportionalSystem& sys, const SampleSizePMF& pmf,
                                        const EvaluationGrid& grid) {
    return detail::mix(sys, pmf, grid, CurveKind::MaxSurvival,
                       [&sys](int n, double x) { return max_survival(sys, n, x); });
}

enum class ExtremeMode { Min, Max };

namespace detail {

// Per-replicate counter RNG; stream i depends only on (seed, i), so results
// are independent of evaluation order.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in (0,1)
    double unif() {
        double v = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return v > 0.0 ? v : 0x1.0p-53;
    }
};

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g{seed ^ (0x6a09e667f3bcc909ULL + index * 0x2545f4914f6cdd1dULL)};
    return g.next();
}

// Invert the baseline cdf at probability p: closed form when a quantile is
// supplied, otherwise bisection to 1e-12 x-tolerance.
inline double baseline_quantile(const BaselineModel& m, double p) {
    if (m.quantile) return m.quantile(p);
    double lo = std::isfinite(m.lower) ? m.lower : -1.0;
    double hi = std::isfinite(m.upper) ? m.upper : 1.0;
    if (!std::isfinite(m.lower)) {
        while (m.cdf(lo) > p) lo *= 2.0;
    }
    if (!std::isfinite(m.upper)) {
        while (m.cdf(hi) < p) hi *= 2.0;
    }
    while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
        double mid = 0.5 * (lo + hi);
        (m.cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline double draw_component(const ProportionalSystem& sys, int i, SplitMix64& rng) {
    double e = sys.component_exponent(i);
    double u = rng.unif();
    if (sys.kind() == PowerKind::SurvivalPower) {
        // Fbar(x)^e = u  =>  F(x) = 1 - u^{1/e}
        return baseline_quantile(sys.baseline(), 1.0 - std::pow(u, 1.0 / e));
    }
    // F(x)^e = u  =>  F(x) = u^{1/e}
    return baseline_quantile(sys.baseline(), std::pow(u, 1.0 / e));
}

}  // namespace detail

inline std::vector<double> mc_sample_extreme(const ProportionalSystem& sys,
                                             const SampleSizePMF& pmf, ExtremeMode mode,
                                             std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("mc_sample_extreme: count must be positive");
    detail::require_compatible(sys, pmf);
    std::vector<double> out(count);
    std::vector<double> cum(pmf.probs.size());
    std::partial_sum(pmf.probs.begin(), pmf.probs.end(), cum.begin());
    for (std::size_t rep = 0; rep < count; ++rep) {
        detail::SplitMix64 rng{detail::stream_seed(seed, rep)};
        double un = rng.unif();
        int n = pmf.support.back();
        for (std::size_t k = 0; k < cum.size(); ++k) {
            if (un <= cum[k]) {
                n = pmf.support[k];
                break;
            }
        }
        double extreme = detail::draw_component(sys, 1, rng);
        for (int i = 2; i <= n; ++i) {
            double v = detail::draw_component(sys, i, rng);
            extreme = mode == ExtremeMode::Min ? std::min(extreme, v) : std::max(extreme, v);
        }
        out[rep] = extreme;
    }
    return out;
}

// Fraction of the (sorted or unsorted) sample at or below x.
inline double empirical_cdf(const std::vector<double>& sorted_sample, double x) {
    auto it = std::upper_bound(sorted_sample.begin(), sorted_sample.end(), x);
    return static_cast<double>(it - sorted_sample.begin()) /
           static_cast<double>(sorted_sample.size());
}

// Sup-distance between the empirical cdf of the sample and an analytic cdf
// curve evaluated on its grid.
inline double kolmogorov_distance(std::vector<double> sample, const MixtureCurve& analytic_cdf) {
    std::sort(sample.begin(), sample.end());
    double sup = 0.0;
    for (std::size_t j = 0; j < analytic_cdf.grid.size(); ++j) {
        double emp = empirical_cdf(sample, analytic_cdf.grid.xs[j]);
        sup = std::max(sup, std::abs(emp - analytic_cdf.values[j]));
    }
    return sup;
}

}  // namespace randext
