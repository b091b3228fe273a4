#pragma once

// Baseline distribution abstraction: a univariate continuous law given by
// closed-form cdf/survival/density triples, plus the hazard helpers that
// the power-family and ordering machinery consume.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace randext {

using RealFn = std::function<double(double)>;

// Survival values below this are clamped to exact zero; ratios over such
// denominators become indeterminate markers (NaN) instead of garbage.
inline constexpr double kDenomFloor = 1e-300;

inline double indeterminate() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_indeterminate(double v) { return std::isnan(v); }

struct BaselineModel {
    RealFn cdf;
    RealFn survival;
    RealFn density;
    RealFn quantile;   // inverse cdf; may be empty, sampling then bisects
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    std::string name;
};

struct HazardPair {
    RealFn hazard;           // r(x) = f(x)/F_bar(x)
    RealFn reversed_hazard;  // rbar(x) = f(x)/F(x)
};

inline BaselineModel make_exponential(double rate) {
    if (!(rate > 0.0)) {
        throw std::invalid_argument("make_exponential: rate must be positive");
    }
    BaselineModel m;
    m.name = "exponential";
    m.lower = 0.0;
    m.upper = std::numeric_limits<double>::infinity();
    m.cdf = [rate](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); };
    m.survival = [rate](double x) {
        if (x <= 0.0) return 1.0;
        double s = std::exp(-rate * x);
        return s < kDenomFloor ? 0.0 : s;
    };
    m.density = [rate](double x) { return x < 0.0 ? 0.0 : rate * std::exp(-rate * x); };
    m.quantile = [rate](double p) { return -std::log1p(-p) / rate; };
    return m;
}

inline BaselineModel make_weibull(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0)) {
        throw std::invalid_argument("make_weibull: shape and scale must be positive");
    }
    BaselineModel m;
    m.name = "weibull";
    m.lower = 0.0;
    m.upper = std::numeric_limits<double>::infinity();
    m.cdf = [shape, scale](double x) {
        return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / scale, shape));
    };
    m.survival = [shape, scale](double x) {
        if (x <= 0.0) return 1.0;
        double s = std::exp(-std::pow(x / scale, shape));
        return s < kDenomFloor ? 0.0 : s;
    };
    m.density = [shape, scale](double x) {
        if (x <= 0.0) return 0.0;
        double z = std::pow(x / scale, shape);
        return (shape / scale) * std::pow(x / scale, shape - 1.0) * std::exp(-z);
    };
    m.quantile = [shape, scale](double p) {
        return scale * std::pow(-std::log1p(-p), 1.0 / shape);
    };
    return m;
}

inline HazardPair hazard_pair(const BaselineModel& model) {
    if (!model.density) {
        throw std::invalid_argument("hazard_pair: baseline has no density");
    }
    HazardPair hp;
    hp.hazard = [f = model.density, s = model.survival](double x) {
        double denom = s(x);
        if (!(denom > kDenomFloor)) return indeterminate();
        return f(x) / denom;
    };
    hp.reversed_hazard = [f = model.density, c = model.cdf](double x) {
        double denom = c(x);
        if (!(denom > kDenomFloor)) return indeterminate();
        return f(x) / denom;
    };
    return hp;
}

// x / (u^{-x} - 1), extended by continuity: the x=0 limit is -1/ln(u),
// the u=1 limit is +inf, and u=0 gives 0 for x>0.
inline double lemma_ratio(double x, double u) {
    if (!(u >= 0.0) || !(u <= 1.0)) {
        throw std::invalid_argument("lemma_ratio: u must lie in [0,1]");
    }
    if (!(x >= 0.0)) {
        throw std::invalid_argument("lemma_ratio: x must be nonnegative");
    }
    if (u == 1.0) return std::numeric_limits<double>::infinity();
    if (u == 0.0) return 0.0;
    if (x == 0.0) return -1.0 / std::log(u);
    double denom = std::expm1(-x * std::log(u));
    if (std::isinf(denom)) return 0.0;
    return x / denom;
}

}  // namespace randext
