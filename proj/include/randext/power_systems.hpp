#pragma once

// Power-transform component families over a shared baseline, and the
// closed-form distributions / hazards of the sample minimum and maximum.
//
// A SurvivalPower component has survival Fbar^lambda_i (proportional
// hazards); a CdfPower component has cdf F^lambda_i (proportional reversed
// hazards). Minima of SurvivalPower and maxima of CdfPower collapse to a
// single power with the cumulative exponent; the other combinations are
// evaluated as products over the prefix.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "randext/baseline.hpp"

namespace randext {

enum class PowerKind { SurvivalPower, CdfPower };

struct ProportionalComponent {
    double exponent;
    PowerKind kind;
};

class ProportionalSystem {
public:
    ProportionalSystem(BaselineModel baseline, PowerKind kind,
                       std::vector<double> exponents, std::string label = "")
        : baseline_(std::move(baseline)), kind_(kind), exponents_(std::move(exponents)),
          label_(std::move(label)) {
        if (exponents_.empty()) {
            throw std::invalid_argument("ProportionalSystem: needs at least one component");
        }
        prefix_.reserve(exponents_.size());
        double acc = 0.0;
        for (double e : exponents_) {
            if (!(e > 0.0)) {
                throw std::invalid_argument("ProportionalSystem: exponents must be positive");
            }
            acc += e;
            prefix_.push_back(acc);
        }
    }

    const BaselineModel& baseline() const { return baseline_; }
    PowerKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    int size() const { return static_cast<int>(exponents_.size()); }
    const std::vector<double>& exponents() const { return exponents_; }

    // Lambda_n = sum of the first n exponents (N=n selects the list prefix).
    double cumulative_exponent(int n) const {
        check_n(n);
        return prefix_[static_cast<std::size_t>(n) - 1];
    }

    double component_exponent(int i) const {
        check_n(i);
        return exponents_[static_cast<std::size_t>(i) - 1];
    }

    // Marginal of component i.
    double component_cdf(int i, double x) const {
        double e = component_exponent(i);
        if (kind_ == PowerKind::CdfPower) return std::pow(baseline_.cdf(x), e);
        return 1.0 - std::pow(baseline_.survival(x), e);
    }
    double component_survival(int i, double x) const {
        double e = component_exponent(i);
        if (kind_ == PowerKind::SurvivalPower) return std::pow(baseline_.survival(x), e);
        return 1.0 - std::pow(baseline_.cdf(x), e);
    }

private:
    void check_n(int n) const {
        if (n < 1 || n > size()) {
            throw std::out_of_range("ProportionalSystem: index out of range");
        }
    }

    BaselineModel baseline_;
    PowerKind kind_;
    std::vector<double> exponents_;
    std::vector<double> prefix_;
    std::string label_;
};

inline double min_survival(const ProportionalSystem& sys, int n, double x) {
    if (sys.kind() == PowerKind::SurvivalPower) {
        return std::pow(sys.baseline().survival(x), sys.cumulative_exponent(n));
    }
    double prod = 1.0;
    for (int i = 1; i <= n; ++i) prod *= sys.component_survival(i, x);
    return prod;
}

inline double min_cdf(const ProportionalSystem& sys, int n, double x) {
    return 1.0 - min_survival(sys, n, x);
}

inline double max_cdf(const ProportionalSystem& sys, int n, double x) {
    if (sys.kind() == PowerKind::CdfPower) {
        return std::pow(sys.baseline().cdf(x), sys.cumulative_exponent(n));
    }
    double prod = 1.0;
    for (int i = 1; i <= n; ++i) prod *= sys.component_cdf(i, x);
    return prod;
}

inline double max_survival(const ProportionalSystem& sys, int n, double x) {
    return 1.0 - max_cdf(sys, n, x);
}

// Reversed hazard of the minimum, Lambda_n r(x) / (Fbar^{-Lambda_n} - 1).
// Indeterminate at or below the lower support bound.
inline double min_reversed_hazard(const ProportionalSystem& sys, int n, double x) {
    if (sys.kind() != PowerKind::SurvivalPower) {
        throw std::invalid_argument("min_reversed_hazard: requires a SurvivalPower system");
    }
    double lam = sys.cumulative_exponent(n);
    double sbar = sys.baseline().survival(x);
    if (!(sbar > kDenomFloor) || sbar >= 1.0) return indeterminate();
    double r = sys.baseline().density(x) / sbar;
    double denom = std::expm1(-lam * std::log(sbar));
    if (!(denom > 0.0) || std::isinf(denom)) return std::isinf(denom) ? 0.0 : indeterminate();
    return lam * r / denom;
}

// Hazard of the maximum, Lambda_n rbar(x) / (F^{-Lambda_n} - 1).
inline double max_hazard(const ProportionalSystem& sys, int n, double x) {
    if (sys.kind() != PowerKind::CdfPower) {
        throw std::invalid_argument("max_hazard: requires a CdfPower system");
    }
    double lam = sys.cumulative_exponent(n);
    double cdf = sys.baseline().cdf(x);
    if (!(cdf > kDenomFloor) || cdf >= 1.0) return indeterminate();
    double rbar = sys.baseline().density(x) / cdf;
    double denom = std::expm1(-lam * std::log(cdf));
    if (!(denom > 0.0) || std::isinf(denom)) return std::isinf(denom) ? 0.0 : indeterminate();
    return lam * rbar / denom;
}

// d/dx of min_cdf: Lambda_n Fbar^{Lambda_n - 1} f for SurvivalPower;
// general product rule otherwise.
inline double min_density(const ProportionalSystem& sys, int n, double x) {
    double f = sys.baseline().density(x);
    if (sys.kind() == PowerKind::SurvivalPower) {
        double lam = sys.cumulative_exponent(n);
        return lam * std::pow(sys.baseline().survival(x), lam - 1.0) * f;
    }
    double cdf = sys.baseline().cdf(x);
    double total = 0.0;
    for (int i = 1; i <= n; ++i) {
        double e = sys.component_exponent(i);
        double term = e * std::pow(cdf, e - 1.0) * f;  // density of component i
        double prod = 1.0;
        for (int j = 1; j <= n; ++j) {
            if (j != i) prod *= sys.component_survival(j, x);
        }
        total += term * prod;
    }
    return total;
}

inline double max_density(const ProportionalSystem& sys, int n, double x) {
    double f = sys.baseline().density(x);
    if (sys.kind() == PowerKind::CdfPower) {
        double lam = sys.cumulative_exponent(n);
        return lam * std::pow(sys.baseline().cdf(x), lam - 1.0) * f;
    }
    double sbar = sys.baseline().survival(x);
    double total = 0.0;
    for (int i = 1; i <= n; ++i) {
        double e = sys.component_exponent(i);
        double term = e * std::pow(sbar, e - 1.0) * f;
        double prod = 1.0;
        for (int j = 1; j <= n; ++j) {
            if (j != i) prod *= sys.component_cdf(j, x);
        }
        total += term * prod;
    }
    return total;
}

}  // namespace randext
