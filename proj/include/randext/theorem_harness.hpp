#pragma once

// End-to-end hypothesis + conclusion verification for the preservation
// theorems on random extremes, plus the iid infeasibility demonstrations.
//
// A report is Verified only when every hypothesis, every per-n premise, and
// the mixture-level conclusion hold. ConclusionFailed with all hypotheses
// holding is a red-alert state: it contradicts the underlying theory and is
// surfaced as such, never as an ordinary configuration failure.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "randext/order_checks.hpp"
#include "randext/random_extremes.hpp"
#include "randext/sign_analysis.hpp"

namespace randext {

enum class TheoremId { T31, T32, T33, T34, C31 };
enum class TheoremOutcome { Verified, HypothesisFailed, ConclusionFailed };

struct NamedVerdict {
    std::string name;
    bool holds = false;
    int witness_count = 0;
    bool indeterminate = false;
};

struct TheoremReport {
    TheoremId theorem_id;
    std::vector<NamedVerdict> hypothesis_results;
    std::vector<NamedVerdict> premise_results;
    OrderVerdict conclusion_result;
    TheoremOutcome overall = TheoremOutcome::HypothesisFailed;
};

namespace detail {

using Family = std::function<double(int, double)>;

inline NamedVerdict from_order_verdict(std::string name, const OrderVerdict& v) {
    return {std::move(name), v.holds, static_cast<int>(v.witnesses.size()), v.all_indeterminate};
}

// num(n,x)/den(n,x) monotone in n (consecutive integers in [n_lo, n_hi])
// at every grid x, with the standard relative slack.
inline NamedVerdict family_ratio_monotone_in_n(std::string name, const Family& num,
                                               const Family& den, int n_lo, int n_hi,
                                               const EvaluationGrid& grid, bool nondecreasing) {
    NamedVerdict verdict{std::move(name), true, 0, false};
    int valid = 0;
    for (double x : grid.xs) {
        double prev = indeterminate();
        for (int n = n_lo; n <= n_hi; ++n) {
            double d = den(n, x);
            double nu = num(n, x);
            if (!std::isfinite(d) || !std::isfinite(nu) || !(std::abs(d) > kDenomFloor)) continue;
            double ratio = nu / d;
            if (!std::isfinite(ratio)) continue;
            ++valid;
            if (!is_indeterminate(prev)) {
                double slack = monotone_slack(prev);
                bool bad = nondecreasing ? ratio < prev - slack : ratio > prev + slack;
                if (bad) ++verdict.witness_count;
            }
            prev = ratio;
        }
    }
    verdict.indeterminate = valid == 0;
    verdict.holds = !verdict.indeterminate && verdict.witness_count == 0;
    return verdict;
}

inline NamedVerdict family_value_nonincreasing_in_n(std::string name, const Family& value,
                                                    int n_lo, int n_hi,
                                                    const EvaluationGrid& grid) {
    NamedVerdict verdict{std::move(name), true, 0, false};
    int valid = 0;
    for (double x : grid.xs) {
        double prev = indeterminate();
        for (int n = n_lo; n <= n_hi; ++n) {
            double v = value(n, x);
            if (!std::isfinite(v)) continue;
            ++valid;
            if (!is_indeterminate(prev) && v > prev + monotone_slack(prev)) {
                ++verdict.witness_count;
            }
            prev = v;
        }
    }
    verdict.indeterminate = valid == 0;
    verdict.holds = !verdict.indeterminate && verdict.witness_count == 0;
    return verdict;
}

inline void require_matched_systems(const ProportionalSystem& x, const ProportionalSystem& y,
                                    PowerKind kind, const SampleSizePMF& pmf) {
    if (x.kind() != kind || y.kind() != kind) {
        throw std::invalid_argument("theorem harness: wrong component kind for this theorem");
    }
    if (x.size() != y.size()) {
        throw std::invalid_argument("theorem harness: systems must have equal component counts");
    }
    if (x.baseline().name != y.baseline().name) {
        throw std::invalid_argument("theorem harness: systems must share a baseline");
    }
    if (pmf.max_n() > x.size()) {
        throw std::invalid_argument("theorem harness: pmf support exceeds system size");
    }
}

inline TheoremOutcome resolve_overall(const TheoremReport& report) {
    for (const auto& h : report.hypothesis_results) {
        if (!h.holds) return TheoremOutcome::HypothesisFailed;
    }
    for (const auto& p : report.premise_results) {
        if (!p.holds) return TheoremOutcome::HypothesisFailed;
    }
    return report.conclusion_result.holds ? TheoremOutcome::Verified
                                          : TheoremOutcome::ConclusionFailed;
}

// Shared core for the minimum-side theorems and their iid specialization:
// everything is phrased through the min-cdf families F_{1:n}, G_{1:n}.
inline TheoremReport verify_min_rh_core(TheoremId id, const Family& cdfX, const Family& cdfY,
                                        const SampleSizePMF& pmf, const EvaluationGrid& grid,
                                        bool ratio_increasing_in_n) {
    validate_grid(grid);
    TheoremReport report;
    report.theorem_id = id;
    int n_lo = pmf.min_n();
    int n_hi = pmf.max_n();
    report.hypothesis_results.push_back(family_ratio_monotone_in_n(
        ratio_increasing_in_n ? "min_cdf_ratio_nondecreasing_in_n" : "min_cdf_ratio_nonincreasing_in_n",
        cdfX, cdfY, n_lo, n_hi, grid, ratio_increasing_in_n));
    for (int n = n_lo; n <= n_hi; ++n) {
        RealFn fx = [&cdfX, n](double x) { return cdfX(n, x); };
        RealFn fy = [&cdfY, n](double x) { return cdfY(n, x); };
        OrderVerdict premise = ratio_increasing_in_n ? check_rh(fx, fy, grid)
                                                     : check_rh(fy, fx, grid);
        report.premise_results.push_back(from_order_verdict(
            (ratio_increasing_in_n ? "X_leq_rh_Y_at_n=" : "X_geq_rh_Y_at_n=") + std::to_string(n),
            premise));
    }
    auto mixture = [&pmf](const Family& fam) {
        return RealFn([&pmf, &fam](double x) {
            double total = 0.0;
            for (std::size_t k = 0; k < pmf.support.size(); ++k) {
                total += pmf.probs[k] * fam(pmf.support[k], x);
            }
            return total;
        });
    };
    RealFn mixX = mixture(cdfX);
    RealFn mixY = mixture(cdfY);
    report.conclusion_result =
        ratio_increasing_in_n ? check_rh(mixX, mixY, grid) : check_rh(mixY, mixX, grid);
    report.overall = resolve_overall(report);
    return report;
}

// Shared core for the maximum-side theorems, phrased through the survival
// families Fbar_{n:n}, Gbar_{n:n} and the hazard family of the Y-system.
inline TheoremReport verify_max_hr_core(TheoremId id, const Family& survX, const Family& survY,
                                        const Family& hazardY, const SampleSizePMF& pmf,
                                        const EvaluationGrid& grid, bool ratio_increasing_in_n) {
    validate_grid(grid);
    TheoremReport report;
    report.theorem_id = id;
    int n_lo = pmf.min_n();
    int n_hi = pmf.max_n();
    report.hypothesis_results.push_back(family_value_nonincreasing_in_n(
        "max_hazard_Y_nonincreasing_in_n", hazardY, n_lo, n_hi, grid));
    report.hypothesis_results.push_back(family_ratio_monotone_in_n(
        ratio_increasing_in_n ? "max_survival_ratio_nondecreasing_in_n"
                              : "max_survival_ratio_nonincreasing_in_n",
        survX, survY, n_lo, n_hi, grid, ratio_increasing_in_n));
    for (int n = n_lo; n <= n_hi; ++n) {
        RealFn sx = [&survX, n](double x) { return survX(n, x); };
        RealFn sy = [&survY, n](double x) { return survY(n, x); };
        OrderVerdict premise = ratio_increasing_in_n ? check_hr(sy, sx, grid)
                                                     : check_hr(sx, sy, grid);
        report.premise_results.push_back(from_order_verdict(
            (ratio_increasing_in_n ? "X_geq_hr_Y_at_n=" : "X_leq_hr_Y_at_n=") + std::to_string(n),
            premise));
    }
    auto mixture = [&pmf](const Family& fam) {
        return RealFn([&pmf, &fam](double x) {
            double total = 0.0;
            for (std::size_t k = 0; k < pmf.support.size(); ++k) {
                total += pmf.probs[k] * fam(pmf.support[k], x);
            }
            return total;
        });
    };
    RealFn mixX = mixture(survX);
    RealFn mixY = mixture(survY);
    report.conclusion_result =
        ratio_increasing_in_n ? check_hr(mixY, mixX, grid) : check_hr(mixX, mixY, grid);
    report.overall = resolve_overall(report);
    return report;
}

}  // namespace detail

// If F_{1:n}/G_{1:n} is nondecreasing in n and X_{1:n} <=_rh Y_{1:n} per n,
// then X_{1:N} <=_rh Y_{1:N}.
inline TheoremReport verify_t31(const ProportionalSystem& sysX, const ProportionalSystem& sysY,
                                const SampleSizePMF& pmf, const EvaluationGrid& grid) {
    detail::require_matched_systems(sysX, sysY, PowerKind::SurvivalPower, pmf);
    return detail::verify_min_rh_core(
        TheoremId::T31, [&sysX](int n, double x) { return min_cdf(sysX, n, x); },
        [&sysY](int n, double x) { return min_cdf(sysY, n, x); }, pmf, grid, true);
}

// Mirror of T31 with the ratio nonincreasing in n and the premise reversed.
inline TheoremReport verify_t32(const ProportionalSystem& sysX, const ProportionalSystem& sysY,
                                const SampleSizePMF& pmf, const EvaluationGrid& grid) {
    detail::require_matched_systems(sysX, sysY, PowerKind::SurvivalPower, pmf);
    return detail::verify_min_rh_core(
        TheoremId::T32, [&sysX](int n, double x) { return min_cdf(sysX, n, x); },
        [&sysY](int n, double x) { return min_cdf(sysY, n, x); }, pmf, grid, false);
}

// If the Y-maximum hazard is nonincreasing in n, Fbar_{n:n}/Gbar_{n:n} is
// nonincreasing in n and X_{n:n} <=_hr Y_{n:n} per n, then X_{N:N} <=_hr Y_{N:N}.
inline TheoremReport verify_t33(const ProportionalSystem& sysX, const ProportionalSystem& sysY,
                                const SampleSizePMF& pmf, const EvaluationGrid& grid) {
    detail::require_matched_systems(sysX, sysY, PowerKind::CdfPower, pmf);
    return detail::verify_max_hr_core(
        TheoremId::T33, [&sysX](int n, double x) { return max_survival(sysX, n, x); },
        [&sysY](int n, double x) { return max_survival(sysY, n, x); },
        [&sysY](int n, double x) { return max_hazard(sysY, n, x); }, pmf, grid, false);
}

// As T33 with the survival ratio nondecreasing in n and the premise
// reversed, concluding X_{N:N} >=_hr Y_{N:N}.
inline TheoremReport verify_t34(const ProportionalSystem& sysX, const ProportionalSystem& sysY,
                                const SampleSizePMF& pmf, const EvaluationGrid& grid) {
    detail::require_matched_systems(sysX, sysY, PowerKind::CdfPower, pmf);
    return detail::verify_max_hr_core(
        TheoremId::T34, [&sysX](int n, double x) { return max_survival(sysX, n, x); },
        [&sysY](int n, double x) { return max_survival(sysY, n, x); },
        [&sysY](int n, double x) { return max_hazard(sysY, n, x); }, pmf, grid, true);
}

// iid specialization of T31: components are identity transforms of the two
// baselines, so F_{1:n} = 1 - Fbar^n. An extra hypothesis records the
// pointwise reduction F >= G of the corollary statement.
inline TheoremReport verify_c31_iid(const BaselineModel& baselineF, const BaselineModel& baselineG,
                                    const SampleSizePMF& pmf, const EvaluationGrid& grid) {
    validate_grid(grid);
    detail::Family cdfX = [&baselineF](int n, double x) {
        return 1.0 - std::pow(baselineF.survival(x), n);
    };
    detail::Family cdfY = [&baselineG](int n, double x) {
        return 1.0 - std::pow(baselineG.survival(x), n);
    };
    TheoremReport report = detail::verify_min_rh_core(TheoremId::C31, cdfX, cdfY, pmf, grid, true);
    NamedVerdict pointwise{"baseline_cdf_F_geq_G_pointwise", true, 0, false};
    for (double x : grid.xs) {
        if (baselineF.cdf(x) < baselineG.cdf(x) - 1e-12) ++pointwise.witness_count;
    }
    pointwise.holds = pointwise.witness_count == 0;
    report.hypothesis_results.push_back(pointwise);
    report.overall = detail::resolve_overall(report);
    return report;
}

struct InfeasibilityReport {
    std::vector<NamedVerdict> checks;
    bool has_classification = false;
    VDClass classification = VDClass::CaseII;
    bool certified = false;
};

// iid hr-preservation infeasibility: under X <=_hr Y (strict somewhere),
// (Fbar/Gbar)^n is nonincreasing in n, so the increasing-in-n hypothesis of
// the inid minimum theorem can never hold, and the induced kernel/coefficient
// pair lands in the inconclusive Case II.
inline InfeasibilityReport demonstrate_remark_31(const BaselineModel& baselineF,
                                                 const BaselineModel& baselineG, int nmax,
                                                 const EvaluationGrid& grid) {
    validate_grid(grid);
    if (nmax < 2) throw std::invalid_argument("demonstrate_remark_31: nmax must be at least 2");
    InfeasibilityReport report;

    OrderVerdict hr = check_hr(baselineF.survival, baselineG.survival, grid);
    bool strict = false;
    for (double x : grid.xs) {
        if (baselineF.survival(x) < baselineG.survival(x) - 1e-9) strict = true;
    }
    if (!hr.holds || !strict) {
        throw std::invalid_argument("demonstrate_remark_31: needs X <=_hr Y with strictness");
    }
    report.checks.push_back(detail::from_order_verdict("X_leq_hr_Y_strict", hr));

    detail::Family ratio_pow = [&baselineF, &baselineG](int n, double x) {
        double g = baselineG.survival(x);
        if (!(g > kDenomFloor)) return indeterminate();
        return std::pow(baselineF.survival(x) / g, n);
    };
    report.checks.push_back(detail::family_ratio_monotone_in_n(
        "survival_ratio_pow_nonincreasing_in_n", ratio_pow,
        [](int, double) { return 1.0; }, 1, nmax, grid, false));

    BivariateGrid kernel, f_grid;
    for (int n = 1; n <= nmax; ++n) {
        kernel.ns.push_back(n);
        f_grid.ns.push_back(n);
    }
    kernel.xs = grid.xs;
    f_grid.xs = grid.xs;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= nmax; ++n) {
        std::vector<double> krow, frow;
        for (double x : grid.xs) {
            krow.push_back(std::pow(baselineG.survival(x), n));
            double r = ratio_pow(n, x);
            frow.push_back(r);
            if (std::isfinite(r)) {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        }
        kernel.values.push_back(std::move(krow));
        f_grid.values.push_back(std::move(frow));
    }
    double lambda = 0.5 * (lo + hi);
    for (auto& row : f_grid.values) {
        for (double& v : row) v -= lambda;
    }
    VDCase vd = classify_vd_case(check_tp2(kernel), check_rr2(kernel), f_grid);
    report.has_classification = true;
    report.classification = vd.classification;
    report.checks.push_back(
        {"classified_case_ii", vd.classification == VDClass::CaseII, 0, false});

    report.certified = true;
    for (const auto& c : report.checks) report.certified = report.certified && c.holds;
    return report;
}

// iid lr equivalence: g_{1:n}/f_{1:n} = (Gbar/Fbar)^{n-1} g/f is increasing
// in n at every x iff Fbar <= Gbar pointwise, and under strict st dominance
// the lr premise X >=_lr Y of the inid minimum theorem cannot hold.
inline InfeasibilityReport demonstrate_remark_32_lr(const BaselineModel& baselineF,
                                                    const BaselineModel& baselineG, int nmax,
                                                    const EvaluationGrid& grid) {
    validate_grid(grid);
    if (nmax < 2) throw std::invalid_argument("demonstrate_remark_32_lr: nmax must be at least 2");
    InfeasibilityReport report;

    detail::Family lr_ratio = [&baselineF, &baselineG](int n, double x) {
        double f = baselineF.density(x);
        if (!(f > kDenomFloor)) return indeterminate();
        double fb = baselineF.survival(x);
        if (!(fb > kDenomFloor)) return indeterminate();
        return std::pow(baselineG.survival(x) / fb, n - 1) * baselineG.density(x) / f;
    };
    NamedVerdict inc_n = detail::family_ratio_monotone_in_n(
        "density_ratio_nondecreasing_in_n", lr_ratio, [](int, double) { return 1.0; }, 1, nmax,
        grid, true);
    OrderVerdict st = check_st(baselineF.survival, baselineG.survival, grid);
    bool st_strict = false;
    for (double x : grid.xs) {
        if (baselineF.survival(x) < baselineG.survival(x) - 1e-9) st_strict = true;
    }
    report.checks.push_back(inc_n);
    report.checks.push_back(detail::from_order_verdict("Fbar_leq_Gbar_pointwise", st));
    // ratio increasing in n  <=>  Fbar <= Gbar pointwise
    report.checks.push_back({"equivalence_forward", !inc_n.holds || st.holds, 0, false});
    report.checks.push_back({"equivalence_backward", !st.holds || inc_n.holds, 0, false});
    if (st.holds && st_strict) {
        // X >=_lr Y would force the opposite st dominance, so it must fail.
        OrderVerdict lr = check_lr(baselineG.density, baselineF.density, grid);
        report.checks.push_back({"lr_premise_X_geq_lr_Y_fails", !lr.holds,
                                 static_cast<int>(lr.witnesses.size()), lr.all_indeterminate});
    }
    // the directional verdicts are informational; the certificate covers the
    // equivalence itself and the premise contradiction
    report.certified = true;
    for (const auto& c : report.checks) {
        if (c.name.starts_with("equivalence") || c.name.starts_with("lr_premise")) {
            report.certified = report.certified && c.holds;
        }
    }
    return report;
}

}  // namespace randext
