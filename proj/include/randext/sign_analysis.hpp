#pragma once

// Total-positivity (TP2/RR2) grid checkers and the variation-diminishing
// sign machinery: classify a (kernel, coefficient) pair into one of the four
// conclusive hypothesis combinations or the four inconclusive cases, and
// verify the predicted sign behavior of w(x) = sum_n f_n(x) K_n(x).

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "randext/baseline.hpp"

namespace randext {

struct BivariateGrid {
    std::vector<int> ns;                      // ascending positive integers
    std::vector<double> xs;                   // ascending reals
    std::vector<std::vector<double>> values;  // values[i][j] = K_{ns[i]}(xs[j])

    void validate() const {
        if (ns.empty() || xs.empty() || values.size() != ns.size()) {
            throw std::invalid_argument("BivariateGrid: shape mismatch");
        }
        for (std::size_t i = 1; i < ns.size(); ++i) {
            if (ns[i] <= ns[i - 1]) throw std::invalid_argument("BivariateGrid: ns must ascend");
        }
        for (std::size_t j = 1; j < xs.size(); ++j) {
            if (!(xs[j] > xs[j - 1])) throw std::invalid_argument("BivariateGrid: xs must ascend");
        }
        for (const auto& row : values) {
            if (row.size() != xs.size()) {
                throw std::invalid_argument("BivariateGrid: row length mismatch");
            }
        }
    }
};

enum class SignDirection { None, NegToPos, PosToNeg, Multiple };

struct SignChangeReport {
    std::vector<int> signs;  // per input point, in {-1, 0, +1}
    int change_count = 0;
    SignDirection direction = SignDirection::None;
};

inline SignChangeReport count_sign_changes(std::span<const double> values, double zero_band = 1e-12) {
    if (values.empty()) throw std::invalid_argument("count_sign_changes: empty sequence");
    SignChangeReport report;
    report.signs.reserve(values.size());
    int prev = 0;
    int first = 0;
    int last = 0;
    for (double v : values) {
        int s = std::abs(v) <= zero_band ? 0 : (v > 0.0 ? 1 : -1);
        report.signs.push_back(s);
        if (s == 0) continue;  // zeros are skipped, not flips
        if (prev != 0 && s != prev) ++report.change_count;
        if (first == 0) first = s;
        last = s;
        prev = s;
    }
    if (report.change_count > 1) {
        report.direction = SignDirection::Multiple;
    } else if (report.change_count == 1) {
        report.direction = first < 0 ? SignDirection::NegToPos : SignDirection::PosToNeg;
    }
    (void)last;
    return report;
}

struct MinorWitness {
    int n1, n2;
    double x1, x2;
    double minor;  // K(n1,x1)K(n2,x2) - K(n2,x1)K(n1,x2)
};

struct TotalPositivityVerdict {
    bool holds = false;
    std::vector<MinorWitness> witnesses;
    int excluded = 0;  // adjacent quadruples skipped due to nonpositive entries
};

namespace detail {

inline TotalPositivityVerdict check_minors(const BivariateGrid& grid, bool tp2) {
    grid.validate();
    TotalPositivityVerdict verdict;
    for (std::size_t i = 0; i + 1 < grid.ns.size(); ++i) {
        for (std::size_t j = 0; j + 1 < grid.xs.size(); ++j) {
            double a = grid.values[i][j];
            double b = grid.values[i][j + 1];
            double c = grid.values[i + 1][j];
            double d = grid.values[i + 1][j + 1];
            if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !(d > 0.0)) {
                ++verdict.excluded;
                continue;
            }
            double minor = a * d - c * b;
            bool ok = tp2 ? minor >= -1e-12 : minor <= 1e-12;
            if (!ok) {
                verdict.witnesses.push_back(
                    {grid.ns[i], grid.ns[i + 1], grid.xs[j], grid.xs[j + 1], minor});
            }
        }
    }
    verdict.holds = verdict.witnesses.empty();
    return verdict;
}

}  // namespace detail

// Adjacent 2x2 minors nonnegative; for strictly positive grids this implies
// all 2x2 minors.
inline TotalPositivityVerdict check_tp2(const BivariateGrid& grid) {
    return detail::check_minors(grid, true);
}

inline TotalPositivityVerdict check_rr2(const BivariateGrid& grid) {
    return detail::check_minors(grid, false);
}

enum class KernelKind { TP2, RR2 };
enum class XMonotone { IncreasingInX, DecreasingInX };
enum class NTraverse { NegToPosInN, PosToNegInN };
enum class VDClass { Prop21, Prop22, Prop23, Prop24, CaseI, CaseII, CaseIII, CaseIV };

struct VDCase {
    KernelKind kernel_kind;
    XMonotone f_monotone;
    NTraverse f_sign_traverse;
    VDClass classification;
};

struct NotClassifiableError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InconclusiveCaseError : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool is_conclusive(VDClass c) {
    return c == VDClass::Prop21 || c == VDClass::Prop22 || c == VDClass::Prop23 ||
           c == VDClass::Prop24;
}

inline const char* vd_class_name(VDClass c) {
    switch (c) {
        case VDClass::Prop21: return "Proposition 2.1";
        case VDClass::Prop22: return "Proposition 2.2";
        case VDClass::Prop23: return "Proposition 2.3";
        case VDClass::Prop24: return "Proposition 2.4";
        case VDClass::CaseI: return "Case I";
        case VDClass::CaseII: return "Case II";
        case VDClass::CaseIII: return "Case III";
        default: return "Case IV";
    }
}

// Predicted direction of the single sign change of w(x), defined for the
// conclusive classifications only.
inline SignDirection predicted_w_direction(VDClass c) {
    switch (c) {
        case VDClass::Prop21:
        case VDClass::Prop23:
            return SignDirection::PosToNeg;
        case VDClass::Prop22:
        case VDClass::Prop24:
            return SignDirection::NegToPos;
        default:
            throw InconclusiveCaseError("no sign prediction for inconclusive cases");
    }
}

namespace detail {

struct HypothesisCoords {
    bool kernel_tp2, kernel_rr2;
    bool f_can_increase, f_can_decrease;  // in x, unanimous across n
    bool trav_neg_to_pos, trav_pos_to_neg;  // in n; vacuous when no change observed
};

inline HypothesisCoords hypothesis_coords(const TotalPositivityVerdict& tp2,
                                          const TotalPositivityVerdict& rr2,
                                          const BivariateGrid& f_grid, double zero_band) {
    f_grid.validate();
    HypothesisCoords hc{tp2.holds, rr2.holds, true, true, true, true};
    if (!hc.kernel_tp2 && !hc.kernel_rr2) {
        throw NotClassifiableError("kernel is neither TP2 nor RR2 on the grid");
    }
    for (const auto& row : f_grid.values) {
        for (std::size_t j = 1; j < row.size(); ++j) {
            double slack = std::max(1e-9, 1e-9 * std::abs(row[j - 1]));
            if (row[j] < row[j - 1] - slack) hc.f_can_increase = false;
            if (row[j] > row[j - 1] + slack) hc.f_can_decrease = false;
        }
    }
    if (!hc.f_can_increase && !hc.f_can_decrease) {
        throw NotClassifiableError("f_n(x) is not monotone in x");
    }
    bool saw_np = false, saw_pn = false;
    std::vector<double> column(f_grid.ns.size());
    for (std::size_t j = 0; j < f_grid.xs.size(); ++j) {
        for (std::size_t i = 0; i < f_grid.ns.size(); ++i) column[i] = f_grid.values[i][j];
        SignChangeReport rep = count_sign_changes(column, zero_band);
        if (rep.change_count > 1) {
            throw NotClassifiableError("f_n(x) changes sign more than once in n");
        }
        if (rep.direction == SignDirection::NegToPos) saw_np = true;
        if (rep.direction == SignDirection::PosToNeg) saw_pn = true;
    }
    if (saw_np && saw_pn) {
        throw NotClassifiableError("mixed sign-traverse directions across x");
    }
    if (saw_np) hc.trav_pos_to_neg = false;
    if (saw_pn) hc.trav_neg_to_pos = false;
    return hc;
}

struct ClassRow {
    VDClass cls;
    KernelKind kernel;
    XMonotone mono;
    NTraverse trav;
};

// Conclusive rows first: unchanged-sign / constant-in-x inputs satisfy
// several hypothesis sets vacuously and resolve to a proposition.
inline constexpr ClassRow kClassTable[] = {
    {VDClass::Prop21, KernelKind::RR2, XMonotone::DecreasingInX, NTraverse::NegToPosInN},
    {VDClass::Prop22, KernelKind::RR2, XMonotone::IncreasingInX, NTraverse::PosToNegInN},
    {VDClass::Prop23, KernelKind::TP2, XMonotone::DecreasingInX, NTraverse::PosToNegInN},
    {VDClass::Prop24, KernelKind::TP2, XMonotone::IncreasingInX, NTraverse::NegToPosInN},
    {VDClass::CaseI, KernelKind::RR2, XMonotone::IncreasingInX, NTraverse::NegToPosInN},
    {VDClass::CaseII, KernelKind::RR2, XMonotone::DecreasingInX, NTraverse::PosToNegInN},
    {VDClass::CaseIII, KernelKind::TP2, XMonotone::DecreasingInX, NTraverse::NegToPosInN},
    {VDClass::CaseIV, KernelKind::TP2, XMonotone::IncreasingInX, NTraverse::PosToNegInN},
};

}  // namespace detail

inline VDCase classify_vd_case(const TotalPositivityVerdict& tp2_verdict,
                               const TotalPositivityVerdict& rr2_verdict,
                               const BivariateGrid& f_grid, double zero_band = 1e-12) {
    auto hc = detail::hypothesis_coords(tp2_verdict, rr2_verdict, f_grid, zero_band);
    for (const auto& row : detail::kClassTable) {
        bool kernel_ok = row.kernel == KernelKind::TP2 ? hc.kernel_tp2 : hc.kernel_rr2;
        bool mono_ok = row.mono == XMonotone::IncreasingInX ? hc.f_can_increase : hc.f_can_decrease;
        bool trav_ok = row.trav == NTraverse::NegToPosInN ? hc.trav_neg_to_pos : hc.trav_pos_to_neg;
        if (kernel_ok && mono_ok && trav_ok) {
            return VDCase{row.kernel, row.mono, row.trav, row.cls};
        }
    }
    throw NotClassifiableError("hypothesis coordinates match no proposition or case");
}

struct VDOutcome {
    VDCase vd_case;
    SignChangeReport w_report;
    std::vector<double> w;  // per f_grid x
    bool conforms = false;
};

// Computes w(x) = sum_n f_n(x) K_n(x) [p(n)] and checks that it has at most
// one sign change, in the direction the classification predicts. Refuses
// inconclusive cases, where no prediction exists.
inline VDOutcome verify_variation_diminishing(const BivariateGrid& kernel,
                                              const BivariateGrid& f_grid,
                                              const std::vector<double>* pmf_weights = nullptr,
                                              double zero_band = 1e-12) {
    kernel.validate();
    f_grid.validate();
    if (kernel.ns != f_grid.ns || kernel.xs.size() != f_grid.xs.size()) {
        throw std::invalid_argument("verify_variation_diminishing: kernel/f grid mismatch");
    }
    if (pmf_weights && pmf_weights->size() != kernel.ns.size()) {
        throw std::invalid_argument("verify_variation_diminishing: weight count mismatch");
    }
    VDOutcome outcome;
    outcome.vd_case = classify_vd_case(check_tp2(kernel), check_rr2(kernel), f_grid, zero_band);
    if (!is_conclusive(outcome.vd_case.classification)) {
        throw InconclusiveCaseError("inconclusive case: variation-diminishing prediction unavailable");
    }
    outcome.w.assign(kernel.xs.size(), 0.0);
    for (std::size_t i = 0; i < kernel.ns.size(); ++i) {
        double weight = pmf_weights ? (*pmf_weights)[i] : 1.0;
        for (std::size_t j = 0; j < kernel.xs.size(); ++j) {
            outcome.w[j] += f_grid.values[i][j] * kernel.values[i][j] * weight;
        }
    }
    outcome.w_report = count_sign_changes(outcome.w, zero_band);
    SignDirection predicted = predicted_w_direction(outcome.vd_case.classification);
    outcome.conforms = outcome.w_report.change_count == 0 ||
                       (outcome.w_report.change_count == 1 &&
                        outcome.w_report.direction == predicted);
    return outcome;
}

}  // namespace randext
