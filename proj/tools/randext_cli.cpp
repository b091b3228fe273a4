// Command-line front end: reproduce the worked examples as CSV curve
// tables, run order checks and theorem verification from a JSON config,
// expose the sign-change analysis, and cross-validate the analytic mixture
// curves against the Monte-Carlo sampler.
//
// Exit codes (frozen): 0 pass, 1 fail, 2 indeterminate or red alert,
// 3 I/O error, 4 config error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "randext/config.hpp"
#include "randext/order_checks.hpp"
#include "randext/presets.hpp"
#include "randext/random_extremes.hpp"
#include "randext/sign_analysis.hpp"
#include "randext/theorem_harness.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitIo = 3;
constexpr int kExitConfig = 4;

using namespace randext;

RunConfig resolve_config(const std::string& config_path, const std::string& preset) {
    if (!preset.empty()) return preset_config(preset);
    if (config_path.empty()) throw ConfigError("need --config PATH or --preset NAME");
    return load_config_file(config_path);
}

bool nonincreasing_in_x(const std::vector<double>& v) {
    for (std::size_t j = 1; j < v.size(); ++j) {
        if (v[j] > v[j - 1] + monotone_slack(v[j - 1])) return false;
    }
    return true;
}

bool nondecreasing_in_x(const std::vector<double>& v) {
    for (std::size_t j = 1; j < v.size(); ++j) {
        if (v[j] < v[j - 1] - monotone_slack(v[j - 1])) return false;
    }
    return true;
}

bool dominates_pointwise(const std::vector<double>& hi, const std::vector<double>& lo) {
    for (std::size_t j = 0; j < hi.size(); ++j) {
        if (hi[j] < lo[j] - monotone_slack(lo[j])) return false;
    }
    return true;
}

void write_table(const std::filesystem::path& path, const CurveTable& table) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path.string());
    write_curve_csv(out, table);
    if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

int cmd_reproduce(const std::string& example_id, const std::string& out_dir,
                  std::size_t grid_points) {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    EvaluationGrid grid = make_y_grid(grid_points);
    bool ok = true;

    if (example_id == "example1") {
        ExampleSetup ex = example1();
        CurveTable fig1{"fig1: F_{1:n}(-ln y) / G_{1:n}(-ln y) per n"};
        std::vector<std::vector<double>> per_n;
        for (int n : ex.pmf.support) {
            std::vector<double> ratio(grid.size());
            for (std::size_t j = 0; j < grid.size(); ++j) {
                ratio[j] = min_cdf(ex.sysX, n, grid.xs[j]) / min_cdf(ex.sysY, n, grid.xs[j]);
            }
            append_series(fig1, grid, "n=" + std::to_string(n), ratio);
            per_n.push_back(std::move(ratio));
        }
        write_table(dir / "fig1.csv", fig1);
        // the ratio starts at Lambda_n/M_n near the origin and tends to 1,
        // so the n-series decrease pointwise
        for (std::size_t k = 1; k < per_n.size(); ++k) {
            ok = ok && dominates_pointwise(per_n[k - 1], per_n[k]);
        }

        MixtureCurve mixX = random_min_cdf(ex.sysX, ex.pmf, grid);
        MixtureCurve mixY = random_min_cdf(ex.sysY, ex.pmf, grid);
        std::vector<double> ratio(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) ratio[j] = mixX.values[j] / mixY.values[j];
        CurveTable fig2{"fig2: F_{1:N}(-ln y) / G_{1:N}(-ln y)"};
        append_series(fig2, grid, "mixture", ratio);
        write_table(dir / "fig2.csv", fig2);
        ok = ok && nonincreasing_in_x(ratio);
    } else if (example_id == "example2") {
        ExampleSetup ex = example2();
        CurveTable fig3{"fig3: Fbar_{n:n}(-ln y) / Gbar_{n:n}(-ln y) per n"};
        CurveTable fig4{"fig4: s_{n:n}(-ln y) per n"};
        std::vector<std::vector<double>> ratios, hazards;
        for (int n : ex.pmf.support) {
            std::vector<double> ratio(grid.size()), haz(grid.size());
            for (std::size_t j = 0; j < grid.size(); ++j) {
                ratio[j] =
                    max_survival(ex.sysX, n, grid.xs[j]) / max_survival(ex.sysY, n, grid.xs[j]);
                haz[j] = max_hazard(ex.sysY, n, grid.xs[j]);
            }
            append_series(fig3, grid, "n=" + std::to_string(n), ratio);
            append_series(fig4, grid, "n=" + std::to_string(n), haz);
            ratios.push_back(std::move(ratio));
            hazards.push_back(std::move(haz));
        }
        write_table(dir / "fig3.csv", fig3);
        write_table(dir / "fig4.csv", fig4);
        // survival ratios rise in x toward Lambda_n/M_n but, like the
        // minimum-side ratios, decrease pointwise in n; hazards of the
        // Y-maxima decrease in n
        for (std::size_t k = 0; k < ratios.size(); ++k) {
            ok = ok && nondecreasing_in_x(ratios[k]);
            if (k > 0) {
                ok = ok && dominates_pointwise(ratios[k - 1], ratios[k]);
                ok = ok && dominates_pointwise(hazards[k - 1], hazards[k]);
            }
        }

        MixtureCurve mixX = random_max_survival(ex.sysX, ex.pmf, grid);
        MixtureCurve mixY = random_max_survival(ex.sysY, ex.pmf, grid);
        std::vector<double> ratio(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) ratio[j] = mixX.values[j] / mixY.values[j];
        CurveTable fig5{"fig5: Fbar_{N:N}(-ln y) / Gbar_{N:N}(-ln y)"};
        append_series(fig5, grid, "mixture", ratio);
        write_table(dir / "fig5.csv", fig5);
        ok = ok && nondecreasing_in_x(ratio);
    } else {
        throw ConfigError("example id must be example1 or example2");
    }
    std::cout << (ok ? "reproduce: all claimed monotonicities hold\n"
                     : "reproduce: monotonicity violation\n");
    return ok ? kExitPass : kExitFail;
}

void print_verdict(const OrderVerdict& verdict) {
    if (verdict.all_indeterminate) {
        std::cout << "indeterminate: all grid points excluded\n";
        return;
    }
    std::cout << (verdict.holds ? "holds" : "fails") << " (indeterminate points: "
              << verdict.indeterminate_count << ")\n";
    std::size_t shown = 0;
    for (const auto& w : verdict.witnesses) {
        std::cout << "  violation at x=" << w.x << ": " << w.lhs << " -> " << w.rhs << "\n";
        if (++shown == 10) {
            std::cout << "  ... " << verdict.witnesses.size() - shown << " more\n";
            break;
        }
    }
}

int cmd_check_order(const RunConfig& cfg, const std::string& order, const std::string& direction,
                    std::optional<int> fixed_n) {
    ProportionalSystem sysX = build_system_x(cfg);
    ProportionalSystem sysY = build_system_y(cfg);
    SampleSizePMF pmf = build_pmf(cfg);
    EvaluationGrid grid = build_grid(cfg);
    bool min_side = sysX.kind() == PowerKind::SurvivalPower;

    auto curve = [&](const ProportionalSystem& sys, auto fixed_fn, auto mixture_fn) {
        if (fixed_n) {
            int n = *fixed_n;
            return RealFn([&sys, n, fixed_fn](double x) { return fixed_fn(sys, n, x); });
        }
        MixtureCurve mix = mixture_fn(sys, pmf, grid);
        auto values = std::make_shared<std::vector<double>>(std::move(mix.values));
        auto xs = std::make_shared<std::vector<double>>(grid.xs);
        return RealFn([values, xs](double x) {
            auto it = std::lower_bound(xs->begin(), xs->end(), x);
            if (it == xs->end()) return values->back();
            return (*values)[static_cast<std::size_t>(it - xs->begin())];
        });
    };
    auto cdf_of = [&](const ProportionalSystem& sys) {
        return min_side ? curve(sys, [](const ProportionalSystem& s, int n, double x) {
                              return min_cdf(s, n, x);
                          }, random_min_cdf)
                        : curve(sys, [](const ProportionalSystem& s, int n, double x) {
                              return max_cdf(s, n, x);
                          }, random_max_cdf);
    };
    auto surv_of = [&](const ProportionalSystem& sys) {
        return min_side ? curve(sys, [](const ProportionalSystem& s, int n, double x) {
                              return min_survival(s, n, x);
                          }, random_min_survival)
                        : curve(sys, [](const ProportionalSystem& s, int n, double x) {
                              return max_survival(s, n, x);
                          }, random_max_survival);
    };
    auto dens_of = [&](const ProportionalSystem& sys) {
        int n = fixed_n.value_or(pmf.max_n());
        if (!fixed_n) {
            // density of the mixture is the pmf-weighted sum of fixed-n densities
            return RealFn([&sys, &pmf, min_side](double x) {
                double total = 0.0;
                for (std::size_t k = 0; k < pmf.support.size(); ++k) {
                    double d = min_side ? min_density(sys, pmf.support[k], x)
                                        : max_density(sys, pmf.support[k], x);
                    total += pmf.probs[k] * d;
                }
                return total;
            });
        }
        return RealFn([&sys, n, min_side](double x) {
            return min_side ? min_density(sys, n, x) : max_density(sys, n, x);
        });
    };

    bool swap = direction == "geq";  // verify X >= Y by checking Y <= X
    OrderVerdict verdict;
    if (order == "st") {
        RealFn a = surv_of(sysX), b = surv_of(sysY);
        verdict = swap ? check_st(b, a, grid) : check_st(a, b, grid);
    } else if (order == "hr") {
        RealFn a = surv_of(sysX), b = surv_of(sysY);
        verdict = swap ? check_hr(b, a, grid) : check_hr(a, b, grid);
    } else if (order == "rh") {
        RealFn a = cdf_of(sysX), b = cdf_of(sysY);
        verdict = swap ? check_rh(b, a, grid) : check_rh(a, b, grid);
    } else if (order == "lr") {
        RealFn a = dens_of(sysX), b = dens_of(sysY);
        verdict = swap ? check_lr(b, a, grid) : check_lr(a, b, grid);
    } else {
        throw ConfigError("order must be one of st, hr, rh, lr");
    }
    std::cout << "check-order " << order << (swap ? " (X >= Y): " : " (X <= Y): ");
    print_verdict(verdict);
    if (verdict.all_indeterminate) return kExitIndeterminate;
    return verdict.holds ? kExitPass : kExitFail;
}

const char* outcome_name(TheoremOutcome o) {
    switch (o) {
        case TheoremOutcome::Verified: return "Verified";
        case TheoremOutcome::HypothesisFailed: return "HypothesisFailed";
        default: return "ConclusionFailed";
    }
}

void print_report(const TheoremReport& report, std::ostream& out) {
    out << "overall: " << outcome_name(report.overall) << "\n";
    for (const auto& h : report.hypothesis_results) {
        out << "hypothesis " << h.name << ": " << (h.holds ? "holds" : "fails")
            << " (violations: " << h.witness_count << ")\n";
    }
    for (const auto& p : report.premise_results) {
        out << "premise " << p.name << ": " << (p.holds ? "holds" : "fails")
            << " (violations: " << p.witness_count << ")\n";
    }
    out << "conclusion: " << (report.conclusion_result.holds ? "holds" : "fails")
        << " (violations: " << report.conclusion_result.witnesses.size() << ")\n";
}

int cmd_verify_theorem(const RunConfig& cfg, const std::string& theorem,
                       const std::string& report_path) {
    ProportionalSystem sysX = build_system_x(cfg);
    ProportionalSystem sysY = build_system_y(cfg);
    SampleSizePMF pmf = build_pmf(cfg);
    EvaluationGrid grid = build_grid(cfg);

    TheoremReport report;
    if (theorem == "t31") {
        report = verify_t31(sysX, sysY, pmf, grid);
    } else if (theorem == "t32") {
        report = verify_t32(sysX, sysY, pmf, grid);
    } else if (theorem == "t33") {
        report = verify_t33(sysX, sysY, pmf, grid);
    } else if (theorem == "t34") {
        report = verify_t34(sysX, sysY, pmf, grid);
    } else if (theorem == "c31") {
        // iid specialization: first exponent of each side defines the marginal
        BaselineModel base = build_baseline(cfg);
        double ax = cfg.x_exponents.at(0);
        double ay = cfg.y_exponents.at(0);
        BaselineModel f = base, g = base;
        f.survival = [base, ax](double x) { return std::pow(base.survival(x), ax); };
        f.cdf = [base, ax](double x) { return 1.0 - std::pow(base.survival(x), ax); };
        g.survival = [base, ay](double x) { return std::pow(base.survival(x), ay); };
        g.cdf = [base, ay](double x) { return 1.0 - std::pow(base.survival(x), ay); };
        report = verify_c31_iid(f, g, pmf, grid);
    } else {
        throw ConfigError("theorem must be one of t31, t32, t33, t34, c31");
    }
    print_report(report, std::cout);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::ios_base::failure("cannot open " + report_path);
        print_report(report, out);
    }
    switch (report.overall) {
        case TheoremOutcome::Verified: return kExitPass;
        case TheoremOutcome::HypothesisFailed: return kExitFail;
        default: return kExitIndeterminate;  // red alert
    }
}

int cmd_sign_analysis(const RunConfig& cfg, int lambda_quantiles) {
    ProportionalSystem sysX = build_system_x(cfg);
    ProportionalSystem sysY = build_system_y(cfg);
    SampleSizePMF pmf = build_pmf(cfg);
    EvaluationGrid grid = build_grid(cfg);
    bool min_side = sysX.kind() == PowerKind::SurvivalPower;

    BivariateGrid kernel, ratio_grid;
    kernel.ns = pmf.support;
    kernel.xs = grid.xs;
    ratio_grid.ns = pmf.support;
    ratio_grid.xs = grid.xs;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = 0; k < pmf.support.size(); ++k) {
        int n = pmf.support[k];
        std::vector<double> krow(grid.size()), rrow(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) {
            double x = grid.xs[j];
            double num = min_side ? min_cdf(sysX, n, x) : max_survival(sysX, n, x);
            double den = min_side ? min_cdf(sysY, n, x) : max_survival(sysY, n, x);
            krow[j] = den * pmf.probs[k];
            rrow[j] = num / den;
            lo = std::min(lo, rrow[j]);
            hi = std::max(hi, rrow[j]);
        }
        kernel.values.push_back(std::move(krow));
        ratio_grid.values.push_back(std::move(rrow));
    }

    TotalPositivityVerdict tp2 = check_tp2(kernel);
    TotalPositivityVerdict rr2 = check_rr2(kernel);
    std::cout << "kernel: TP2 " << (tp2.holds ? "holds" : "fails") << ", RR2 "
              << (rr2.holds ? "holds" : "fails") << "\n";

    // classify once at the midrange threshold
    {
        BivariateGrid f_grid = ratio_grid;
        for (auto& row : f_grid.values) {
            for (double& v : row) v -= 0.5 * (lo + hi);
        }
        try {
            VDCase vd = classify_vd_case(tp2, rr2, f_grid);
            std::cout << "classification: " << vd_class_name(vd.classification)
                      << (is_conclusive(vd.classification) ? "" : " (no prediction)") << "\n";
        } catch (const NotClassifiableError& e) {
            std::cout << "classification: unavailable (" << e.what() << ")\n";
        }
    }

    // sweep the threshold; in conclusive cases verify against the predicted
    // direction, otherwise report the observed sign structure of w and
    // require at most one change
    bool all_conform = true;
    for (int q = 0; q < lambda_quantiles; ++q) {
        double lambda = lo + (hi - lo) * (q + 0.5) / lambda_quantiles;
        BivariateGrid f_grid = ratio_grid;
        for (auto& row : f_grid.values) {
            for (double& v : row) v -= lambda;
        }
        try {
            VDOutcome outcome = verify_variation_diminishing(kernel, f_grid);
            std::cout << "lambda=" << lambda << ": w changes sign "
                      << outcome.w_report.change_count << " time(s), "
                      << (outcome.conforms ? "conforms" : "DOES NOT conform") << "\n";
            all_conform = all_conform && outcome.conforms;
        } catch (const InconclusiveCaseError&) {
            std::vector<double> w(grid.size(), 0.0);
            for (std::size_t i = 0; i < kernel.ns.size(); ++i) {
                for (std::size_t j = 0; j < grid.size(); ++j) {
                    w[j] += f_grid.values[i][j] * kernel.values[i][j];
                }
            }
            SignChangeReport rep = count_sign_changes(w, 1e-12);
            std::cout << "lambda=" << lambda << ": no prediction; observed " << rep.change_count
                      << " sign change(s)"
                      << (rep.change_count == 1
                              ? (rep.direction == SignDirection::PosToNeg ? ", pos-to-neg"
                                                                          : ", neg-to-pos")
                              : "")
                      << "\n";
            all_conform = all_conform && rep.change_count <= 1;
        }
    }
    return all_conform ? kExitPass : kExitFail;
}

int cmd_mc_validate(const RunConfig& cfg, std::size_t samples, std::uint64_t seed,
                    const std::string& mode, bool negative_control) {
    if (samples < 10000) throw ConfigError("mc-validate needs at least 10^4 samples");
    ProportionalSystem sysX = build_system_x(cfg);
    SampleSizePMF pmf = build_pmf(cfg);
    EvaluationGrid grid = build_grid(cfg);
    ExtremeMode m = mode == "max" ? ExtremeMode::Max : ExtremeMode::Min;
    MixtureCurve analytic = m == ExtremeMode::Min ? random_min_cdf(sysX, pmf, grid)
                                                  : random_max_cdf(sysX, pmf, grid);
    if (negative_control) {
        for (double& v : analytic.values) v = std::min(1.0, v + 0.05);
    }
    std::vector<double> sample = mc_sample_extreme(sysX, pmf, m, samples, seed);
    double dist = kolmogorov_distance(std::move(sample), analytic);
    double threshold = 3.0 / std::sqrt(static_cast<double>(samples)) + 0.001;
    std::cout << "mc-validate " << mode << ": sup-distance " << dist << " (threshold "
              << threshold << ")\n";
    return dist < threshold ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-extremes ordering toolkit"};
    app.require_subcommand(1);

    std::string config_path, preset, out_dir = ".", example_id, order = "rh",
                direction = "leq", theorem = "t31", report_path, mode = "min";
    std::size_t grid_points = 999, samples = 1000000;
    std::uint64_t seed = 42;
    int fixed_n = -1;
    int lambda_quantiles = 21;
    bool negative_control = false;

    auto* rep = app.add_subcommand("reproduce", "emit figure CSVs for a worked example");
    rep->add_option("example", example_id, "example1 or example2")->required();
    rep->add_option("--out", out_dir, "output directory");
    rep->add_option("--grid-points", grid_points, "y-grid size");

    auto add_cfg = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config path");
        sub->add_option("--preset", preset, "example1 or example2");
        sub->add_option("--grid-points", grid_points, "y-grid size override");
    };

    auto* chk = app.add_subcommand("check-order", "run a stochastic order check");
    add_cfg(chk);
    chk->add_option("--order", order, "st, hr, rh or lr");
    chk->add_option("--direction", direction, "leq (X<=Y) or geq (X>=Y)");
    chk->add_option("--n", fixed_n, "fixed sample size; omit for random-N mixture");

    auto* ver = app.add_subcommand("verify-theorem", "verify a preservation theorem");
    add_cfg(ver);
    ver->add_option("--theorem", theorem, "t31, t32, t33, t34 or c31");
    ver->add_option("--report", report_path, "also write the report to this file");

    auto* sgn = app.add_subcommand("sign-analysis", "kernel TP2/RR2 and sign-change conformance");
    add_cfg(sgn);
    sgn->add_option("--lambda-quantiles", lambda_quantiles, "threshold sweep size");

    auto* mcv = app.add_subcommand("mc-validate", "Monte-Carlo vs analytic mixture curve");
    add_cfg(mcv);
    mcv->add_option("--samples", samples, "replicate count (>= 10^4)");
    mcv->add_option("--seed", seed, "RNG seed");
    mcv->add_option("--mode", mode, "min or max");
    mcv->add_flag("--negative-control", negative_control, "corrupt the analytic curve");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rep->parsed()) return cmd_reproduce(example_id, out_dir, grid_points);
        RunConfig cfg = resolve_config(config_path, preset);
        if (grid_points != 999) cfg.grid_points = grid_points;
        if (chk->parsed()) {
            std::optional<int> n = fixed_n > 0 ? std::optional<int>(fixed_n) : std::nullopt;
            return cmd_check_order(cfg, order, direction, n);
        }
        if (ver->parsed()) return cmd_verify_theorem(cfg, theorem, report_path);
        if (sgn->parsed()) return cmd_sign_analysis(cfg, lambda_quantiles);
        if (mcv->parsed()) return cmd_mc_validate(cfg, samples, seed, mode, negative_control);
    } catch (const randext::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}
