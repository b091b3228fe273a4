#pragma once

// JSON run configuration and CSV curve tables for the CLI. Unknown fields
// are rejected so that typos fail loudly instead of silently defaulting.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "randext/grid.hpp"
#include "randext/power_systems.hpp"
#include "randext/presets.hpp"
#include "randext/random_extremes.hpp"

namespace randext {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int schema_version = 1;
    std::string baseline_name = "exponential";
    double rate = 1.0;       // exponential
    double shape = 1.0;      // weibull
    double scale = 1.0;      // weibull
    std::string kind = "survival_power";  // or "cdf_power"
    std::vector<double> x_exponents;
    std::vector<double> y_exponents;
    std::vector<std::pair<int, double>> pmf;  // (n, prob) atoms
    std::size_t grid_points = 999;
    std::vector<double> xs;  // optional explicit grid, overrides grid_points
};

namespace detail {

inline void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& known,
                           const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.contains(it.key())) {
            throw ConfigError("unknown field '" + it.key() + "' in " + where);
        }
    }
}

}  // namespace detail

inline RunConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    detail::reject_unknown(j, {"schema_version", "baseline", "kind", "x_exponents",
                               "y_exponents", "pmf", "grid_points", "xs"},
                           "config");
    RunConfig cfg;
    if (!j.contains("schema_version")) throw ConfigError("missing schema_version");
    cfg.schema_version = j.at("schema_version").get<int>();
    if (cfg.schema_version != 1) throw ConfigError("unsupported schema_version");
    if (j.contains("baseline")) {
        const auto& b = j.at("baseline");
        detail::reject_unknown(b, {"name", "rate", "shape", "scale"}, "baseline");
        cfg.baseline_name = b.at("name").get<std::string>();
        if (cfg.baseline_name == "exponential") {
            cfg.rate = b.value("rate", 1.0);
        } else if (cfg.baseline_name == "weibull") {
            cfg.shape = b.value("shape", 1.0);
            cfg.scale = b.value("scale", 1.0);
        } else {
            throw ConfigError("unknown baseline '" + cfg.baseline_name + "'");
        }
    }
    if (j.contains("kind")) {
        cfg.kind = j.at("kind").get<std::string>();
        if (cfg.kind != "survival_power" && cfg.kind != "cdf_power") {
            throw ConfigError("kind must be survival_power or cdf_power");
        }
    }
    if (j.contains("x_exponents")) cfg.x_exponents = j.at("x_exponents").get<std::vector<double>>();
    if (j.contains("y_exponents")) cfg.y_exponents = j.at("y_exponents").get<std::vector<double>>();
    if (j.contains("pmf")) {
        for (const auto& atom : j.at("pmf")) {
            if (!atom.is_array() || atom.size() != 2) {
                throw ConfigError("pmf atoms must be [n, prob] pairs");
            }
            cfg.pmf.emplace_back(atom[0].get<int>(), atom[1].get<double>());
        }
    }
    if (j.contains("grid_points")) cfg.grid_points = j.at("grid_points").get<std::size_t>();
    if (j.contains("xs")) cfg.xs = j.at("xs").get<std::vector<double>>();
    return cfg;
}

inline nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["schema_version"] = cfg.schema_version;
    nlohmann::json b;
    b["name"] = cfg.baseline_name;
    if (cfg.baseline_name == "exponential") {
        b["rate"] = cfg.rate;
    } else {
        b["shape"] = cfg.shape;
        b["scale"] = cfg.scale;
    }
    j["baseline"] = b;
    j["kind"] = cfg.kind;
    j["x_exponents"] = cfg.x_exponents;
    j["y_exponents"] = cfg.y_exponents;
    nlohmann::json pmf = nlohmann::json::array();
    for (const auto& [n, p] : cfg.pmf) pmf.push_back({n, p});
    j["pmf"] = pmf;
    j["grid_points"] = cfg.grid_points;
    if (!cfg.xs.empty()) j["xs"] = cfg.xs;
    return j;
}

inline RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

inline RunConfig preset_config(const std::string& name) {
    RunConfig cfg;
    cfg.x_exponents = example_x_exponents();
    cfg.y_exponents = example_y_exponents();
    cfg.pmf = {{3, 1.0 / 5.0}, {4, 2.0 / 5.0}, {5, 2.0 / 5.0}};
    if (name == "example1") {
        cfg.kind = "survival_power";
    } else if (name == "example2") {
        cfg.kind = "cdf_power";
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return cfg;
}

inline BaselineModel build_baseline(const RunConfig& cfg) {
    if (cfg.baseline_name == "exponential") return make_exponential(cfg.rate);
    return make_weibull(cfg.shape, cfg.scale);
}

inline PowerKind build_kind(const RunConfig& cfg) {
    return cfg.kind == "survival_power" ? PowerKind::SurvivalPower : PowerKind::CdfPower;
}

inline ProportionalSystem build_system_x(const RunConfig& cfg) {
    if (cfg.x_exponents.empty()) throw ConfigError("x_exponents must be nonempty");
    return ProportionalSystem(build_baseline(cfg), build_kind(cfg), cfg.x_exponents, "X");
}

inline ProportionalSystem build_system_y(const RunConfig& cfg) {
    if (cfg.y_exponents.empty()) throw ConfigError("y_exponents must be nonempty");
    return ProportionalSystem(build_baseline(cfg), build_kind(cfg), cfg.y_exponents, "Y");
}

inline SampleSizePMF build_pmf(const RunConfig& cfg) {
    if (cfg.pmf.empty()) throw ConfigError("pmf must be nonempty");
    std::vector<int> support;
    std::vector<double> probs;
    for (const auto& [n, p] : cfg.pmf) {
        support.push_back(n);
        probs.push_back(p);
    }
    try {
        return SampleSizePMF(std::move(support), std::move(probs));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

inline EvaluationGrid build_grid(const RunConfig& cfg) {
    if (!cfg.xs.empty()) return make_x_grid(cfg.xs);
    return make_y_grid(cfg.grid_points);
}

struct CurveRow {
    double y;  // NaN when the grid is x-based
    double x;
    std::string series;
    double value;
};

struct CurveTable {
    std::string title;
    std::vector<CurveRow> rows;
};

inline void append_series(CurveTable& table, const EvaluationGrid& grid, std::string series,
                          const std::vector<double>& values) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double y = grid.from_y ? grid.ys[j] : indeterminate();
        table.rows.push_back({y, grid.xs[j], series, values[j]});
    }
}

// Rows in ascending x per series, 17 significant digits.
inline void write_curve_csv(std::ostream& out, const CurveTable& table) {
    out << "# " << table.title << "\n";
    out << "y,x,series,value\n";
    char buf[128];
    for (const auto& row : table.rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%.17g", row.y, row.x, row.series.c_str(),
                      row.value);
        out << buf << "\n";
    }
}

}  // namespace randext
