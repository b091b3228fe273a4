#pragma once

// Evaluation grids: strictly increasing abscissae, optionally built from a
// y-grid in (0,1) through the substitution x = -ln y.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace randext {

struct EvaluationGrid {
    std::vector<double> xs;  // strictly increasing
    std::vector<double> ys;  // strictly decreasing, empty unless from_y
    bool from_y = false;

    std::size_t size() const { return xs.size(); }
};

inline void validate_grid(const EvaluationGrid& grid) {
    if (grid.xs.size() < 16) {
        throw std::invalid_argument("EvaluationGrid: needs at least 16 points");
    }
    for (std::size_t i = 1; i < grid.xs.size(); ++i) {
        if (!(grid.xs[i] > grid.xs[i - 1])) {
            throw std::invalid_argument("EvaluationGrid: xs must be strictly increasing");
        }
    }
    if (grid.from_y) {
        if (grid.ys.size() != grid.xs.size()) {
            throw std::invalid_argument("EvaluationGrid: ys/xs size mismatch");
        }
        for (double y : grid.ys) {
            if (!(y > 0.0 && y < 1.0)) {
                throw std::invalid_argument("EvaluationGrid: ys must be interior to (0,1)");
            }
        }
    }
}

// count equally spaced y-values {k/(count+1)} descending, so xs = -ln y ascend.
// count=999 gives y in {0.999, 0.998, ..., 0.001}.
inline EvaluationGrid make_y_grid(std::size_t count = 999) {
    if (count < 16) {
        throw std::invalid_argument("make_y_grid: needs at least 16 points");
    }
    EvaluationGrid grid;
    grid.from_y = true;
    grid.ys.reserve(count);
    grid.xs.reserve(count);
    for (std::size_t k = count; k >= 1; --k) {
        double y = static_cast<double>(k) / static_cast<double>(count + 1);
        grid.ys.push_back(y);
        grid.xs.push_back(-std::log(y));
    }
    validate_grid(grid);
    return grid;
}

inline EvaluationGrid make_x_grid(std::vector<double> xs) {
    EvaluationGrid grid;
    grid.xs = std::move(xs);
    validate_grid(grid);
    return grid;
}

inline EvaluationGrid make_linear_grid(double lo, double hi, std::size_t count) {
    if (!(hi > lo) || count < 16) {
        throw std::invalid_argument("make_linear_grid: bad range or count");
    }
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return make_x_grid(std::move(xs));
}

}  // namespace randext
