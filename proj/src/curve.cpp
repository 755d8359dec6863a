#include "funcreg/curve.hpp"

#include <algorithm>
#include <cmath>

#include "funcreg/errors.hpp"

namespace funcreg {

Grid make_uniform_grid(std::size_t points) {
    if (points < 2) throw config_error("grid needs at least 2 points");
    auto g = std::make_shared<std::vector<double>>(points);
    const double step = 1.0 / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) (*g)[i] = static_cast<double>(i) * step;
    g->front() = 0.0;
    g->back() = 1.0;
    return g;
}

void validate_curve(const Curve& c, const std::string& context) {
    if (!c.grid) throw config_error(context + ": missing grid");
    const auto& g = *c.grid;
    if (g.size() < 2) throw config_error(context + ": grid length must be >= 2");
    if (g.front() != 0.0 || g.back() != 1.0)
        throw config_error(context + ": grid must span [0,1] exactly");
    for (std::size_t i = 1; i < g.size(); ++i)
        if (!(g[i] > g[i - 1])) throw config_error(context + ": grid must be strictly increasing");
    if (c.values.size() != g.size())
        throw config_error(context + ": values length must match grid length");
    for (double v : c.values)
        if (!std::isfinite(v)) throw config_error(context + ": values must be finite");
}

bool same_grid(const Curve& a, const Curve& b) {
    if (a.grid == b.grid) return true;
    if (!a.grid || !b.grid) return false;
    return *a.grid == *b.grid;
}

Curve make_constant_curve(const Grid& g, double value) {
    return Curve{g, std::vector<double>(g->size(), value)};
}

double trapezoid(const Grid& g, const std::vector<double>& values) {
    const auto& x = *g;
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (x[i] - x[i - 1]) * (values[i] + values[i - 1]);
    return acc;
}

SemiMetricSpec::Kind semi_metric_kind_from_name(const std::string& name) {
    if (name == "l2") return SemiMetricSpec::Kind::l2;
    if (name == "sup") return SemiMetricSpec::Kind::sup;
    if (name == "l2_derivative") return SemiMetricSpec::Kind::l2_derivative;
    throw config_error("unknown semi-metric: " + name);
}

std::string semi_metric_name(SemiMetricSpec::Kind kind) {
    switch (kind) {
        case SemiMetricSpec::Kind::l2: return "l2";
        case SemiMetricSpec::Kind::sup: return "sup";
        case SemiMetricSpec::Kind::l2_derivative: return "l2_derivative";
    }
    return "?";
}

namespace {

// Finite-difference derivative on the grid: central in the interior,
// one-sided at the ends.
std::vector<double> grid_derivative(const Curve& c) {
    const auto& x = *c.grid;
    const auto& v = c.values;
    const std::size_t n = x.size();
    std::vector<double> d(n);
    d[0] = (v[1] - v[0]) / (x[1] - x[0]);
    d[n - 1] = (v[n - 1] - v[n - 2]) / (x[n - 1] - x[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (x[i + 1] - x[i - 1]);
    return d;
}

double l2_of_difference(const Grid& g, const std::vector<double>& a, const std::vector<double>& b) {
    const auto& x = *g;
    std::vector<double> sq(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = a[i] - b[i];
        sq[i] = d * d;
    }
    return std::sqrt(trapezoid(g, sq));
}

} // namespace

double semi_metric_distance(const Curve& a, const Curve& b, const SemiMetricSpec& m) {
    if (!same_grid(a, b)) throw config_error("semi_metric_distance: curves on mismatched grids");
    switch (m.kind) {
        case SemiMetricSpec::Kind::l2:
            return l2_of_difference(a.grid, a.values, b.values);
        case SemiMetricSpec::Kind::sup: {
            double mx = 0.0;
            for (std::size_t i = 0; i < a.values.size(); ++i)
                mx = std::max(mx, std::fabs(a.values[i] - b.values[i]));
            return mx;
        }
        case SemiMetricSpec::Kind::l2_derivative:
            return l2_of_difference(a.grid, grid_derivative(a), grid_derivative(b));
    }
    throw config_error("semi_metric_distance: unknown kind");
}

} // namespace funcreg
