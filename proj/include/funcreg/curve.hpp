#pragma once

#include <memory>
#include <string>
#include <vector>

namespace funcreg {

// Sample grid on [0,1], shared by every curve of a dataset.
using Grid = std::shared_ptr<const std::vector<double>>;

Grid make_uniform_grid(std::size_t points);

// A real-valued function sampled on a fixed grid of [0,1].
struct Curve {
    Grid grid;
    std::vector<double> values;
};

// Enforces: grid size >= 2, grid[0] = 0, grid[last] = 1, strictly
// increasing, values same length and finite. Throws config_error.
void validate_curve(const Curve& c, const std::string& context = "curve");

bool same_grid(const Curve& a, const Curve& b);

Curve make_constant_curve(const Grid& g, double value);

// Trapezoid quadrature of the sampled values over the curve's grid.
double trapezoid(const Grid& g, const std::vector<double>& values);

struct SemiMetricSpec {
    enum class Kind { l2, sup, l2_derivative };
    Kind kind = Kind::l2;
};

SemiMetricSpec::Kind semi_metric_kind_from_name(const std::string& name);
std::string semi_metric_name(SemiMetricSpec::Kind kind);

// d(a,b) under the given semi-metric; a and b must share their grid.
// l2 integrates (a-b)^2 by trapezoid and takes the square root;
// l2_derivative does the same on finite-difference derivatives.
double semi_metric_distance(const Curve& a, const Curve& b, const SemiMetricSpec& m);

} // namespace funcreg
