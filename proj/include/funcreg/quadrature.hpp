#pragma once

#include <functional>
#include <vector>

namespace funcreg {

// Gauss-Legendre rule on [-1,1]. Nodes and weights are computed once per
// order by Newton iteration on the Legendre polynomial and cached.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre_rule(int order);

// Composite Gauss-Legendre over [a,b] with uniform panels. Fixed panels give
// bit-reproducible results; evaluation order is left to right.
double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           int panels, int order);

// Composite Gauss-Legendre over [0,1] with panels graded geometrically
// toward 0 (breakpoints 2^-(panels-1), ..., 1/2, 1). Integrable endpoint
// singularities like u^(gamma-1) keep full accuracy because each panel sees
// a self-similar slice; nodes never touch u = 0.
double integrate_graded_unit(const std::function<double(double)>& f, int panels, int order);

} // namespace funcreg
