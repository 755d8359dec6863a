#include "funcreg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "funcreg/errors.hpp"

namespace funcreg {

namespace {

GaussLegendreRule compute_rule(int order) {
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n(x) = 0.
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre_rule(int order) {
    if (order < 1 || order > 256) throw config_error("gauss_legendre_rule: order must be in [1,256]");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

namespace {

double panel_sum(const std::function<double(double)>& f, double lo, double hi,
                 const GaussLegendreRule& rule) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

} // namespace

double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           int panels, int order) {
    if (panels < 1) throw config_error("integrate_composite: panels must be >= 1");
    const auto& rule = gauss_legendre_rule(order);
    const double width = (b - a) / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p)
        acc += panel_sum(f, a + p * width, a + (p + 1) * width, rule);
    return acc;
}

double integrate_graded_unit(const std::function<double(double)>& f, int panels, int order) {
    if (panels < 1) throw config_error("integrate_graded_unit: panels must be >= 1");
    const auto& rule = gauss_legendre_rule(order);
    if (panels == 1) return panel_sum(f, 0.0, 1.0, rule);
    double acc = 0.0;
    double hi = 1.0;
    for (int p = 0; p < panels - 1; ++p) {
        const double lo = hi * 0.5;
        acc += panel_sum(f, lo, hi, rule);
        hi = lo;
    }
    acc += panel_sum(f, 0.0, hi, rule);
    return acc;
}

} // namespace funcreg
