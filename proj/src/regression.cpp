#include "funcreg/regression.hpp"

#include <algorithm>
#include <cmath>

#include "funcreg/errors.hpp"
#include "funcreg/rng.hpp"

namespace funcreg {

RegressionModel make_regression_model(const std::string& kind, double coefficient) {
    RegressionModel m;
    m.coefficient = coefficient;
    if (kind == "constant") {
        m.kind = RegressionModel::Kind::constant;
        m.lipschitz_constant = 1.0; // r is constant, any positive C works
    } else if (kind == "integral_linear") {
        m.kind = RegressionModel::Kind::integral_linear;
        // |coeff * integral (a-b)| <= |coeff| * ||a-b||_2 by Cauchy-Schwarz
        m.lipschitz_constant = std::max(std::fabs(coefficient), 1e-12);
    } else if (kind == "integral_quadratic") {
        m.kind = RegressionModel::Kind::integral_quadratic;
        // |coeff * integral (a^2-b^2)| <= |coeff| * ||a+b||_2 * ||a-b||_2;
        // valid for curve families with values in [-2,2]
        m.lipschitz_constant = std::max(4.0 * std::fabs(coefficient), 1e-12);
    } else {
        throw config_error("unknown regression model kind: " + kind);
    }
    m.lipschitz_exponent = 1.0;
    return m;
}

std::string regression_kind_name(RegressionModel::Kind kind) {
    switch (kind) {
        case RegressionModel::Kind::constant: return "constant";
        case RegressionModel::Kind::integral_linear: return "integral_linear";
        case RegressionModel::Kind::integral_quadratic: return "integral_quadratic";
    }
    return "?";
}

double eval_regression(const RegressionModel& model, const Curve& z) {
    switch (model.kind) {
        case RegressionModel::Kind::constant:
            return model.coefficient;
        case RegressionModel::Kind::integral_linear:
            return model.coefficient * trapezoid(z.grid, z.values);
        case RegressionModel::Kind::integral_quadratic: {
            std::vector<double> sq(z.values.size());
            for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = z.values[i] * z.values[i];
            return model.coefficient * trapezoid(z.grid, sq);
        }
    }
    throw config_error("eval_regression: unknown model kind");
}

RadialLaw make_power_radial_law(double gamma) {
    if (!(gamma > 0.0)) throw config_error("radial law requires gamma > 0");
    RadialLaw law;
    law.kind = RadialLaw::Kind::power;
    law.gamma = gamma;
    return law;
}

RadialLaw make_table_radial_law(std::vector<double> w, std::vector<double> F) {
    if (w.size() != F.size() || w.size() < 2)
        throw config_error("table radial law needs matching w/F arrays of length >= 2");
    if (w.front() != 0.0 || F.front() != 0.0 || F.back() != 1.0 || w.back() > 1.0)
        throw config_error("table radial law must start at (0,0), end at F=1, w <= 1");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!(w[i] > w[i - 1]) || !(F[i] >= F[i - 1]))
            throw config_error("table radial law must have increasing w and nondecreasing F");
    RadialLaw law;
    law.kind = RadialLaw::Kind::table;
    law.table_w = std::move(w);
    law.table_F = std::move(F);
    return law;
}

double radial_inverse_cdf(const RadialLaw& law, double v) {
    v = std::clamp(v, 0.0, 1.0);
    if (law.kind == RadialLaw::Kind::power) return std::pow(v, 1.0 / law.gamma);
    const auto& F = law.table_F;
    const auto& w = law.table_w;
    const auto it = std::lower_bound(F.begin(), F.end(), v);
    if (it == F.begin()) return w.front();
    if (it == F.end()) return w.back();
    const std::size_t j = static_cast<std::size_t>(it - F.begin());
    const double f0 = F[j - 1], f1 = F[j];
    if (f1 == f0) return w[j];
    const double t = (v - f0) / (f1 - f0);
    return w[j - 1] + t * (w[j] - w[j - 1]);
}

void validate_design(const DesignConfig& cfg) {
    validate_curve(cfg.center, "design.center");
    if (cfg.direction) {
        validate_curve(*cfg.direction, "design.direction");
        if (!same_grid(cfg.center, *cfg.direction))
            throw config_error("design.direction must share the center's grid");
        bool any = false;
        for (double v : cfg.direction->values)
            if (v != 0.0) any = true;
        if (!any) throw config_error("design.direction must be nonzero");
    }
    if (cfg.noise_sigma < 0.0) throw config_error("design.noise_sigma must be >= 0");
    if (cfg.n < 1) throw config_error("design.n must be >= 1");
    if (cfg.radial.kind == RadialLaw::Kind::power && !(cfg.radial.gamma > 0.0))
        throw config_error("design.radial gamma must be > 0");
}

Curve unit_direction(const DesignConfig& cfg) {
    Curve dir = cfg.direction ? *cfg.direction : make_constant_curve(cfg.center.grid, 1.0);
    const Curve zero = make_constant_curve(dir.grid, 0.0);
    const double norm = semi_metric_distance(dir, zero, cfg.metric);
    if (!(norm > 0.0))
        throw config_error("design.direction has zero norm under the chosen semi-metric");
    for (double& v : dir.values) v /= norm;
    return dir;
}

DataSet generate_radial_dataset(const DesignConfig& cfg, std::uint64_t seed) {
    validate_design(cfg);
    const Curve dir = unit_direction(cfg);
    const std::size_t grid_len = cfg.center.values.size();

    DataSet ds;
    ds.curves.reserve(cfg.n);
    ds.responses.resize(cfg.n);
    ds.distances_to_center.resize(cfg.n);

    Rng rng(seed);
    for (int i = 0; i < cfg.n; ++i) {
        const double radius = radial_inverse_cdf(cfg.radial, rng.u01());
        const double s = cfg.direction_law == DirectionLaw::symmetric_random ? rng.sign() : 1.0;

        Curve x;
        x.grid = cfg.center.grid;
        x.values.resize(grid_len);
        const double scale = radius * s;
        for (std::size_t j = 0; j < grid_len; ++j)
            x.values[j] = cfg.center.values[j] + scale * dir.values[j];

        double y = eval_regression(cfg.model, x);
        if (cfg.gaussian_noise) y += cfg.noise_sigma * rng.normal();

        ds.distances_to_center[i] = semi_metric_distance(x, cfg.center, cfg.metric);
        ds.curves.push_back(std::move(x));
        ds.responses[i] = y;
    }
    return ds;
}

namespace {

double integral_of(const Curve& c) { return trapezoid(c.grid, c.values); }

double integral_of_product(const Curve& a, const Curve& b) {
    std::vector<double> prod(a.values.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a.values[i] * b.values[i];
    return trapezoid(a.grid, prod);
}

} // namespace

double drift_varphi(const RegressionModel& model, const DesignConfig& design, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("drift_varphi: u must be in [0,1]");
    const bool symmetric = design.direction_law == DirectionLaw::symmetric_random;
    switch (model.kind) {
        case RegressionModel::Kind::constant:
            return 0.0;
        case RegressionModel::Kind::integral_linear: {
            if (symmetric) return 0.0; // signs cancel in expectation
            const Curve dir = unit_direction(design);
            return model.coefficient * u * integral_of(dir);
        }
        case RegressionModel::Kind::integral_quadratic: {
            // r(x + u*S*U) - r(x) = coeff * (2uS int(xU) + u^2 int(U^2))
            const Curve dir = unit_direction(design);
            std::vector<double> dsq(dir.values.size());
            for (std::size_t i = 0; i < dsq.size(); ++i) dsq[i] = dir.values[i] * dir.values[i];
            const double int_u2 = trapezoid(dir.grid, dsq);
            const double cross = symmetric ? 0.0 : 2.0 * u * integral_of_product(design.center, dir);
            return model.coefficient * (cross + u * u * int_u2);
        }
    }
    throw config_error("drift_varphi: unsupported (model, design) pair");
}

bool drift_free(const DesignConfig& design) {
    if (design.model.kind == RegressionModel::Kind::constant) return true;
    if (design.model.kind == RegressionModel::Kind::integral_linear &&
        design.direction_law == DirectionLaw::symmetric_random)
        return true;
    return false;
}

} // namespace funcreg
