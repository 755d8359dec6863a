#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "funcreg/curve.hpp"

namespace funcreg {

// Regression operator r mapping curves to reals, with its declared Lipschitz
// bound |r(a) - r(b)| <= C * d(a,b)^beta (checked by randomized testing).
//   constant:           r(z) = coefficient
//   integral_linear:    r(z) = coefficient * integral z(t) dt
//   integral_quadratic: r(z) = coefficient * integral z(t)^2 dt
struct RegressionModel {
    enum class Kind { constant, integral_linear, integral_quadratic };
    Kind kind = Kind::constant;
    double coefficient = 0.0;
    double lipschitz_constant = 1.0;
    double lipschitz_exponent = 1.0; // beta in (0,1]
};

RegressionModel make_regression_model(const std::string& kind, double coefficient);
std::string regression_kind_name(RegressionModel::Kind kind);

double eval_regression(const RegressionModel& model, const Curve& z);

// Law of the radius R = ||X - x||. Power: F(w) = w^gamma on [0,1].
// Table: CDF given by (w, F) knots, inverse-sampled by linear interpolation.
struct RadialLaw {
    enum class Kind { power, table };
    Kind kind = Kind::power;
    double gamma = 1.0;
    std::vector<double> table_w;
    std::vector<double> table_F;
};

RadialLaw make_power_radial_law(double gamma);
RadialLaw make_table_radial_law(std::vector<double> w, std::vector<double> F);
double radial_inverse_cdf(const RadialLaw& law, double v);

enum class DirectionLaw { fixed_direction, symmetric_random };

// Synthetic radial design around a center curve: X_i = x + R_i * S_i * U,
// with R_i ~ F, U unit-norm under the metric, and S_i = +/-1 only for the
// symmetric law. Chosen so the ball-mass decomposition F_x(h) = ell*phi(h)
// holds exactly (ell = 1, no remainder) when F matches the small-ball phi.
struct DesignConfig {
    Curve center;
    RadialLaw radial;
    DirectionLaw direction_law = DirectionLaw::fixed_direction;
    // Direction shape before normalization; empty means the constant curve 1.
    std::optional<Curve> direction;
    double noise_sigma = 0.0;
    bool gaussian_noise = false; // false: noiseless, no noise draws at all
    int n = 0;
    RegressionModel model;
    SemiMetricSpec metric;
};

void validate_design(const DesignConfig& cfg);

// Direction shape scaled to unit norm under the design's metric.
Curve unit_direction(const DesignConfig& cfg);

struct DataSet {
    std::vector<Curve> curves;
    std::vector<double> responses;
    std::vector<double> distances_to_center; // cached W_i = ||X_i - x||
};

// Deterministic for a fixed seed. Cached distances are recomputed through
// the semi-metric (not copied from the radius draw), so the cache invariant
// holds bit-for-bit.
DataSet generate_radial_dataset(const DesignConfig& cfg, std::uint64_t seed);

// Closed-form drift varphi(u) = E{ r(X) - r(x) | ||X - x|| = u } for the
// supported (model, design) pairs. Never a numeric average: unsupported
// combinations throw instead of silently integrating.
double drift_varphi(const RegressionModel& model, const DesignConfig& design, double u);

// True when varphi is identically zero for this design (the regime the
// moment-generating-function experiments require).
bool drift_free(const DesignConfig& design);

} // namespace funcreg
