#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace funcreg {

// Small-ball probability model: the triple (ell, phi, zeta0) describing how
// the mass of a radius-h ball around the evaluation point behaves,
// F_x(h) = ell(x) * phi(h) + o(phi(h)), with zeta0(u) = lim phi(u*h)/phi(h).
//
// fractal:          phi(h) = c * h^gamma,   zeta0(u) = u^gamma (exact).
// exponential_type: phi(h) = exp(1 - 1/h),  zeta0(u) = 1{u == 1}.
// empirical:        fractal form with exponent/constant fitted from data.
struct SmallBallModel {
    enum class Kind { fractal, exponential_type, empirical };
    Kind kind = Kind::fractal;
    double gamma = 1.0; // power-law exponent (fractal/empirical)
    double c = 1.0;     // power-law constant (fractal/empirical)
    double ell = 1.0;   // ell(x) at the default evaluation point
};

SmallBallModel make_fractal_model(double gamma, double c = 1.0, double ell = 1.0);
SmallBallModel make_exponential_type_model(double ell = 1.0);
std::string smallball_name(const SmallBallModel& m);

bool is_power_law(const SmallBallModel& m); // fractal or empirical

// phi(h) for h in (0,1]; throws std::domain_error outside.
double phi(const SmallBallModel& m, double h);

// zeta0(u) for u in [0,1]; throws std::domain_error outside.
double zeta0(const SmallBallModel& m, double u);

struct FractalFit {
    double gamma_hat = 0.0;
    double c_hat = 0.0;
    int points_used = 0;
};

// Least-squares fit of log F_hat(h) against log h over h_grid, where F_hat
// is the empirical CDF of the distances. Grid points with F_hat = 0 are
// dropped; fewer than 3 usable points is an error.
FractalFit fit_fractal_exponent(const std::vector<double>& distances,
                                const std::vector<double>& h_grid);

} // namespace funcreg
