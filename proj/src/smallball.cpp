#include "funcreg/smallball.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "funcreg/errors.hpp"

namespace funcreg {

SmallBallModel make_fractal_model(double gamma, double c, double ell) {
    if (!(gamma > 0.0)) throw config_error("fractal model requires gamma > 0");
    if (!(c > 0.0)) throw config_error("fractal model requires c > 0");
    if (!(ell > 0.0)) throw config_error("smallball model requires ell > 0");
    return SmallBallModel{SmallBallModel::Kind::fractal, gamma, c, ell};
}

SmallBallModel make_exponential_type_model(double ell) {
    if (!(ell > 0.0)) throw config_error("smallball model requires ell > 0");
    return SmallBallModel{SmallBallModel::Kind::exponential_type, 0.0, 0.0, ell};
}

std::string smallball_name(const SmallBallModel& m) {
    std::ostringstream os;
    switch (m.kind) {
        case SmallBallModel::Kind::fractal:
            os << "fractal(gamma=" << m.gamma << ",c=" << m.c << ")";
            break;
        case SmallBallModel::Kind::empirical:
            os << "empirical(gamma=" << m.gamma << ",c=" << m.c << ")";
            break;
        case SmallBallModel::Kind::exponential_type:
            os << "exponential_type";
            break;
    }
    return os.str();
}

bool is_power_law(const SmallBallModel& m) {
    return m.kind == SmallBallModel::Kind::fractal || m.kind == SmallBallModel::Kind::empirical;
}

double phi(const SmallBallModel& m, double h) {
    if (!(h > 0.0 && h <= 1.0)) throw std::domain_error("phi: h must be in (0,1]");
    if (is_power_law(m)) return m.c * std::pow(h, m.gamma);
    return std::exp(1.0 - 1.0 / h);
}

double zeta0(const SmallBallModel& m, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("zeta0: u must be in [0,1]");
    if (is_power_law(m)) return std::pow(u, m.gamma);
    return u == 1.0 ? 1.0 : 0.0;
}

FractalFit fit_fractal_exponent(const std::vector<double>& distances,
                                const std::vector<double>& h_grid) {
    if (distances.size() < 100) throw config_error("fit_fractal_exponent: need >= 100 distances");
    std::vector<double> sorted = distances;
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> xs, ys; // (log h, log F_hat(h))
    for (double h : h_grid) {
        if (!(h > 0.0)) throw config_error("fit_fractal_exponent: h grid must be positive");
        const auto count = std::upper_bound(sorted.begin(), sorted.end(), h) - sorted.begin();
        if (count == 0) continue; // empirical CDF zero at this h: drop it
        const double f = static_cast<double>(count) / static_cast<double>(sorted.size());
        xs.push_back(std::log(h));
        ys.push_back(std::log(f));
    }
    if (xs.size() < 3)
        throw numeric_error("fit_fractal_exponent: fewer than 3 usable grid points");

    const double ymin = *std::min_element(ys.begin(), ys.end());
    const double ymax = *std::max_element(ys.begin(), ys.end());
    if (ymax - ymin == 0.0)
        throw numeric_error("fit_fractal_exponent: degenerate empirical CDF (constant over grid)");

    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw numeric_error("fit_fractal_exponent: singular fit (identical h values)");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;

    FractalFit fit;
    fit.gamma_hat = slope;
    fit.c_hat = std::exp(intercept);
    fit.points_used = static_cast<int>(xs.size());
    return fit;
}

} // namespace funcreg
