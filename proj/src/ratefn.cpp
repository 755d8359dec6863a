#include "funcreg/ratefn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "funcreg/errors.hpp"
#include "funcreg/quadrature.hpp"

namespace funcreg {

namespace {

// Integrate over [0,1] with a doubled-panel consistency check.
double checked_integral(const std::function<double(double)>& f, const RateQuadrature& q,
                        const char* what) {
    const double coarse = integrate_graded_unit(f, q.panels, q.order);
    const double fine = integrate_graded_unit(f, 2 * q.panels, q.order);
    if (!(std::fabs(fine - coarse) <= q.abs_tol)) {
        std::ostringstream os;
        os << what << ": quadrature did not converge (panels " << q.panels << " -> "
           << 2 * q.panels << " moved the result by " << std::fabs(fine - coarse)
           << ", abs_tol " << q.abs_tol << ")";
        throw numeric_error(os.str());
    }
    return fine;
}

} // namespace

double rate_I(double t, double lambda, const KernelSpec& k, const SmallBallModel& m,
              const RateQuadrature& q) {
    if (!(lambda > 0.0)) throw config_error("rate_I: lambda must be > 0");
    const double s = t * lambda;
    const double boundary = std::expm1(-s * kernel_at_one(k));
    if (s == 0.0) return 0.0;
    if (!is_power_law(m)) return boundary; // zeta0 = 0 a.e., integral term vanishes
    const auto integrand = [&](double u) {
        return kernel_deriv(k, u) * std::exp(-s * kernel_eval(k, u)) * zeta0(m, u);
    };
    return boundary + s * checked_integral(integrand, q, "rate_I");
}

double rate_I_ibp(double s, const KernelSpec& k, const SmallBallModel& m,
                  const RateQuadrature& q) {
    if (!is_power_law(m))
        throw config_error("rate_I_ibp: only power-law (fractal/empirical) models supported");
    if (s == 0.0) return 0.0;
    const double g = m.gamma;
    const auto integrand = [&](double u) {
        return std::exp(-s * kernel_eval(k, u)) * g * std::pow(u, g - 1.0);
    };
    return checked_integral(integrand, q, "rate_I_ibp") - 1.0;
}

TailSide tail_side_from_name(const std::string& name) {
    if (name == "plus") return TailSide::plus;
    if (name == "minus") return TailSide::minus;
    if (name == "abs") return TailSide::abs;
    throw config_error("unknown tail side: " + name + " (expected plus, minus or abs)");
}

std::string tail_side_name(TailSide side) {
    switch (side) {
        case TailSide::plus: return "plus";
        case TailSide::minus: return "minus";
        case TailSide::abs: return "abs";
    }
    return "?";
}

std::string argmin_location_name(ArgminLocation loc) {
    switch (loc) {
        case ArgminLocation::interior: return "INTERIOR";
        case ArgminLocation::at_lower_bound: return "AT_LOWER_BOUND";
        case ArgminLocation::at_upper_bound: return "AT_UPPER_BOUND";
    }
    return "?";
}

TRange default_t_range(double lambda) {
    if (!(lambda > 0.0)) throw config_error("default_t_range: lambda must be > 0");
    return TRange{1e-3 / lambda, 50.0 / lambda};
}

namespace {

constexpr int kGammaGridPoints = 256;

struct GoldenResult {
    double t = 0.0;
    double value = 0.0;
};

GoldenResult golden_section_min(const std::function<double(double)>& f, double a, double b) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, std::fabs(a) + std::fabs(b));
         ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    if (fc < fd) return {c, fc};
    return {d, fd};
}

RateReport one_sided_gamma(TailSide side, double lambda, double ell_x, const KernelSpec& k,
                           const SmallBallModel& m, const TRange& r, const RateQuadrature& q) {
    const double sign = side == TailSide::minus ? -1.0 : 1.0;
    const auto f = [&](double t) { return ell_x * rate_I(sign * t, lambda, k, m, q); };

    RateReport rep;
    rep.side = side;
    rep.lambda = lambda;
    rep.ell = ell_x;
    rep.t_min = r.t_min;
    rep.t_max = r.t_max;
    rep.samples.reserve(kGammaGridPoints);

    const double ratio = r.t_max / r.t_min;
    int best = 0;
    for (int i = 0; i < kGammaGridPoints; ++i) {
        const double frac = static_cast<double>(i) / (kGammaGridPoints - 1);
        const double t = r.t_min * std::pow(ratio, frac);
        const double v = f(t);
        rep.samples.emplace_back(t, v);
        if (v < rep.samples[best].second) best = i;
    }

    const double lo = rep.samples[std::max(best - 1, 0)].first;
    const double hi = rep.samples[std::min(best + 1, kGammaGridPoints - 1)].first;
    const GoldenResult refined = golden_section_min(f, lo, hi);

    if (refined.value < rep.samples[best].second) {
        rep.value = refined.value;
        rep.argmin_t = refined.t;
    } else {
        rep.value = rep.samples[best].second;
        rep.argmin_t = rep.samples[best].first;
    }
    rep.location = best == 0                      ? ArgminLocation::at_lower_bound
                   : best == kGammaGridPoints - 1 ? ArgminLocation::at_upper_bound
                                                  : ArgminLocation::interior;
    return rep;
}

} // namespace

RateReport gamma_rate(TailSide side, double lambda, double ell_x, const KernelSpec& k,
                      const SmallBallModel& m, const TRange& t_range, const RateQuadrature& q) {
    if (!(lambda > 0.0)) throw config_error("gamma_rate: lambda must be > 0");
    if (!(ell_x > 0.0)) throw config_error("gamma_rate: ell must be > 0");
    if (!(0.0 < t_range.t_min && t_range.t_min < t_range.t_max))
        throw config_error("gamma_rate: need 0 < t_min < t_max");
    if (side == TailSide::abs) {
        RateReport plus = gamma_rate(TailSide::plus, lambda, ell_x, k, m, t_range, q);
        RateReport minus = gamma_rate(TailSide::minus, lambda, ell_x, k, m, t_range, q);
        RateReport out = plus.value >= minus.value ? std::move(plus) : std::move(minus);
        out.side = TailSide::abs;
        return out;
    }
    return one_sided_gamma(side, lambda, ell_x, k, m, t_range, q);
}

RateReport gamma_rate(TailSide side, double lambda, double ell_x, const KernelSpec& k,
                      const SmallBallModel& m, const RateQuadrature& q) {
    return gamma_rate(side, lambda, ell_x, k, m, default_t_range(lambda), q);
}

double g_uniform(double lambda, const std::vector<double>& ell_values, TailSide side,
                 const KernelSpec& k, const SmallBallModel& m, const TRange& t_range,
                 const RateQuadrature& q) {
    if (ell_values.empty()) throw config_error("g_uniform: ell_values must be nonempty");
    for (double ell : ell_values)
        if (!(ell > 0.0)) throw config_error("g_uniform: every ell must be > 0");
    // Gamma is linear in ell, so one unit-ell computation covers all centers.
    const RateReport unit = gamma_rate(side, lambda, 1.0, k, m, t_range, q);
    double sup = ell_values.front() * unit.value;
    for (double ell : ell_values) sup = std::max(sup, ell * unit.value);
    return sup;
}

} // namespace funcreg
