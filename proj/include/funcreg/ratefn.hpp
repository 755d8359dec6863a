#pragma once

#include <string>
#include <utility>
#include <vector>

#include "funcreg/kernels.hpp"
#include "funcreg/smallball.hpp"

namespace funcreg {

// Composite Gauss-Legendre settings for the rate-function integral. Every
// evaluation is recomputed with doubled panels; disagreement beyond abs_tol
// is a numeric_error, not a silent answer.
struct RateQuadrature {
    int panels = 64;
    int order = 16;
    double abs_tol = 1e-10;
};

// I(t) = exp(-t*lambda*K(1)) - 1 + t*lambda * int_0^1 K'(u) exp(-t*lambda*K(u)) zeta0(u) du.
// Depends on (t, lambda) only through their product. For exponential-type
// models zeta0 vanishes almost everywhere and the integral term is dropped
// analytically (quadrature of a point mass would be ill-posed).
double rate_I(double t, double lambda, const KernelSpec& k, const SmallBallModel& m,
              const RateQuadrature& q = {});

// Independent route: integrating the same expression by parts (using
// zeta0(0) = 0, zeta0(1) = 1) gives -1 + int_0^1 exp(-s*K(u)) gamma u^(gamma-1) du
// with s = t*lambda. Power-law models only; panels are graded toward 0 so the
// u^(gamma-1) endpoint singularity keeps full accuracy when gamma < 1.
double rate_I_ibp(double s, const KernelSpec& k, const SmallBallModel& m,
                  const RateQuadrature& q = {});

enum class TailSide { plus, minus, abs };

TailSide tail_side_from_name(const std::string& name);
std::string tail_side_name(TailSide side);

enum class ArgminLocation { interior, at_lower_bound, at_upper_bound };

std::string argmin_location_name(ArgminLocation loc);

// Infimum diagnostics for Gamma(lambda) = inf_{t>0} ell * I(+/-t). The range
// is truncated and log-spaced; when the minimizer sits on an endpoint the
// report says so instead of fabricating an interior argmin (for the shipped
// models I is monotone and the infimum is not attained).
struct RateReport {
    TailSide side = TailSide::plus;
    double lambda = 0.0;
    double ell = 1.0;
    double value = 0.0;
    double argmin_t = 0.0;
    ArgminLocation location = ArgminLocation::interior;
    double t_min = 0.0;
    double t_max = 0.0;
    std::vector<std::pair<double, double>> samples; // (t, ell*I(+/-t)) grid diagnostics
};

struct TRange {
    double t_min = 0.0;
    double t_max = 0.0;
};

// Default truncation: t_min*lambda = 1e-3, t_max*lambda = 50.
TRange default_t_range(double lambda);

// Grid scan (256 log-spaced points) plus golden-section refinement around
// the best grid point. side = abs returns the larger of the two one-sided
// reports (max of the pair).
RateReport gamma_rate(TailSide side, double lambda, double ell_x, const KernelSpec& k,
                      const SmallBallModel& m, const TRange& t_range,
                      const RateQuadrature& q = {});
RateReport gamma_rate(TailSide side, double lambda, double ell_x, const KernelSpec& k,
                      const SmallBallModel& m, const RateQuadrature& q = {});

// g(lambda) = sup over covering centers of Gamma at that center. Gamma is
// linear in ell(x), so one unit-ell infimum is computed and scanned over the
// ell values.
double g_uniform(double lambda, const std::vector<double>& ell_values, TailSide side,
                 const KernelSpec& k, const SmallBallModel& m, const TRange& t_range,
                 const RateQuadrature& q = {});

} // namespace funcreg
