#pragma once

#include <optional>
#include <span>
#include <vector>

#include "funcreg/curve.hpp"
#include "funcreg/kernels.hpp"
#include "funcreg/regression.hpp"

namespace funcreg {

// Kernel-weighted mean of the responses. A zero denominator is surfaced as
// a degenerate result, never folded to 0/0 = 0: at desk scale the bandwidth
// can miss every observation and the caller has to see that.
struct EstimateResult {
    double numerator = 0.0;
    double denominator = 0.0;
    long active_count = 0; // observations with ||X_i - x|| <= h
    std::optional<double> value;

    bool degenerate() const { return !value.has_value(); }
};

// Weighted mean with precomputed distances. Summation is compensated
// (Neumaier) in index order, so results do not depend on how callers
// parallelize around this function.
EstimateResult nw_estimate_with_distances(std::span<const double> responses,
                                          std::span<const double> distances, double h,
                                          const KernelSpec& k);

// Nadaraya-Watson estimate at x: sum Y_i K(||X_i-x||/h) / sum K(||X_i-x||/h);
// weights vanish exactly outside distance h.
EstimateResult nw_estimate(const DataSet& data, const Curve& x, double h, const KernelSpec& k,
                           const SemiMetricSpec& m);

struct SupDeviationResult {
    double max_abs_error = 0.0; // over non-degenerate centers
    int degenerate_centers = 0;
};

// max_k |r_hat(z_k) - r(z_k)| over the centers; degenerate centers are
// counted separately. Throws numeric_error when every center is degenerate.
SupDeviationResult sup_deviation(const DataSet& data, const std::vector<Curve>& centers, double h,
                                 const KernelSpec& k, const SemiMetricSpec& m,
                                 const RegressionModel& model);

} // namespace funcreg
