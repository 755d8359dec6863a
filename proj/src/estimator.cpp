#include "funcreg/estimator.hpp"

#include <cmath>

#include "funcreg/errors.hpp"

namespace funcreg {

namespace {

// Neumaier compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double total() const { return sum + comp; }
};

} // namespace

EstimateResult nw_estimate_with_distances(std::span<const double> responses,
                                          std::span<const double> distances, double h,
                                          const KernelSpec& k) {
    if (!(h > 0.0)) throw config_error("nw_estimate: bandwidth must be > 0");
    if (responses.empty() || responses.size() != distances.size())
        throw config_error("nw_estimate: responses/distances size mismatch or empty");

    Accumulator num, den;
    long active = 0;
    for (std::size_t i = 0; i < responses.size(); ++i) {
        const double u = distances[i] / h;
        if (u > 1.0) continue; // weight is exactly 0 outside the support
        const double w = kernel_eval(k, u);
        num.add(responses[i] * w);
        den.add(w);
        ++active;
    }

    EstimateResult r;
    r.numerator = num.total();
    r.denominator = den.total();
    r.active_count = active;
    if (r.denominator > 0.0) r.value = r.numerator / r.denominator;
    return r;
}

EstimateResult nw_estimate(const DataSet& data, const Curve& x, double h, const KernelSpec& k,
                           const SemiMetricSpec& m) {
    if (data.curves.empty()) throw config_error("nw_estimate: empty dataset");
    std::vector<double> dist(data.curves.size());
    for (std::size_t i = 0; i < data.curves.size(); ++i)
        dist[i] = semi_metric_distance(data.curves[i], x, m);
    return nw_estimate_with_distances(data.responses, dist, h, k);
}

SupDeviationResult sup_deviation(const DataSet& data, const std::vector<Curve>& centers, double h,
                                 const KernelSpec& k, const SemiMetricSpec& m,
                                 const RegressionModel& model) {
    if (centers.empty()) throw config_error("sup_deviation: centers must be nonempty");
    SupDeviationResult out;
    bool any = false;
    for (const Curve& z : centers) {
        const EstimateResult est = nw_estimate(data, z, h, k, m);
        if (est.degenerate()) {
            ++out.degenerate_centers;
            continue;
        }
        const double err = std::fabs(*est.value - eval_regression(model, z));
        if (!any || err > out.max_abs_error) out.max_abs_error = err;
        any = true;
    }
    if (!any) throw numeric_error("sup_deviation: every center is degenerate");
    return out;
}

} // namespace funcreg
