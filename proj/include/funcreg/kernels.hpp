#pragma once

#include <functional>
#include <string>
#include <vector>

namespace funcreg {

// Kernels on [0,1] for the functional regression weights. All shipped kinds
// are positive on [0,1], strictly decreasing on (0,1), and keep K(1) > 0;
// the rate function has an exp{-t*lambda*K(1)} factor that degenerates when
// K(1) = 0, which is why Epanechnikov-style kernels are rejected here.
struct KernelSpec {
    enum class Kind { linear_decay, exp_decay, affine };
    Kind kind = Kind::linear_decay;
    // affine: K(u) = a - b*u with a > b > 0. Unused otherwise.
    double a = 0.0;
    double b = 0.0;
};

KernelSpec make_kernel(const std::string& name);
KernelSpec make_affine_kernel(double a, double b);
std::string kernel_name(const KernelSpec& k);

// K(u) on [0,1]; exactly 0 outside the support.
double kernel_eval(const KernelSpec& k, double u);

// Analytic K'(u); domain is [0,1) only. Throws std::domain_error outside.
double kernel_deriv(const KernelSpec& k, double u);

double kernel_at_one(const KernelSpec& k);

struct ValidationClause {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::string kernel;
    std::vector<ValidationClause> clauses;
    double lipschitz_estimate = 0.0; // max |K'| over the probe grid
    bool all_pass() const;
};

// Checks positivity on [0,1], K(1) > 0, K' < 0 on the open interval, and
// estimates the Lipschitz constant. Failures are report entries, not errors.
// The generic overload lets candidate kernels be probed without a spec.
ValidationReport validate_kernel(const KernelSpec& k, int probe_grid_size);
ValidationReport validate_kernel(const std::function<double(double)>& eval,
                                 const std::function<double(double)>& deriv,
                                 const std::string& name, int probe_grid_size);

} // namespace funcreg
