#include "funcreg/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "funcreg/errors.hpp"

namespace funcreg {

KernelSpec make_kernel(const std::string& name) {
    if (name == "linear_decay") return KernelSpec{KernelSpec::Kind::linear_decay, 0.0, 0.0};
    if (name == "exp_decay") return KernelSpec{KernelSpec::Kind::exp_decay, 0.0, 0.0};
    throw config_error("unknown kernel: " + name + " (expected linear_decay or exp_decay)");
}

KernelSpec make_affine_kernel(double a, double b) {
    if (!(a > b && b > 0.0))
        throw config_error("affine kernel requires a > b > 0");
    return KernelSpec{KernelSpec::Kind::affine, a, b};
}

std::string kernel_name(const KernelSpec& k) {
    switch (k.kind) {
        case KernelSpec::Kind::linear_decay: return "linear_decay";
        case KernelSpec::Kind::exp_decay: return "exp_decay";
        case KernelSpec::Kind::affine: {
            std::ostringstream os;
            os << "affine(a=" << k.a << ",b=" << k.b << ")";
            return os.str();
        }
    }
    return "?";
}

double kernel_eval(const KernelSpec& k, double u) {
    if (u < 0.0 || u > 1.0) return 0.0;
    switch (k.kind) {
        case KernelSpec::Kind::linear_decay: return 1.0 - 0.5 * u;
        case KernelSpec::Kind::exp_decay: return std::exp(-u);
        case KernelSpec::Kind::affine: return k.a - k.b * u;
    }
    return 0.0;
}

double kernel_deriv(const KernelSpec& k, double u) {
    if (u < 0.0 || u >= 1.0)
        throw std::domain_error("kernel_deriv: derivative defined on [0,1) only");
    switch (k.kind) {
        case KernelSpec::Kind::linear_decay: return -0.5;
        case KernelSpec::Kind::exp_decay: return -std::exp(-u);
        case KernelSpec::Kind::affine: return -k.b;
    }
    return 0.0;
}

double kernel_at_one(const KernelSpec& k) {
    switch (k.kind) {
        case KernelSpec::Kind::linear_decay: return 0.5;
        case KernelSpec::Kind::exp_decay: return std::exp(-1.0);
        case KernelSpec::Kind::affine: return k.a - k.b;
    }
    return 0.0;
}

bool ValidationReport::all_pass() const {
    for (const auto& c : clauses)
        if (!c.pass) return false;
    return true;
}

ValidationReport validate_kernel(const std::function<double(double)>& eval,
                                 const std::function<double(double)>& deriv,
                                 const std::string& name, int probe_grid_size) {
    if (probe_grid_size < 16) throw config_error("validate_kernel: probe_grid_size must be >= 16");
    ValidationReport rep;
    rep.kernel = name;

    bool positive = true;
    double worst_value = eval(0.0);
    for (int i = 0; i <= probe_grid_size; ++i) {
        const double u = static_cast<double>(i) / probe_grid_size;
        const double v = eval(u);
        if (v < worst_value) worst_value = v;
        if (!(v > 0.0)) positive = false;
    }
    {
        std::ostringstream os;
        os << "min K over probes = " << worst_value;
        rep.clauses.push_back({"positivity", positive, os.str()});
    }

    const double k1 = eval(1.0);
    {
        std::ostringstream os;
        os << "K(1) = " << k1;
        rep.clauses.push_back({"K(1)>0", k1 > 0.0, os.str()});
    }

    // Derivative probed on the open interval only; the endpoint u=0 may have
    // K'(0) = 0 without failing.
    bool decreasing = true;
    double max_abs_deriv = 0.0;
    for (int i = 1; i < probe_grid_size; ++i) {
        const double u = static_cast<double>(i) / probe_grid_size;
        const double d = deriv(u);
        max_abs_deriv = std::max(max_abs_deriv, std::fabs(d));
        if (!(d < 0.0)) decreasing = false;
    }
    max_abs_deriv = std::max(max_abs_deriv, std::fabs(deriv(0.0)));
    {
        std::ostringstream os;
        os << "probed on (0,1), " << (probe_grid_size - 1) << " points";
        rep.clauses.push_back({"K'<0", decreasing, os.str()});
    }

    rep.lipschitz_estimate = max_abs_deriv;
    {
        std::ostringstream os;
        os << "sup |K'| estimate = " << max_abs_deriv;
        rep.clauses.push_back({"lipschitz_bound_finite", std::isfinite(max_abs_deriv), os.str()});
    }
    return rep;
}

ValidationReport validate_kernel(const KernelSpec& k, int probe_grid_size) {
    // probes stay inside [0,1), the derivative's domain
    return validate_kernel([&k](double u) { return kernel_eval(k, u); },
                           [&k](double u) { return kernel_deriv(k, u); },
                           kernel_name(k), probe_grid_size);
}

} // namespace funcreg
