#pragma once

#include <stdexcept>
#include <string>

namespace funcreg {

// Invalid user-supplied configuration (bad field, malformed file, violated
// precondition). CLI maps this to exit code 2.
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numeric failure at run time (quadrature non-convergence, degenerate
// reductions). CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kVersion = "0.1.0";

} // namespace funcreg
