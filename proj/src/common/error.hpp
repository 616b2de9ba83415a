#pragma once

#include <stdexcept>
#include <string>

namespace cellflux {

// Bad input: violated precondition, invalid parameter combination.
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Bug or broken internal invariant (degenerate triangle, open polygon cycle, ...).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Numerical failure at runtime: solver stall, intensity overflow.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

// Unparseable or inconsistent configuration; message names the key.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cellflux
