#pragma once

#include <stdexcept>
#include <string>

namespace zetashift {

// Exit-code contract shared by the library and the CLI:
//   1 usage, 2 non-convergence, 3 numeric/resolution, 4 budget.
struct error : std::runtime_error {
    int exit_code;
    error(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
};

struct usage_error : error {
    explicit usage_error(std::string msg) : error(std::move(msg), 1) {}
};

struct nonconvergence_error : error {
    explicit nonconvergence_error(std::string msg) : error(std::move(msg), 2) {}
};

struct numeric_error : error {
    explicit numeric_error(std::string msg) : error(std::move(msg), 3) {}
};

struct budget_error : error {
    explicit budget_error(std::string msg) : error(std::move(msg), 4) {}
};

// numeric_error refinements, kept distinct so callers can react per cause
struct pole_error : numeric_error {
    explicit pole_error(std::string msg) : numeric_error(std::move(msg)) {}
};
struct accuracy_error : numeric_error {
    explicit accuracy_error(std::string msg) : numeric_error(std::move(msg)) {}
};
struct resolution_error : numeric_error {
    explicit resolution_error(std::string msg) : numeric_error(std::move(msg)) {}
};
struct range_error : numeric_error {
    explicit range_error(std::string msg) : numeric_error(std::move(msg)) {}
};
struct zero_on_path_error : numeric_error {
    double tau_or_sigma = 0.0;  // location on the continuation path
    explicit zero_on_path_error(std::string msg, double where = 0.0)
        : numeric_error(std::move(msg)), tau_or_sigma(where) {}
};
struct contour_error : numeric_error {
    explicit contour_error(std::string msg) : numeric_error(std::move(msg)) {}
};

}  // namespace zetashift
