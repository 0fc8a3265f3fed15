#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heliumq {

using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;

struct FitParam {
    std::string name;
    double value = 0.0;
    double initial = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool at_bound = false;
};

struct FitResult {
    std::vector<FitParam> params;
    double residual_norm = 0.0;  // RMS residual in the objective's units
    int n_iterations = 0;
    bool converged = false;
    std::vector<double> residuals;   // per-observable diagnostics at the solution
    std::vector<std::string> notes;  // pegged bounds, mismatch flags, ...

    double value(const std::string& name) const;
};

struct LsqOptions {
    double step_tol = 1e-10;      // relative parameter step
    double residual_tol = 1e-12;  // relative cost change
    int max_iterations = 2000;
};

// Derivative-free simplex descent with one restart, followed by a
// finite-difference Gauss-Newton polish. Parameters are scaled internally so
// mixed-magnitude problems stay well conditioned; candidate points are kept
// inside the bounds box. Deterministic for identical inputs.
FitResult minimize_least_squares(const ResidualFn& objective, std::span<const double> x0,
                                 std::span<const std::pair<double, double>> bounds,
                                 std::span<const std::string> names,
                                 const LsqOptions& options = {});

}  // namespace heliumq
