#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace repint {

struct QuadCfg {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 50;

    void validate() const;

    // Copy with both tolerances scaled down, floored so nested oracles do not
    // chase noise below double precision.
    QuadCfg tightened(double factor = 0.01, double floor_tol = 5e-14) const;
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
};

// Thrown when the adaptive refinement cannot reach tolerance; carries the
// best estimate so callers can still report it.
struct QuadFailure : std::runtime_error {
    QuadFailure(const std::string& what, QuadResult best_)
        : std::runtime_error(what), best(best_) {}
    QuadResult best;
};

using Fn = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod 7/15 integration of f over [a, b].
QuadResult integrate(const Fn& f, double a, double b, const QuadCfg& cfg = {});

}  // namespace repint
