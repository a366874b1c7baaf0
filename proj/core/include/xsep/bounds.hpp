// Certified enclosures for quantities defined by optimization, and the knobs
// controlling the solvers.

#pragma once

#include <cstdint>
#include <string>

#include "xsep/errors.hpp"

namespace xsep {

enum class BoundMethod {
    ClosedForm,     // exact formula
    GpDual,         // weighted AM-GM dual certificate
    GridLipschitz,  // grid maximum plus Lipschitz padding
    FeasiblePoint,  // value of an explicit feasible point
    Sandwich,       // a-priori norm inequality
};

std::string to_string(BoundMethod m);

struct BoundInterval {
    BoundInterval() = default;
    BoundInterval(double lo, double up, BoundMethod lo_m, BoundMethod up_m);

    static BoundInterval exact(double v, BoundMethod m = BoundMethod::ClosedForm) {
        return BoundInterval(v, v, m, m);
    }

    double lower = 0.0;
    double upper = 0.0;
    BoundMethod lower_method = BoundMethod::ClosedForm;
    BoundMethod upper_method = BoundMethod::ClosedForm;

    double width() const { return upper - lower; }
    bool is_exact() const { return lower == upper; }

    BoundInterval scaled(double factor) const {  // factor >= 0
        return BoundInterval(lower * factor, upper * factor, lower_method, upper_method);
    }
};

struct OptimConfig {
    int grid = 100000;       // points per circle for certified 1-D grids
    int multistart = 16;     // ascent restarts
    int max_iter = 200;      // iterations per descent/ascent
    double tol = 1e-9;       // descent/ascent gradient tolerance (relative)
    std::uint64_t seed = 20250809;
    int mp_steps = 48;            // atoms for the dual-norm upper tightening
    long refine_budget = 400000;  // evaluation budget for multi-angle certification
    double witness_tol = 1e-10;   // required violation margin for certificates
    double state_tol = 1e-10;     // validation tolerance for state data

    void validate() const;
};

}  // namespace xsep
