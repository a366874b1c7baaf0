// The four functionals attached to X-data, each returned as a certified
// enclosure:
//
//   delta(s)     infimum over positive r of the posynomial sum_i s_i r^i;
//                exact for n <= 2, otherwise convex descent in log
//                coordinates (upper) against the weighted AM-GM dual (lower).
//   xnorm(u)     supremum over the n-torus of sum_i u_i alpha^i; exact for
//                n <= 2, certified grid + Lipschitz padding above multistart
//                ascent for n >= 3, clamped into the sandwich
//                2 max|u| <= . <= sum|u|.
//   delta_cap(a) the dual diagonal functional inf{<s,a> : delta(s) = 1};
//                exact for n <= 3 via the multiset bound, enclosed by
//                min a_i and candidate-s optimization otherwise.
//   dual_norm(c) the dual norm sup{<u,c> : xnorm(u) = 1}; exact for n <= 2,
//                enclosed by phase-twisted feasible directions below and a
//                greedy torus-atom decomposition above.

#pragma once

#include <optional>

#include "xsep/bounds.hpp"
#include "xsep/vectors.hpp"

namespace xsep {

BoundInterval delta(const DiagVec& s, const OptimConfig& cfg = {});

BoundInterval xnorm(const HermVec& u, const OptimConfig& cfg = {});

struct DeltaCapResult {
    BoundInterval bounds;
    double min_diag = 0.0;         // lower bound min_i a_i
    double min_pair = 0.0;         // min_i sqrt(a_i a_complement)
    double tilde = 0.0;            // multiset geometric-mean bound
    double optimizer_upper = 0.0;  // best <a,s>/delta_lower(s) over candidates
    std::optional<DiagVec> best_s;  // candidate attaining optimizer_upper, delta-normalized
};

DeltaCapResult delta_cap(const DiagVec& a, const OptimConfig& cfg = {});

struct DualNormResult {
    BoundInterval bounds;
    double twist_lower = 0.0;       // best phase-twist ratio
    std::optional<HermVec> best_u;  // feasible direction attaining the lower bound
    double best_u_xnorm_upper = 0.0;
};

DualNormResult dual_norm(const HermVec& c, const OptimConfig& cfg = {});

/// dual_norm with early exits: stops tightening as soon as the interval
/// separates from the given thresholds (used by decision procedures).
DualNormResult dual_norm(const HermVec& c, const OptimConfig& cfg,
                         std::optional<double> stop_upper_below,
                         std::optional<double> stop_lower_above);

namespace detail {
/// Multistart ascent for the torus functional; returns the best value and
/// the maximizing angles (theta_k = arg alpha_k).
struct AscentResult {
    double value = 0.0;
    std::vector<double> angles;
};
AscentResult torus_ascent(const HermVec& u, const OptimConfig& cfg);

/// Value of sum_i u_i alpha^i at alpha = exp(i angles).
double torus_value(const HermVec& u, std::span<const double> angles);
}  // namespace detail

}  // namespace xsep
