// Internal dense phase-1 simplex for small equality-constrained feasibility
// problems: find w >= 0 with A w = b.  Used to decide whether a balanced
// weight vector exists on a given support.

#pragma once

#include <Eigen/Dense>
#include <optional>

namespace xsep::detail {

/// Returns a feasible w >= 0 with A w = b (b >= 0 required), or nullopt when
/// the phase-1 optimum stays above `tol`.
std::optional<Eigen::VectorXd> solve_feasibility(const Eigen::MatrixXd& A,
                                                 const Eigen::VectorXd& b,
                                                 double tol = 1e-9);

}  // namespace xsep::detail
