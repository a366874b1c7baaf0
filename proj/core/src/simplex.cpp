#include "simplex.hpp"

#include <vector>

namespace xsep::detail {

std::optional<Eigen::VectorXd> solve_feasibility(const Eigen::MatrixXd& A,
                                                 const Eigen::VectorXd& b,
                                                 double tol) {
    const Eigen::Index m = A.rows();
    const Eigen::Index nvar = A.cols();

    // Tableau columns: structural variables, artificial variables, rhs.
    Eigen::MatrixXd tab(m, nvar + m + 1);
    tab.leftCols(nvar) = A;
    tab.middleCols(nvar, m) = Eigen::MatrixXd::Identity(m, m);
    tab.col(nvar + m) = b;

    std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
    for (Eigen::Index r = 0; r < m; ++r) basis[static_cast<std::size_t>(r)] = nvar + r;

    // Phase-1 objective: minimize the sum of artificials.  Reduced costs of
    // column j equal -(sum of rows of tab over artificial basis rows)_j; we
    // keep an explicit objective row.
    Eigen::RowVectorXd obj = -tab.colwise().sum();
    obj.segment(nvar, m).setZero();
    double obj_val = -b.sum();

    const int max_pivots = 200 * static_cast<int>(m + 8);
    for (int it = 0; it < max_pivots; ++it) {
        // Bland's rule: first column with negative reduced cost.
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < nvar + m; ++j) {
            if (obj(j) < -1e-11) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        Eigen::Index leave = -1;
        double best_ratio = 0.0;
        for (Eigen::Index r = 0; r < m; ++r) {
            const double a = tab(r, enter);
            if (a > 1e-11) {
                const double ratio = tab(r, nvar + m) / a;
                if (leave < 0 || ratio < best_ratio - 1e-15 ||
                    (ratio < best_ratio + 1e-15 && basis[static_cast<std::size_t>(r)] <
                                                       basis[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
        }
        if (leave < 0) break;  // unbounded phase-1 cannot happen; bail out defensively

        const double pivot = tab(leave, enter);
        tab.row(leave) /= pivot;
        for (Eigen::Index r = 0; r < m; ++r) {
            if (r == leave) continue;
            const double f = tab(r, enter);
            if (f != 0.0) tab.row(r) -= f * tab.row(leave);
        }
        const double fo = obj(enter);
        obj -= fo * tab.row(leave);
        obj_val -= fo * tab(leave, nvar + m);
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    if (-obj_val > tol) return std::nullopt;  // phase-1 optimum = -obj_val

    Eigen::VectorXd w = Eigen::VectorXd::Zero(nvar);
    for (Eigen::Index r = 0; r < m; ++r) {
        const Eigen::Index j = basis[static_cast<std::size_t>(r)];
        if (j < nvar) w(j) = std::max(0.0, tab(r, nvar + m));
    }
    return w;
}

}  // namespace xsep::detail
