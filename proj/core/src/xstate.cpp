#include "xsep/xstate.hpp"

#include <cmath>

namespace xsep {

XState::XState(DiagVec diag, HermVec anti) : a(std::move(diag)), c(std::move(anti)) {
    if (a.n() != c.n()) throw ValidationError("x-state: diagonal and anti-diagonal sizes differ");
}

DenseState::DenseState(int n, Eigen::MatrixXcd m, double herm_tol) : n_(n), m_(std::move(m)) {
    if (n < 1 || n > kMaxDenseQubits)
        throw ValidationError("dense state: qubit count must be in [1, " +
                              std::to_string(kMaxDenseQubits) + "], got " + std::to_string(n));
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    if (m_.rows() != d || m_.cols() != d)
        throw ValidationError("dense state: matrix must be " + std::to_string(d) + "x" +
                              std::to_string(d));
    const double herm_err = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > herm_tol)
        throw ValidationError("dense state: not Hermitian (max deviation " +
                              std::to_string(herm_err) + ")");
}

double DenseState::trace_error() const { return std::abs(m_.trace() - Complex{1.0, 0.0}); }

double DenseState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

XState xpart(const DenseState& rho) {
    const int n = rho.n();
    DiagVec a(n);
    std::vector<Complex> reps(dim_of(n) / 2);
    for (std::uint32_t r = 0; r < dim_of(n); ++r) {
        double d = rho.matrix()(r, r).real();
        if (d < 0.0 && d > -1e-12) d = 0.0;  // eigensolver round-off on PSD inputs
        a[r] = d;
    }
    if (!a.nonnegative())
        throw ValidationError("x-part: negative diagonal entry");
    for (std::uint32_t r = 0; r < dim_of(n) / 2; ++r)
        reps[r] = rho.matrix()(r, complement_rank(n, r));
    return XState(std::move(a), HermVec::from_reps(n, std::move(reps)));
}

bool is_positive(const XState& x, double tol) {
    if (!x.a.nonnegative(tol)) return false;
    for (std::uint32_t r = 0; r < x.c.rep_dim(); ++r) {
        const double prod = x.a[r] * x.a[complement_rank(x.n(), r)];
        if (prod + tol < std::norm(x.c.at(r))) return false;
    }
    return true;
}

PptMargin ppt_margin(const XState& x) {
    PptMargin m{0, 0, std::numeric_limits<double>::infinity(), 0.0};
    for (std::uint32_t r = 0; r < x.c.rep_dim(); ++r) {
        const double g = std::sqrt(std::max(0.0, x.a[r] * x.a[complement_rank(x.n(), r)]));
        if (g < m.geo_mean) {
            m.geo_mean = g;
            m.diag_rank = r;
        }
        const double cm = std::abs(x.c.at(r));
        if (cm > m.anti_abs) {
            m.anti_abs = cm;
            m.anti_rank = r;
        }
    }
    return m;
}

bool is_ppt(const XState& x, double tol) { return ppt_margin(x).margin() >= -tol; }

XState ghz_diagonal(int n, std::span<const double> p, double tol) {
    if (p.size() != dim_of(n))
        throw ValidationError("ghz diagonal: expected " + std::to_string(dim_of(n)) +
                              " probabilities");
    double sum = 0.0;
    for (double w : p) {
        if (w < -tol) throw ValidationError("ghz diagonal: negative probability");
        sum += w;
    }
    if (std::abs(sum - 1.0) > tol)
        throw ValidationError("ghz diagonal: probabilities sum to " + std::to_string(sum));

    DiagVec a(n);
    std::vector<Complex> reps(dim_of(n) / 2);
    for (std::uint32_t r = 0; r < dim_of(n); ++r)
        a[r] = 0.5 * (p[r] + p[complement_rank(n, r)]);
    for (std::uint32_t r = 0; r < dim_of(n) / 2; ++r) {
        // representatives have leading bit 0, so the GHZ sign is +1 at r
        reps[r] = Complex{0.5 * (p[r] - p[complement_rank(n, r)]), 0.0};
    }
    return XState(std::move(a), HermVec::from_reps(n, std::move(reps)));
}

DenseState assemble(const XState& x) {
    const int n = x.n();
    if (n > kMaxDenseQubits)
        throw CostGuardError("assemble: dense matrices are capped at n <= " +
                                 std::to_string(kMaxDenseQubits),
                             std::pow(4.0, n));
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (std::uint32_t r = 0; r < dim_of(n); ++r) {
        m(r, r) = x.a[r];
        m(r, complement_rank(n, r)) = x.c.at(r);
    }
    return DenseState(n, std::move(m));
}

Eigen::VectorXcd ghz_basis_vector(const Index& i) {
    const int n = i.n();
    if (n > kMaxDenseQubits)
        throw CostGuardError("ghz basis: dense vectors are capped at n <= " +
                                 std::to_string(kMaxDenseQubits),
                             std::pow(2.0, n));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_of(n)));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    v(i.rank()) = inv_sqrt2;
    v(i.complement().rank()) = (i.bit(1) ? -1.0 : 1.0) * inv_sqrt2;
    return v;
}

}  // namespace xsep
