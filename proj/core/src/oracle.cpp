#include "xsep/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace xsep::oracle {

namespace {

void check_grid_guard(int n, int m) {
    const double total = std::pow(static_cast<double>(m), n);
    if (m < 2 || total > 1e8)
        throw CostGuardError("oracle grid: m^n = " + std::to_string(total) + " exceeds 1e8",
                             total);
}

}  // namespace

double grid_delta(const DiagVec& s, double L, int m) {
    const int n = s.n();
    if (!s.nonnegative()) throw ValidationError("grid delta: negative entry");
    if (L <= 0.0) throw ValidationError("grid delta: L must be positive");
    check_grid_guard(n, m);
    std::vector<double> r(static_cast<std::size_t>(n));
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    const double h = 2.0 * L / (m - 1);
    double best = std::numeric_limits<double>::infinity();
    for (;;) {
        for (int k = 0; k < n; ++k)
            r[static_cast<std::size_t>(k)] = std::exp(-L + h * idx[static_cast<std::size_t>(k)]);
        double f = 0.0;
        for (std::uint32_t i = 0; i < s.dim(); ++i)
            if (s[i] > 0.0) f += s[i] * monomial(r, Index(n, i));
        best = std::min(best, f);
        int k = 0;
        while (k < n && ++idx[static_cast<std::size_t>(k)] == m) {
            idx[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return best;
}

double grid_xnorm(const HermVec& u, int m) {
    const int n = u.n();
    check_grid_guard(n, m);
    std::vector<Complex> alpha(static_cast<std::size_t>(n));
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    const double h = 2.0 * std::numbers::pi / m;
    double best = -std::numeric_limits<double>::infinity();
    for (;;) {
        for (int k = 0; k < n; ++k)
            alpha[static_cast<std::size_t>(k)] = std::polar(1.0, h * idx[static_cast<std::size_t>(k)]);
        Complex half{0.0, 0.0};
        for (std::uint32_t r = 0; r < u.rep_dim(); ++r)
            half += u.at(r) * monomial(alpha, Index(n, r));
        best = std::max(best, 2.0 * half.real());
        int k = 0;
        while (k < n && ++idx[static_cast<std::size_t>(k)] == m) {
            idx[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return best;
}

double delta3_nested(const DiagVec& s, double L, int iters) {
    if (s.n() != 3) throw ValidationError("nested delta route is specific to n = 3");
    if (!s.nonnegative()) throw ValidationError("nested delta: negative entry");
    const auto g = [&](double rho) {
        const double r = std::exp(rho);
        const double q = 1.0 / r;
        return std::sqrt((s[0b000] * r + s[0b001] * q) * (s[0b110] * r + s[0b111] * q)) +
               std::sqrt((s[0b010] * r + s[0b011] * q) * (s[0b100] * r + s[0b101] * q));
    };
    // Golden-section on the log variable; the bracketed function is convex.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = -L, b = L;
    double c1 = b - phi * (b - a), c2 = a + phi * (b - a);
    double f1 = g(c1), f2 = g(c2);
    for (int it = 0; it < iters; ++it) {
        if (f1 <= f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - phi * (b - a);
            f1 = g(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + phi * (b - a);
            f2 = g(c2);
        }
    }
    return 2.0 * std::min(f1, f2);
}

DenseState sample_separable(int n, int k, std::uint64_t seed) {
    if (n < 1 || n > kMaxDenseQubits)
        throw ValidationError("separable sampler: n must be in [1, " +
                              std::to_string(kMaxDenseQubits) + "]");
    if (k < 1) throw ValidationError("separable sampler: need at least one product term");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);

    std::vector<double> weights(static_cast<std::size_t>(k));
    double wsum = 0.0;
    for (double& w : weights) {
        w = expo(rng);
        wsum += w;
    }

    const auto d = static_cast<Eigen::Index>(dim_of(n));
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int t = 0; t < k; ++t) {
        Eigen::VectorXcd prod = Eigen::VectorXcd::Ones(1);
        for (int q = 0; q < n; ++q) {
            Eigen::Vector2cd f;
            f << Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)};
            f.normalize();
            Eigen::VectorXcd next(prod.size() * 2);
            for (Eigen::Index j = 0; j < prod.size(); ++j) {
                next(2 * j) = prod(j) * f(0);
                next(2 * j + 1) = prod(j) * f(1);
            }
            prod = std::move(next);
        }
        rho += (weights[static_cast<std::size_t>(t)] / wsum) * (prod * prod.adjoint());
    }
    return DenseState(n, std::move(rho));
}

namespace {

// Partial transpose on the qubit subset encoded by `mask` (bit n-k for
// position k): swap the masked bits between the row and column labels.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& m, int n, std::uint32_t mask) {
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    Eigen::MatrixXcd out(d, d);
    for (std::uint32_t i = 0; i < dim_of(n); ++i) {
        for (std::uint32_t j = 0; j < dim_of(n); ++j) {
            const std::uint32_t ii = (i & ~mask) | (j & mask);
            const std::uint32_t jj = (j & ~mask) | (i & mask);
            out(ii, jj) = m(i, j);
        }
    }
    return out;
}

}  // namespace

bool dense_ppt_check(const DenseState& rho, double tol) {
    const int n = rho.n();
    if (n > kMaxEigQubits)
        throw CostGuardError("dense PPT check: eigen-based oracle capped at n <= " +
                                 std::to_string(kMaxEigQubits),
                             std::pow(4.0, n));
    for (std::uint32_t mask = 1; mask + 1 < dim_of(n); ++mask) {
        const Eigen::MatrixXcd pt = partial_transpose(rho.matrix(), n, mask);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -tol) return false;
    }
    return true;
}

bool two_qubit_oracle(const XState& x, double tol) {
    if (x.n() != 2) throw ValidationError("two-qubit oracle: n must be 2");
    return dense_ppt_check(assemble(x), tol);
}

}  // namespace xsep::oracle
