#include "xsep/norms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>

#include "simplex.hpp"
#include "xsep/multisets.hpp"
#include "xsep/phase.hpp"

namespace xsep {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::ClosedForm: return "closed-form";
        case BoundMethod::GpDual: return "gp-dual";
        case BoundMethod::GridLipschitz: return "grid-lipschitz";
        case BoundMethod::FeasiblePoint: return "feasible-point";
        case BoundMethod::Sandwich: return "sandwich";
    }
    return "?";
}

BoundInterval::BoundInterval(double lo, double up, BoundMethod lo_m, BoundMethod up_m)
    : lower(lo), upper(up), lower_method(lo_m), upper_method(up_m) {
    if (!(lower <= upper + 1e-12 * std::max(1.0, std::abs(upper))))
        throw Error("bound interval: lower " + std::to_string(lower) + " exceeds upper " +
                    std::to_string(upper));
}

void OptimConfig::validate() const {
    if (grid < 8 || multistart < 1 || max_iter < 1 || tol <= 0.0 || mp_steps < 0 ||
        refine_budget < 64 || witness_tol <= 0.0 || state_tol <= 0.0)
        throw ValidationError("optimizer config: all knobs must be positive");
}

// ---------------------------------------------------------------------------
// delta: posynomial infimum
// ---------------------------------------------------------------------------

namespace {

// Signs sigma_i(k) = +/-1 for the support ranks, as a dense matrix row per rank.
Eigen::MatrixXd support_signs(int n, const std::vector<std::uint32_t>& support) {
    Eigen::MatrixXd sig(static_cast<Eigen::Index>(support.size()), n);
    for (std::size_t j = 0; j < support.size(); ++j)
        for (int k = 1; k <= n; ++k)
            sig(static_cast<Eigen::Index>(j), k - 1) =
                ((support[j] >> (n - k)) & 1u) ? -1.0 : 1.0;
    return sig;
}

struct PosyEval {
    double f;
    Eigen::VectorXd grad;
    Eigen::MatrixXd hess;
};

PosyEval eval_posy(const Eigen::VectorXd& coef, const Eigen::MatrixXd& sig,
                   const Eigen::VectorXd& rho, bool with_hess) {
    const Eigen::Index m = coef.size();
    const Eigen::Index n = sig.cols();
    PosyEval out{0.0, Eigen::VectorXd::Zero(n), Eigen::MatrixXd()};
    if (with_hess) out.hess = Eigen::MatrixXd::Zero(n, n);
    const Eigen::VectorXd expo = sig * rho;
    for (Eigen::Index j = 0; j < m; ++j) {
        const double term = coef(j) * std::exp(expo(j));
        out.f += term;
        out.grad += term * sig.row(j).transpose();
        if (with_hess) out.hess += term * sig.row(j).transpose() * sig.row(j);
    }
    return out;
}

// Euclidean projection of w0 onto {w : sig^T-balance = 0, sum w = 1}, with
// iterative removal of negative components.  Returns the dual certificate
// value prod (coef_j / w_j)^{w_j}, or 0 when no usable projection is found.
double gp_dual_value(const Eigen::VectorXd& coef, const Eigen::MatrixXd& sig,
                     const Eigen::VectorXd& w0) {
    const Eigen::Index n = sig.cols();
    std::vector<Eigen::Index> active(static_cast<std::size_t>(coef.size()));
    for (std::size_t j = 0; j < active.size(); ++j) active[j] = static_cast<Eigen::Index>(j);

    Eigen::VectorXd w;
    for (int pass = 0; pass < 40 && !active.empty(); ++pass) {
        const Eigen::Index m = static_cast<Eigen::Index>(active.size());
        Eigen::MatrixXd B(n + 1, m);
        Eigen::VectorXd w0a(m);
        for (Eigen::Index j = 0; j < m; ++j) {
            B.col(j).head(n) = sig.row(active[static_cast<std::size_t>(j)]).transpose();
            B(n, j) = 1.0;
            w0a(j) = w0(active[static_cast<std::size_t>(j)]);
        }
        Eigen::VectorXd d = Eigen::VectorXd::Zero(n + 1);
        d(n) = 1.0;
        const Eigen::VectorXd resid = B * w0a - d;
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(B * B.transpose());
        const Eigen::VectorXd wa = w0a - B.transpose() * cod.solve(resid);
        if (wa.minCoeff() >= -1e-12) {
            if ((B * wa - d).cwiseAbs().maxCoeff() > 1e-8) return 0.0;
            w = Eigen::VectorXd::Zero(coef.size());
            for (Eigen::Index j = 0; j < m; ++j)
                w(active[static_cast<std::size_t>(j)]) = std::max(0.0, wa(j));
            double logv = 0.0;
            for (Eigen::Index j = 0; j < coef.size(); ++j)
                if (w(j) > 1e-300) logv += w(j) * std::log(coef(j) / w(j));
            return std::exp(logv);
        }
        std::vector<Eigen::Index> keep;
        for (Eigen::Index j = 0; j < m; ++j)
            if (wa(j) >= -1e-12) keep.push_back(active[static_cast<std::size_t>(j)]);
        if (keep.size() == active.size()) return 0.0;
        active = std::move(keep);
    }
    return 0.0;
}

}  // namespace

BoundInterval delta(const DiagVec& s, const OptimConfig& cfg) {
    cfg.validate();
    if (!s.nonnegative()) throw ValidationError("delta: negative entry in the diagonal vector");
    const int n = s.n();

    if (n == 1) return BoundInterval::exact(2.0 * std::sqrt(s[0] * s[1]));
    if (n == 2)
        return BoundInterval::exact(2.0 * (std::sqrt(s[0] * s[3]) + std::sqrt(s[1] * s[2])));

    std::vector<std::uint32_t> support;
    for (std::uint32_t r = 0; r < s.dim(); ++r)
        if (s[r] > 0.0) support.push_back(r);
    if (support.empty()) return BoundInterval::exact(0.0);

    const Eigen::MatrixXd sig = support_signs(n, support);
    Eigen::VectorXd coef(static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j)
        coef(static_cast<Eigen::Index>(j)) = s[support[j]];

    // The infimum is positive exactly when a balanced weight vector lives on
    // the support; otherwise some direction sends every term to zero.
    {
        Eigen::MatrixXd A(n + 1, sig.rows());
        A.topRows(n) = sig.transpose();
        A.row(n).setOnes();
        Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
        b(n) = 1.0;
        if (!detail::solve_feasibility(A, b)) return BoundInterval::exact(0.0);
    }

    // Damped Newton on the convex log-coordinate objective.
    Eigen::VectorXd rho = Eigen::VectorXd::Zero(n);
    PosyEval ev = eval_posy(coef, sig, rho, true);
    for (int it = 0; it < cfg.max_iter; ++it) {
        if (ev.grad.cwiseAbs().maxCoeff() <= 1e-13 * std::max(ev.f, 1e-300)) break;
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(ev.hess);
        Eigen::VectorXd dir = -cod.solve(ev.grad);
        if (!dir.allFinite() || dir.dot(ev.grad) >= 0.0) dir = -ev.grad / std::max(ev.f, 1e-300);
        double t = 1.0;
        const double slope = dir.dot(ev.grad);
        while (t > 1e-14) {
            Eigen::VectorXd trial = rho + t * dir;
            if (trial.cwiseAbs().maxCoeff() <= 40.0) {
                const PosyEval tev = eval_posy(coef, sig, trial, false);
                if (tev.f <= ev.f + 0.25 * t * slope) {
                    rho = std::move(trial);
                    break;
                }
            }
            t *= 0.5;
        }
        if (t <= 1e-14) break;
        ev = eval_posy(coef, sig, rho, true);
    }

    const double upper = ev.f;
    const Eigen::VectorXd w0 = (coef.array() * (sig * rho).array().exp()).matrix() / upper;
    double lower = gp_dual_value(coef, sig, w0);

    // Conjugate-pair fallback bounds (uniform balanced weights on a pair).
    for (std::uint32_t r = 0; r < s.dim() / 2; ++r) {
        const double p = s[r] * s[complement_rank(n, r)];
        if (p > 0.0) lower = std::max(lower, 2.0 * std::sqrt(p));
    }
    lower = std::min(lower, upper);
    return BoundInterval(lower, upper, BoundMethod::GpDual, BoundMethod::FeasiblePoint);
}

// ---------------------------------------------------------------------------
// xnorm: torus supremum
// ---------------------------------------------------------------------------

namespace detail {

double torus_value(const HermVec& u, std::span<const double> angles) {
    const int n = u.n();
    if (static_cast<int>(angles.size()) != n)
        throw ValidationError("torus value: expected one angle per qubit");
    double v = 0.0;
    for (std::uint32_t r = 0; r < u.rep_dim(); ++r) {
        double phase = std::arg(u.at(r));
        for (int k = 1; k <= n; ++k)
            phase += ((r >> (n - k)) & 1u) ? -angles[static_cast<std::size_t>(k - 1)]
                                           : angles[static_cast<std::size_t>(k - 1)];
        v += std::abs(u.at(r)) * std::cos(phase);
    }
    return 2.0 * v;
}

namespace {

struct TorusObjective {
    int n;
    std::vector<double> mod;    // |u_r| per representative
    std::vector<double> phase;  // arg u_r per representative

    explicit TorusObjective(const HermVec& u) : n(u.n()) {
        mod.resize(u.rep_dim());
        phase.resize(u.rep_dim());
        for (std::uint32_t r = 0; r < u.rep_dim(); ++r) {
            mod[r] = std::abs(u.at(r));
            phase[r] = mod[r] > 0.0 ? std::arg(u.at(r)) : 0.0;
        }
    }

    double value(const std::vector<double>& th) const {
        double v = 0.0;
        for (std::uint32_t r = 0; r < mod.size(); ++r) v += mod[r] * std::cos(arg_at(r, th));
        return 2.0 * v;
    }

    void gradient(const std::vector<double>& th, std::vector<double>& g) const {
        std::fill(g.begin(), g.end(), 0.0);
        for (std::uint32_t r = 0; r < mod.size(); ++r) {
            const double s = -2.0 * mod[r] * std::sin(arg_at(r, th));
            for (int k = 1; k <= n; ++k)
                g[static_cast<std::size_t>(k - 1)] += ((r >> (n - k)) & 1u) ? -s : s;
        }
    }

    double arg_at(std::uint32_t r, const std::vector<double>& th) const {
        double p = phase[r];
        for (int k = 1; k <= n; ++k)
            p += ((r >> (n - k)) & 1u) ? -th[static_cast<std::size_t>(k - 1)]
                                       : th[static_cast<std::size_t>(k - 1)];
        return p;
    }
};

}  // namespace

AscentResult torus_ascent(const HermVec& u, const OptimConfig& cfg) {
    const int n = u.n();
    const TorusObjective obj(u);
    const double scale = std::max(u.l1(), 1e-300);

    std::vector<std::vector<double>> starts;
    starts.emplace_back(static_cast<std::size_t>(n), 0.0);
    {
        // Least-squares phase cancellation: theta = -Theta^T phi / 2^n makes
        // the twisted phases as flat as possible, a strong ascent seed.
        std::vector<double> t(static_cast<std::size_t>(n), 0.0);
        for (std::uint32_t r = 0; r < u.rep_dim(); ++r) {
            const double ph = obj.phase[r];
            for (int k = 1; k <= n; ++k) {
                const double sgn = ((r >> (n - k)) & 1u) ? -1.0 : 1.0;
                // full vector contributes both the rep and its conjugate
                t[static_cast<std::size_t>(k - 1)] -= 2.0 * sgn * ph;
            }
        }
        for (double& x : t) x /= static_cast<double>(dim_of(n));
        starts.push_back(std::move(t));
    }
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    while (static_cast<int>(starts.size()) < std::max(2, cfg.multistart)) {
        std::vector<double> t(static_cast<std::size_t>(n));
        for (double& x : t) x = uni(rng);
        starts.push_back(std::move(t));
    }

    AscentResult best;
    best.value = -std::numeric_limits<double>::infinity();
    std::vector<double> g(static_cast<std::size_t>(n));
    for (auto& th : starts) {
        double f = obj.value(th);
        for (int it = 0; it < cfg.max_iter; ++it) {
            obj.gradient(th, g);
            double gnorm2 = 0.0, gmax = 0.0;
            for (double x : g) {
                gnorm2 += x * x;
                gmax = std::max(gmax, std::abs(x));
            }
            if (gmax <= 1e-12 * scale) break;
            double t = 1.0 / std::max(1.0, scale);
            bool moved = false;
            while (t > 1e-16) {
                std::vector<double> trial(th);
                for (std::size_t k = 0; k < trial.size(); ++k) trial[k] += t * g[k];
                const double ft = obj.value(trial);
                if (ft >= f + 0.25 * t * gnorm2) {
                    th = std::move(trial);
                    f = ft;
                    moved = true;
                    break;
                }
                t *= 0.5;
            }
            if (!moved) break;
        }
        if (f > best.value) {
            best.value = f;
            best.angles = th;
        }
    }
    return best;
}

}  // namespace detail

namespace {

// Fix one angle of the last qubit: v_i = u_{i0} alpha + u_{i1} conj(alpha).
HermVec reduce_last(const HermVec& u, double angle) {
    const int n = u.n();
    const Complex a = std::polar(1.0, angle);
    std::vector<Complex> reps(u.rep_dim() / 2);
    for (std::uint32_t r = 0; r < u.rep_dim() / 2; ++r)
        reps[r] = u.at(2 * r) * a + u.at(2 * r + 1) * std::conj(a);
    return HermVec::from_reps(n - 1, std::move(reps));
}

// Exact reduced 3-qubit objective: the supremum over the two remaining
// angles has the closed form 2(|v000 b + v001| + |v010 b + v011|), b on the
// circle.
double reduced3_value(const HermVec& v, double beta_angle) {
    const Complex b = std::polar(1.0, beta_angle);
    return 2.0 * (std::abs(v.at(0) * b + v.at(1)) + std::abs(v.at(2) * b + v.at(3)));
}

double reduced3_lipschitz(const HermVec& v) { return 2.0 * (std::abs(v.at(0)) + std::abs(v.at(2))); }

// Certified 1-D scan for n = 3.
struct Scan1D {
    double max_value;
    double padding;
};

Scan1D scan3(const HermVec& u, int grid) {
    double best = -std::numeric_limits<double>::infinity();
    const double h = kTwoPi / grid;
    for (int j = 0; j < grid; ++j) best = std::max(best, reduced3_value(u, j * h));
    return {best, reduced3_lipschitz(u) * 0.5 * h};
}

// Branch-and-bound over the reduced angles for 4 <= n <= 6: n - 3 outer
// angles plus the final circle parameter.
struct Cell {
    std::vector<double> center;
    double half;
    double value;
    double ub;
};

double reduced_eval(const HermVec& u, const std::vector<double>& point) {
    HermVec v = u;
    for (std::size_t j = 0; j + 1 < point.size(); ++j) v = reduce_last(v, point[j]);
    return reduced3_value(v, point.back());
}

Scan1D scan_multi(const HermVec& u, double seed_lower, double target_pad, long budget) {
    const int d = u.n() - 2;
    const double lip = u.l1();  // per-axis Lipschitz bound

    auto cmp = [](const Cell& a, const Cell& b) { return a.ub < b.ub; };
    std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> heap(cmp);

    double best = seed_lower;
    long evals = 0;
    const int m0 = std::max(4, static_cast<int>(std::floor(std::pow(budget / 8.0, 1.0 / d))));
    const double h0 = kTwoPi / m0;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (;;) {
        Cell cell;
        cell.center.resize(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            cell.center[static_cast<std::size_t>(k)] = (idx[static_cast<std::size_t>(k)] + 0.5) * h0;
        cell.half = 0.5 * h0;
        cell.value = reduced_eval(u, cell.center);
        ++evals;
        cell.ub = cell.value + lip * d * cell.half;
        best = std::max(best, cell.value);
        heap.push(std::move(cell));
        int k = 0;
        while (k < d && ++idx[static_cast<std::size_t>(k)] == m0) {
            idx[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == d) break;
    }

    while (!heap.empty() && evals < budget) {
        const Cell top = heap.top();
        if (top.ub - best <= target_pad) break;
        heap.pop();
        const double h = top.half * 0.5;
        const long children = 1l << d;
        for (long c = 0; c < children; ++c) {
            Cell child;
            child.center = top.center;
            for (int k = 0; k < d; ++k)
                child.center[static_cast<std::size_t>(k)] += (((c >> k) & 1l) ? h : -h);
            child.half = h;
            child.value = reduced_eval(u, child.center);
            ++evals;
            child.ub = child.value + lip * d * child.half;
            best = std::max(best, child.value);
            heap.push(std::move(child));
        }
    }
    const double ub = heap.empty() ? best : heap.top().ub;
    return {best, std::max(0.0, ub - best)};
}

}  // namespace

BoundInterval xnorm(const HermVec& u, const OptimConfig& cfg) {
    cfg.validate();
    const int n = u.n();
    const double l1 = u.l1();
    if (l1 == 0.0) return BoundInterval::exact(0.0);
    if (n <= 2) return BoundInterval::exact(l1);

    const auto ascent = detail::torus_ascent(u, cfg);
    double lower = ascent.value;
    BoundMethod lower_m = BoundMethod::FeasiblePoint;

    double grid_value = -std::numeric_limits<double>::infinity();
    double grid_pad = std::numeric_limits<double>::infinity();
    if (n == 3) {
        const auto scan = scan3(u, cfg.grid);
        grid_value = scan.max_value;
        grid_pad = scan.padding;
    } else if (n <= 6) {
        const double target = (n == 4 ? 1e-4 : 1e-2) * l1;
        const auto scan = scan_multi(u, lower, target, cfg.refine_budget);
        grid_value = scan.max_value;
        grid_pad = scan.padding;
    }

    double upper;
    BoundMethod upper_m;
    if (std::isfinite(grid_pad)) {
        lower = std::max(lower, grid_value);
        upper = grid_value + grid_pad;
        upper_m = BoundMethod::GridLipschitz;
    } else {
        upper = l1;
        upper_m = BoundMethod::Sandwich;
    }
    if (l1 < upper) {
        upper = l1;
        upper_m = BoundMethod::Sandwich;
    }
    if (2.0 * u.linf() > lower) {
        lower = 2.0 * u.linf();
        lower_m = BoundMethod::Sandwich;
    }
    lower = std::min(lower, upper);
    return BoundInterval(lower, upper, lower_m, upper_m);
}

// ---------------------------------------------------------------------------
// delta_cap: the dual diagonal functional
// ---------------------------------------------------------------------------

DeltaCapResult delta_cap(const DiagVec& a, const OptimConfig& cfg) {
    cfg.validate();
    if (!a.nonnegative()) throw ValidationError("delta_cap: negative diagonal entry");
    const int n = a.n();
    DeltaCapResult out;
    out.min_diag = a.min();
    out.min_pair = std::numeric_limits<double>::infinity();
    for (std::uint32_t r = 0; r < a.dim() / 2; ++r)
        out.min_pair = std::min(out.min_pair,
                                std::sqrt(std::max(0.0, a[r] * a[complement_rank(n, r)])));
    const auto& catalog = cached_catalog(n);
    out.tilde = tilde_delta(a, catalog);

    // Candidate witnesses from the multiset weight pattern
    // s = (1/l) (prod a)^{1/l} sum_{i in T} e_i / a_i, which has delta(s) = 1
    // when the geometric structure allows an exact balance.
    out.optimizer_upper = std::numeric_limits<double>::infinity();
    for (const auto& [order, fam] : catalog.by_order) {
        for (const auto& T : fam) {
            bool ok = true;
            double logsum = 0.0;
            for (std::uint32_t e : T.elems()) {
                if (a[e] <= 0.0) {
                    ok = false;
                    break;
                }
                logsum += std::log(a[e]);
            }
            if (!ok) continue;
            const double gm = std::exp(logsum / order);
            DiagVec s(n);
            for (std::uint32_t e : T.elems()) s[e] += gm / (order * a[e]);
            const double dl = delta(s, cfg).lower;
            if (dl <= 0.0) continue;
            const double cand = pair(a, s) / dl;
            if (cand < out.optimizer_upper) {
                out.optimizer_upper = cand;
                DiagVec sn(n);
                for (std::uint32_t r = 0; r < s.dim(); ++r) sn[r] = s[r] / dl;
                out.best_s = std::move(sn);
            }
        }
    }

    if (n <= 2 || (n == 3 && catalog.max_order >= 4)) {
        // Exact: the multiset bound coincides with the functional for n <= 3.
        out.bounds = BoundInterval::exact(out.tilde);
        return out;
    }

    double upper = std::min({out.tilde, out.min_pair, out.optimizer_upper});
    BoundMethod up_m = BoundMethod::ClosedForm;
    if (out.optimizer_upper < std::min(out.tilde, out.min_pair)) up_m = BoundMethod::FeasiblePoint;
    const double lower = std::min(out.min_diag, upper);
    out.bounds = BoundInterval(lower, upper, BoundMethod::Sandwich, up_m);
    return out;
}

// ---------------------------------------------------------------------------
// dual_norm
// ---------------------------------------------------------------------------

namespace {

double herm_dot(const HermVec& x, const HermVec& y) {
    // Euclidean inner product on the Hermitian-paired space.
    double v = 0.0;
    for (std::uint32_t r = 0; r < x.rep_dim(); ++r)
        v += (x.at(r) * std::conj(y.at(r))).real();
    return 2.0 * v;
}

// Lawson-Hanson nonnegative least squares on the Gram system.
Eigen::VectorXd nnls(const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs) {
    const Eigen::Index k = gram.rows();
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(k);
    std::vector<bool> passive(static_cast<std::size_t>(k), false);
    for (int outer = 0; outer < 4 * static_cast<int>(k) + 8; ++outer) {
        const Eigen::VectorXd grad = rhs - gram * lambda;
        Eigen::Index pick = -1;
        double best = 1e-12 * std::max(1.0, rhs.cwiseAbs().maxCoeff());
        for (Eigen::Index j = 0; j < k; ++j)
            if (!passive[static_cast<std::size_t>(j)] && grad(j) > best) {
                best = grad(j);
                pick = j;
            }
        if (pick < 0) break;
        passive[static_cast<std::size_t>(pick)] = true;
        for (int inner = 0; inner < 4 * static_cast<int>(k) + 8; ++inner) {
            std::vector<Eigen::Index> idx;
            for (Eigen::Index j = 0; j < k; ++j)
                if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
            Eigen::MatrixXd g(idx.size(), idx.size());
            Eigen::VectorXd b(idx.size());
            for (std::size_t p = 0; p < idx.size(); ++p) {
                b(static_cast<Eigen::Index>(p)) = rhs(idx[p]);
                for (std::size_t q = 0; q < idx.size(); ++q)
                    g(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
                        gram(idx[p], idx[q]);
            }
            Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(g);
            const Eigen::VectorXd sol = cod.solve(b);
            if (sol.minCoeff() > 0.0) {
                lambda.setZero();
                for (std::size_t p = 0; p < idx.size(); ++p) lambda(idx[p]) = sol(static_cast<Eigen::Index>(p));
                break;
            }
            // step toward sol until the first passive variable hits zero
            double alpha = 1.0;
            for (std::size_t p = 0; p < idx.size(); ++p) {
                const double lj = lambda(idx[p]);
                const double sj = sol(static_cast<Eigen::Index>(p));
                if (sj <= 0.0 && lj > sj) alpha = std::min(alpha, lj / (lj - sj));
            }
            for (std::size_t p = 0; p < idx.size(); ++p) {
                const double nj = lambda(idx[p]) + alpha * (sol(static_cast<Eigen::Index>(p)) - lambda(idx[p]));
                lambda(idx[p]) = nj;
                if (nj <= 1e-14) {
                    lambda(idx[p]) = 0.0;
                    passive[static_cast<std::size_t>(idx[p])] = false;
                }
            }
        }
    }
    return lambda;
}

HermVec unit_pair_direction(const HermVec& c) {
    // Feasible u with unit torus norm supporting the largest entry.
    std::uint32_t rmax = 0;
    double best = -1.0;
    for (std::uint32_t r = 0; r < c.rep_dim(); ++r)
        if (std::abs(c.at(r)) > best) {
            best = std::abs(c.at(r));
            rmax = r;
        }
    std::vector<Complex> reps(c.rep_dim(), Complex{0.0, 0.0});
    reps[rmax] = best > 0.0 ? 0.5 * std::conj(c.at(rmax)) / best : Complex{0.5, 0.0};
    return HermVec::from_reps(c.n(), std::move(reps));
}

}  // namespace

DualNormResult dual_norm(const HermVec& c, const OptimConfig& cfg) {
    return dual_norm(c, cfg, std::nullopt, std::nullopt);
}

DualNormResult dual_norm(const HermVec& c, const OptimConfig& cfg,
                         std::optional<double> stop_upper_below,
                         std::optional<double> stop_lower_above) {
    cfg.validate();
    const int n = c.n();
    const double linf = c.linf();
    const double l1 = c.l1();
    DualNormResult out;
    if (l1 == 0.0) {
        out.bounds = BoundInterval::exact(0.0);
        return out;
    }
    if (n <= 2) {
        out.bounds = BoundInterval::exact(linf);
        out.best_u = unit_pair_direction(c);
        out.best_u_xnorm_upper = 1.0;
        out.twist_lower = linf;
        return out;
    }

    double lower = linf;
    BoundMethod lower_m = BoundMethod::Sandwich;

    // Phase-twisted feasible directions u = alpha-tilde o e^{i phi}: the value
    // <u, c> is the twisted torus functional at the ascent maximizer, and the
    // certificate divides by a certified upper bound on xnorm(u).
    std::vector<PhaseVec> twists;
    {
        std::vector<double> reps(c.rep_dim());
        for (std::uint32_t r = 0; r < c.rep_dim(); ++r) {
            const Complex z = c.at(r);
            reps[r] = (z == Complex{0.0, 0.0}) ? 0.0 : -std::arg(z);
        }
        twists.push_back(PhaseVec::from_reps(n, std::move(reps)));
    }
    std::mt19937_64 rng(cfg.seed ^ 0xc2b2ae3d27d4eb4full);
    std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);
    const int extra = std::max(0, cfg.multistart / 4);
    for (int j = 0; j < extra; ++j) {
        std::vector<double> reps(c.rep_dim());
        for (double& x : reps) x = uni(rng);
        twists.push_back(PhaseVec::from_reps(n, std::move(reps)));
    }

    auto lower_done = [&]() { return stop_lower_above && lower > *stop_lower_above; };

    for (const auto& phi : twists) {
        const HermVec twisted = hadamard(c, phase_exp(phi));
        const auto asc = detail::torus_ascent(twisted, cfg);
        if (asc.value <= 0.0) continue;
        std::vector<Complex> alpha(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) alpha[static_cast<std::size_t>(k)] =
            std::polar(1.0, asc.angles[static_cast<std::size_t>(k)]);
        const HermVec u = hadamard(torus_vector(alpha), phase_exp(phi));
        const double ux = xnorm(u, cfg).upper;
        if (ux <= 0.0) continue;
        const double cand = pair(u, c) / ux;
        out.twist_lower = std::max(out.twist_lower, cand);
        if (cand > lower) {
            lower = cand;
            lower_m = BoundMethod::FeasiblePoint;
            out.best_u = u;
            out.best_u_xnorm_upper = ux;
        }
        if (lower_done()) break;
    }

    // Upper bound: greedy torus-atom decomposition c ~ sum lambda_j atom_j
    // with the remainder absorbed into the half-l1 bound.
    double upper = 0.5 * l1;
    BoundMethod upper_m = BoundMethod::Sandwich;
    if (cfg.mp_steps > 0) {
        std::vector<HermVec> atoms;
        Eigen::MatrixXd gram;
        Eigen::VectorXd rhs;
        HermVec res = c;
        OptimConfig mp_cfg = cfg;
        mp_cfg.multistart = std::max(2, cfg.multistart / 4);
        for (int step = 0; step < cfg.mp_steps; ++step) {
            if (stop_upper_below && upper < *stop_upper_below) break;
            if (0.5 * res.l1() <= 1e-13 * (1.0 + l1)) break;
            const auto asc = detail::torus_ascent(res, mp_cfg);
            if (asc.value <= 1e-13 * (1.0 + l1)) break;
            std::vector<Complex> gamma(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                gamma[static_cast<std::size_t>(k)] =
                    std::polar(1.0, -asc.angles[static_cast<std::size_t>(k)]);
            atoms.push_back(torus_vector(gamma));
            const auto k = static_cast<Eigen::Index>(atoms.size());
            gram.conservativeResize(k, k);
            rhs.conservativeResize(k);
            for (Eigen::Index j = 0; j < k; ++j) {
                const double g = herm_dot(atoms[static_cast<std::size_t>(j)], atoms.back());
                gram(j, k - 1) = g;
                gram(k - 1, j) = g;
            }
            rhs(k - 1) = herm_dot(atoms.back(), c);
            const Eigen::VectorXd lambda = nnls(gram, rhs);
            res = c;
            for (Eigen::Index j = 0; j < k; ++j) {
                if (lambda(j) == 0.0) continue;
                const HermVec scaled = atoms[static_cast<std::size_t>(j)] * lambda(j);
                std::vector<Complex> reps(res.rep_dim());
                for (std::uint32_t r = 0; r < res.rep_dim(); ++r)
                    reps[r] = res.at(r) - scaled.at(r);
                res = HermVec::from_reps(n, std::move(reps));
            }
            const double bound = lambda.sum() + 0.5 * res.l1();
            if (bound < upper) {
                upper = bound;
                upper_m = BoundMethod::FeasiblePoint;
            }
        }
    }

    lower = std::min(lower, upper);
    out.bounds = BoundInterval(lower, upper, lower_m, upper_m);
    return out;
}

}  // namespace xsep
