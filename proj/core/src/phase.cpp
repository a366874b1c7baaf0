#include "xsep/phase.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

namespace xsep {

Eigen::MatrixXd ThetaMap::matrix() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(dim_of(n_)), n_);
    for (std::uint32_t r = 0; r < dim_of(n_); ++r)
        for (int k = 1; k <= n_; ++k) m(r, k - 1) = sign(r, k);
    return m;
}

PhaseVec ThetaMap::apply(const Eigen::VectorXd& t) const {
    if (t.size() != n_) throw ValidationError("theta map: argument must have n entries");
    std::vector<double> reps(dim_of(n_) / 2);
    for (std::uint32_t r = 0; r < dim_of(n_) / 2; ++r) {
        double v = 0.0;
        for (int k = 1; k <= n_; ++k) v += sign(r, k) * t(k - 1);
        reps[r] = v;
    }
    return PhaseVec::from_reps(n_, std::move(reps));
}

int ThetaMap::rank(double tol) const {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix());
    const auto& sv = svd.singularValues();
    int r = 0;
    for (Eigen::Index j = 0; j < sv.size(); ++j)
        if (sv(j) > tol * sv(0)) ++r;
    return r;
}

PhaseVec xi_vector(const BalancedMultiset& T) {
    const int n = T.n();
    std::vector<double> reps(dim_of(n) / 2, 0.0);
    for (std::uint32_t e : T.elems()) {
        if (e < dim_of(n) / 2)
            reps[e] += 0.5;
        else
            reps[complement_rank(n, e)] -= 0.5;
    }
    return PhaseVec::from_reps(n, std::move(reps));
}

double identity_sum(const PhaseVec& theta, const BalancedMultiset& T) {
    double s = 0.0;
    for (std::uint32_t e : T.elems()) s += theta.at(e);
    return s;
}

std::vector<std::uint32_t> non_elementary_indices(int n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t r = 1; r < dim_of(n) / 2; ++r)
        if (std::popcount(r) >= 2) out.push_back(r);
    return out;
}

std::vector<BalancedMultiset> basic_family(int n) {
    std::vector<BalancedMultiset> fam;
    if (n < 3) return fam;
    for (std::uint32_t r : non_elementary_indices(n)) {
        const std::uint32_t lowest = r & (~r + 1);  // single 1 at the largest position
        const std::uint32_t rest = r - lowest;
        fam.emplace_back(n, std::vector<std::uint32_t>{0u, r, complement_rank(n, lowest),
                                                       complement_rank(n, rest)});
    }
    return fam;
}

PhaseBasis::PhaseBasis(int n) : n_(n), family_(basic_family(n)) {
    const auto d = static_cast<Eigen::Index>(dim_of(n));
    Eigen::MatrixXd xi(d, static_cast<Eigen::Index>(family_.size()));
    for (std::size_t j = 0; j < family_.size(); ++j) {
        const auto v = xi_vector(family_[j]).full();
        for (Eigen::Index r = 0; r < d; ++r) xi(r, static_cast<Eigen::Index>(j)) = v[static_cast<std::size_t>(r)];
    }
    if (family_.empty()) {
        q_ = Eigen::MatrixXd(d, 0);
        sums_to_coeffs_ = Eigen::MatrixXd(0, 0);
        return;
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(xi);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, xi.cols());
    // Fix column signs so the basis is reproducible: make the projection of
    // each xi_T onto its own orthonormal column positive.
    for (Eigen::Index j = 0; j < q.cols(); ++j)
        if (xi.col(j).dot(q.col(j)) < 0.0) q.col(j) = -q.col(j);
    q_ = std::move(q);
    // <w, xi_j> with w = Q y gives the sums, so y = (Xi^T Q)^{-1} s.
    sums_to_coeffs_ = (xi.transpose() * q_).partialPivLu().inverse();
}

const PhaseBasis& PhaseBasis::get(int n) {
    if (n < 1 || n > kMaxQubits) throw ValidationError("phase basis: bad qubit count");
    static std::array<std::unique_ptr<PhaseBasis>, kMaxQubits + 1> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) slot.reset(new PhaseBasis(n));
    return *slot;
}

double mod_two_pi_distance(double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double r = std::remainder(x, two_pi);
    return std::abs(r);
}

bool satisfies_phase_identities(const PhaseVec& theta, bool mod2pi, double tol) {
    for (const auto& T : PhaseBasis::get(theta.n()).family()) {
        const double s = identity_sum(theta, T);
        const double err = mod2pi ? mod_two_pi_distance(s) : std::abs(s);
        if (err > tol) return false;
    }
    return true;
}

bool satisfies_phase_identities(const HermVec& c, bool mod2pi, double tol) {
    return satisfies_phase_identities(phase_part(c), mod2pi, tol);
}

PhaseDifference phase_difference(const PhaseVec& theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const auto& basis = PhaseBasis::get(theta.n());
    const auto& family = basis.family();
    Eigen::VectorXd sums(static_cast<Eigen::Index>(family.size()));
    for (std::size_t j = 0; j < family.size(); ++j)
        sums(static_cast<Eigen::Index>(j)) = std::remainder(identity_sum(theta, family[j]), two_pi);
    PhaseDifference pd;
    pd.n = theta.n();
    pd.coeffs = basis.sums_to_coeffs() * sums;
    return pd;
}

PhaseDifference phase_difference(const HermVec& c) { return phase_difference(phase_part(c)); }

}  // namespace xsep
