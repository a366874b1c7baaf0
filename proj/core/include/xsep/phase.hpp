// The sign map Theta_n from angle space into phase space, the balanced
// multisets' xi vectors spanning its orthogonal complement, phase identities,
// and the phase difference (the complement component of a phase part).
//
// Phases are taken on the principal branch (-pi, pi].  Identity sums can be
// tested exactly or modulo 2*pi; the mod-2*pi mode is the right one for
// phases extracted from complex data, because the principal branch only
// determines the phase part up to 2*pi jumps.

#pragma once

#include <Eigen/Dense>

#include "xsep/multisets.hpp"
#include "xsep/vectors.hpp"

namespace xsep {

/// Theta_n: R^n -> phase space; column k is +1 where the index holds 0 at
/// position k and -1 where it holds 1.
class ThetaMap {
public:
    explicit ThetaMap(int n) : n_(n) {}

    int n() const { return n_; }

    /// Sign of entry (rank, k): +1 or -1.
    double sign(std::uint32_t rank, int k) const {
        return ((rank >> (n_ - k)) & 1u) ? -1.0 : 1.0;
    }

    /// Dense 2^n x n sign matrix.
    Eigen::MatrixXd matrix() const;

    /// Theta_n(t); lands in the antisymmetric phase space.
    PhaseVec apply(const Eigen::VectorXd& t) const;

    /// Numerical rank of the sign matrix (equals n).
    int rank(double tol = 1e-9) const;

private:
    int n_;
};

/// xi_T = (1/2) sum_{i in T} (e_i - e_{complement}); orthogonal to the image
/// of Theta_n exactly when T is balanced.
PhaseVec xi_vector(const BalancedMultiset& T);

/// <theta, xi_T> = sum_{i in T} theta_i.
double identity_sum(const PhaseVec& theta, const BalancedMultiset& T);

/// Indices beginning with 0 whose bit pattern has at least two ones; there
/// are 2^{n-1} - n of them.
std::vector<std::uint32_t> non_elementary_indices(int n);

/// One order-4 irreducible multiset per non-elementary index:
/// {0, i, complement(lowest set bit of i), complement(i minus that bit)}.
/// The xi vectors of this family form a basis of the complement of
/// image(Theta_n) in phase space.  Empty for n < 3.
std::vector<BalancedMultiset> basic_family(int n);

/// Cached basic family plus an orthonormalized xi basis of the complement.
class PhaseBasis {
public:
    static const PhaseBasis& get(int n);

    int n() const { return n_; }
    const std::vector<BalancedMultiset>& family() const { return family_; }
    /// 2^n x lambda(n) matrix with orthonormal columns spanning the
    /// complement of image(Theta_n) in phase space.
    const Eigen::MatrixXd& orthonormal() const { return q_; }
    /// Maps the vector of basic identity sums to coordinates in the
    /// orthonormal basis; for wrap-free phases this reproduces the plain
    /// orthogonal projection.
    const Eigen::MatrixXd& sums_to_coeffs() const { return sums_to_coeffs_; }
    int complement_dim() const { return static_cast<int>(q_.cols()); }

private:
    explicit PhaseBasis(int n);
    int n_;
    std::vector<BalancedMultiset> family_;
    Eigen::MatrixXd q_;
    Eigen::MatrixXd sums_to_coeffs_;
};

/// True when every basic-family sum vanishes: |sum| <= tol in exact mode, or
/// distance of the sum to 2*pi*Z <= tol in mod-2pi mode.  In exact mode this
/// is equivalent to membership in image(Theta_n).
bool satisfies_phase_identities(const PhaseVec& theta, bool mod2pi = false, double tol = 1e-8);

/// Identity check for the principal-branch phases of complex data; mod-2pi
/// by default because the branch only determines phases up to 2*pi jumps.
bool satisfies_phase_identities(const HermVec& c, bool mod2pi = true, double tol = 1e-8);

/// Component of a phase vector orthogonal to image(Theta_n), in coordinates
/// of the orthonormalized xi basis.  Computed from the basic identity sums
/// reduced to (-pi, pi], so the value is well defined on cosets modulo the
/// image and modulo whole 2*pi jumps of individual phases; torus vectors get
/// an exactly zero difference.  For wrap-free phase data this coincides with
/// the plain orthogonal projection.
struct PhaseDifference {
    int n = 0;
    Eigen::VectorXd coeffs;  // lambda(n) entries
    double norm() const { return coeffs.size() ? coeffs.norm() : 0.0; }
    bool trivial(double tol = 1e-8) const { return norm() <= tol; }
};

PhaseDifference phase_difference(const PhaseVec& theta);

/// Phase difference of the principal-branch phase part; throws naming the
/// offending index when some entry vanishes.
PhaseDifference phase_difference(const HermVec& c);

/// Distance of x to the lattice 2*pi*Z.
double mod_two_pi_distance(double x);

}  // namespace xsep
