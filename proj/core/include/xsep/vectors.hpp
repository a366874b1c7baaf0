// The vector spaces carried by n-qubit X-data:
//   DiagVec  - real functions on the index set (nonnegative for diagonals),
//   HermVec  - complex functions u with u at the complement equal to the
//              conjugate; stored canonically as one value per conjugate pair
//              so the pairing invariant cannot be violated,
//   PhaseVec - real antisymmetric phase functions (theta at complement = -theta).
//
// Ranks below 2^{n-1} (leading bit 0) are the canonical representatives of
// the conjugate pairs.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "xsep/index.hpp"

namespace xsep {

using Complex = std::complex<double>;

class DiagVec {
public:
    explicit DiagVec(int n, double fill = 0.0);
    DiagVec(int n, std::vector<double> values);

    static DiagVec ones(int n) { return DiagVec(n, 1.0); }

    int n() const { return n_; }
    std::uint32_t dim() const { return dim_of(n_); }

    double operator[](std::uint32_t rank) const { return v_[rank]; }
    double& operator[](std::uint32_t rank) { return v_[rank]; }
    double at(const Index& i) const { return v_[i.rank()]; }

    std::span<const double> values() const { return v_; }

    bool nonnegative(double tol = 0.0) const;
    double min() const;
    double max() const;
    double sum() const;

private:
    int n_;
    std::vector<double> v_;
};

class HermVec {
public:
    explicit HermVec(int n);

    /// Build from a full length-2^n vector; the second half must match the
    /// conjugates of the first half within `tol`.
    static HermVec from_full(int n, std::span<const Complex> full, double tol = 1e-10);

    /// Build from the representative half (ranks with leading bit 0).
    static HermVec from_reps(int n, std::vector<Complex> reps);

    /// All entries equal to 1.
    static HermVec ones(int n);

    int n() const { return n_; }
    std::uint32_t dim() const { return dim_of(n_); }
    std::uint32_t rep_dim() const { return dim_of(n_) / 2; }

    /// Entry at any rank; entries in the upper half are derived conjugates.
    Complex at(std::uint32_t rank) const {
        return rank < rep_dim() ? rep_[rank] : std::conj(rep_[complement_rank(n_, rank)]);
    }
    Complex at(const Index& i) const { return at(i.rank()); }

    std::span<const Complex> reps() const { return rep_; }
    Complex& rep(std::uint32_t rep_rank) { return rep_[rep_rank]; }

    std::vector<Complex> full() const;

    /// sum_i |u_i| over all 2^n entries.
    double l1() const;
    /// max_i |u_i|.
    double linf() const;

    HermVec operator*(double scale) const;
    HermVec operator-() const { return *this * -1.0; }

private:
    int n_;
    std::vector<Complex> rep_;  // size 2^{n-1}
};

class PhaseVec {
public:
    explicit PhaseVec(int n);

    static PhaseVec from_full(int n, std::span<const double> full, double tol = 1e-10);
    static PhaseVec from_reps(int n, std::vector<double> reps);

    int n() const { return n_; }
    std::uint32_t dim() const { return dim_of(n_); }
    std::uint32_t rep_dim() const { return dim_of(n_) / 2; }

    double at(std::uint32_t rank) const {
        return rank < rep_dim() ? rep_[rank] : -rep_[complement_rank(n_, rank)];
    }
    double at(const Index& i) const { return at(i.rank()); }

    std::span<const double> reps() const { return rep_; }
    double& rep(std::uint32_t rep_rank) { return rep_[rep_rank]; }

    std::vector<double> full() const;

private:
    int n_;
    std::vector<double> rep_;
};

/// Bilinear pairing <s, a> = sum_i s_i a_i.
double pair(const DiagVec& s, const DiagVec& a);

/// Bilinear pairing <u, c> = sum_i u_i c_i; real because conjugate pairs sum
/// to twice a real part.
double pair(const HermVec& u, const HermVec& c);

/// Entrywise product (a o b)_i = a_i b_i; closed on HermVec.
HermVec hadamard(const HermVec& a, const HermVec& b);

/// e^{i phi} as a unit-modulus element of the Hermitian-paired space.
HermVec phase_exp(const PhaseVec& phi);

/// Principal-branch phases of the representatives; throws naming the first
/// zero entry.
PhaseVec phase_part(const HermVec& c);

/// Entrywise moduli.
DiagVec modulus(const HermVec& c);

/// alpha-tilde: the vector with entries alpha^i for alpha on the n-torus.
HermVec torus_vector(std::span<const Complex> alpha);

/// r-tilde: the vector with entries r^i for positive r.
DiagVec power_vector(std::span<const double> r);

}  // namespace xsep
