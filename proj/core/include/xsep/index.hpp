// Bit-index arithmetic for n-qubit labels: flips, complements, monomials,
// lexicographic rank.  Position 1 is the most significant bit, so the
// lexicographic order of bit strings coincides with the integer order of
// ranks.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xsep/errors.hpp"

namespace xsep {

inline constexpr int kMaxQubits = 16;

/// Number of basis labels for n qubits.
inline std::uint32_t dim_of(int n) { return std::uint32_t{1} << n; }

/// An n-bit index i: [n] -> {0,1}, stored as its rank sum_k i(k) 2^{n-k}.
class Index {
public:
    Index(int n, std::uint32_t rank);

    /// Parse from a 0/1 string, e.g. "010".
    static Index from_string(const std::string& bits);

    int n() const { return n_; }
    std::uint32_t rank() const { return rank_; }

    /// Bit at position k, 1-based, position 1 = most significant.
    int bit(int k) const { return static_cast<int>((rank_ >> (n_ - k)) & 1u); }

    int popcount() const;

    /// Switch the digits at the given 1-based positions.
    Index flip(std::span<const int> positions) const;
    Index flip(std::initializer_list<int> positions) const;

    /// Switch every digit (the bar operation on the full position set).
    Index complement() const { return Index(n_, rank_ ^ (dim_of(n_) - 1)); }

    /// Complement on all positions except the ones listed.
    Index flip_all_but(std::span<const int> positions) const;

    std::string str() const;

    friend bool operator==(const Index& a, const Index& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_;
    }
    friend auto operator<=>(const Index& a, const Index& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        return a.rank_ <=> b.rank_;
    }

private:
    int n_;
    std::uint32_t rank_;
};

/// Rank of the complement without constructing an Index.
inline std::uint32_t complement_rank(int n, std::uint32_t rank) {
    return rank ^ (dim_of(n) - 1);
}

/// The sign vector of an index: +1 at positions holding 0, -1 at positions
/// holding 1.  These are the exponents of the monomial z^i.
std::vector<int> sign_vector(const Index& i);

/// z^i = prod_k z_k^{1-2 i(k)} for nonzero complex z.
std::complex<double> monomial(std::span<const std::complex<double>> z, const Index& i);

/// Real positive specialization r^i.
double monomial(std::span<const double> r, const Index& i);

}  // namespace xsep
