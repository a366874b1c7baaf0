#include "xsep/index.hpp"

#include <bit>
#include <cmath>

namespace xsep {

Index::Index(int n, std::uint32_t rank) : n_(n), rank_(rank) {
    if (n < 1 || n > kMaxQubits)
        throw ValidationError("index: qubit count must be in [1, " +
                              std::to_string(kMaxQubits) + "], got " + std::to_string(n));
    if (rank >= dim_of(n))
        throw ValidationError("index: rank " + std::to_string(rank) +
                              " out of range for n=" + std::to_string(n));
}

Index Index::from_string(const std::string& bits) {
    const int n = static_cast<int>(bits.size());
    if (n < 1 || n > kMaxQubits)
        throw ValidationError("index: bad bit-string length " + std::to_string(n));
    std::uint32_t rank = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1')
            throw ValidationError("index: bit string must contain only 0/1, got '" + bits + "'");
        rank = (rank << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    return Index(n, rank);
}

int Index::popcount() const { return std::popcount(rank_); }

Index Index::flip(std::span<const int> positions) const {
    std::uint32_t mask = 0;
    for (int k : positions) {
        if (k < 1 || k > n_)
            throw ValidationError("index: flip position " + std::to_string(k) + " out of [1, n]");
        mask |= std::uint32_t{1} << (n_ - k);
    }
    return Index(n_, rank_ ^ mask);
}

Index Index::flip(std::initializer_list<int> positions) const {
    return flip(std::span<const int>(positions.begin(), positions.size()));
}

Index Index::flip_all_but(std::span<const int> positions) const {
    std::uint32_t keep = 0;
    for (int k : positions) {
        if (k < 1 || k > n_)
            throw ValidationError("index: position " + std::to_string(k) + " out of [1, n]");
        keep |= std::uint32_t{1} << (n_ - k);
    }
    return Index(n_, rank_ ^ ((dim_of(n_) - 1) & ~keep));
}

std::string Index::str() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int k = 1; k <= n_; ++k)
        if (bit(k)) out[static_cast<std::size_t>(k - 1)] = '1';
    return out;
}

std::vector<int> sign_vector(const Index& i) {
    std::vector<int> s(static_cast<std::size_t>(i.n()));
    for (int k = 1; k <= i.n(); ++k) s[static_cast<std::size_t>(k - 1)] = i.bit(k) ? -1 : 1;
    return s;
}

std::complex<double> monomial(std::span<const std::complex<double>> z, const Index& i) {
    if (static_cast<int>(z.size()) != i.n())
        throw ValidationError("monomial: vector length does not match index size");
    std::complex<double> out{1.0, 0.0};
    for (int k = 1; k <= i.n(); ++k) {
        const auto& zk = z[static_cast<std::size_t>(k - 1)];
        if (zk == std::complex<double>{0.0, 0.0})
            throw ValidationError("monomial: zero component at position " + std::to_string(k));
        out = i.bit(k) ? out / zk : out * zk;
    }
    return out;
}

double monomial(std::span<const double> r, const Index& i) {
    if (static_cast<int>(r.size()) != i.n())
        throw ValidationError("monomial: vector length does not match index size");
    double out = 1.0;
    for (int k = 1; k <= i.n(); ++k) {
        const double rk = r[static_cast<std::size_t>(k - 1)];
        if (rk == 0.0)
            throw ValidationError("monomial: zero component at position " + std::to_string(k));
        out = i.bit(k) ? out / rk : out * rk;
    }
    return out;
}

}  // namespace xsep
