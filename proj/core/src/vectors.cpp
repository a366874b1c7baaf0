#include "xsep/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace xsep {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxQubits)
        throw ValidationError("vector: qubit count must be in [1, " +
                              std::to_string(kMaxQubits) + "], got " + std::to_string(n));
}

}  // namespace

DiagVec::DiagVec(int n, double fill) : n_(n) {
    check_n(n);
    v_.assign(dim_of(n), fill);
}

DiagVec::DiagVec(int n, std::vector<double> values) : n_(n), v_(std::move(values)) {
    check_n(n);
    if (v_.size() != dim_of(n))
        throw ValidationError("diag vector: expected " + std::to_string(dim_of(n)) +
                              " entries, got " + std::to_string(v_.size()));
}

bool DiagVec::nonnegative(double tol) const {
    return std::all_of(v_.begin(), v_.end(), [tol](double x) { return x >= -tol; });
}

double DiagVec::min() const { return *std::min_element(v_.begin(), v_.end()); }
double DiagVec::max() const { return *std::max_element(v_.begin(), v_.end()); }
double DiagVec::sum() const { return std::accumulate(v_.begin(), v_.end(), 0.0); }

HermVec::HermVec(int n) : n_(n) {
    check_n(n);
    rep_.assign(dim_of(n) / 2, Complex{0.0, 0.0});
}

HermVec HermVec::from_full(int n, std::span<const Complex> full, double tol) {
    check_n(n);
    if (full.size() != dim_of(n))
        throw ValidationError("hermitian vector: expected " + std::to_string(dim_of(n)) +
                              " entries, got " + std::to_string(full.size()));
    const std::uint32_t half = dim_of(n) / 2;
    std::vector<Complex> reps(full.begin(), full.begin() + half);
    for (std::uint32_t r = 0; r < half; ++r) {
        const Complex mate = full[complement_rank(n, r)];
        if (std::abs(mate - std::conj(reps[r])) > tol)
            throw ValidationError("hermitian vector: entry at " + Index(n, complement_rank(n, r)).str() +
                                  " is not the conjugate of the entry at " + Index(n, r).str());
    }
    return from_reps(n, std::move(reps));
}

HermVec HermVec::from_reps(int n, std::vector<Complex> reps) {
    check_n(n);
    if (reps.size() != dim_of(n) / 2)
        throw ValidationError("hermitian vector: expected " + std::to_string(dim_of(n) / 2) +
                              " representatives, got " + std::to_string(reps.size()));
    HermVec u(n);
    u.rep_ = std::move(reps);
    return u;
}

HermVec HermVec::ones(int n) {
    HermVec u(n);
    std::fill(u.rep_.begin(), u.rep_.end(), Complex{1.0, 0.0});
    return u;
}

std::vector<Complex> HermVec::full() const {
    std::vector<Complex> out(dim());
    for (std::uint32_t r = 0; r < dim(); ++r) out[r] = at(r);
    return out;
}

double HermVec::l1() const {
    double s = 0.0;
    for (const auto& z : rep_) s += std::abs(z);
    return 2.0 * s;
}

double HermVec::linf() const {
    double m = 0.0;
    for (const auto& z : rep_) m = std::max(m, std::abs(z));
    return m;
}

HermVec HermVec::operator*(double scale) const {
    HermVec out(n_);
    for (std::uint32_t r = 0; r < rep_dim(); ++r) out.rep_[r] = rep_[r] * scale;
    return out;
}

PhaseVec::PhaseVec(int n) : n_(n) {
    check_n(n);
    rep_.assign(dim_of(n) / 2, 0.0);
}

PhaseVec PhaseVec::from_full(int n, std::span<const double> full, double tol) {
    check_n(n);
    if (full.size() != dim_of(n))
        throw ValidationError("phase vector: expected " + std::to_string(dim_of(n)) +
                              " entries, got " + std::to_string(full.size()));
    const std::uint32_t half = dim_of(n) / 2;
    std::vector<double> reps(full.begin(), full.begin() + half);
    for (std::uint32_t r = 0; r < half; ++r) {
        if (std::abs(full[complement_rank(n, r)] + reps[r]) > tol)
            throw ValidationError("phase vector: entry at " + Index(n, complement_rank(n, r)).str() +
                                  " is not the negative of the entry at " + Index(n, r).str());
    }
    return from_reps(n, std::move(reps));
}

PhaseVec PhaseVec::from_reps(int n, std::vector<double> reps) {
    check_n(n);
    if (reps.size() != dim_of(n) / 2)
        throw ValidationError("phase vector: expected " + std::to_string(dim_of(n) / 2) +
                              " representatives, got " + std::to_string(reps.size()));
    PhaseVec p(n);
    p.rep_ = std::move(reps);
    return p;
}

std::vector<double> PhaseVec::full() const {
    std::vector<double> out(dim());
    for (std::uint32_t r = 0; r < dim(); ++r) out[r] = at(r);
    return out;
}

double pair(const DiagVec& s, const DiagVec& a) {
    if (s.n() != a.n()) throw ValidationError("pairing: qubit counts differ");
    double out = 0.0;
    for (std::uint32_t r = 0; r < s.dim(); ++r) out += s[r] * a[r];
    return out;
}

double pair(const HermVec& u, const HermVec& c) {
    if (u.n() != c.n()) throw ValidationError("pairing: qubit counts differ");
    Complex half{0.0, 0.0};
    for (std::uint32_t r = 0; r < u.rep_dim(); ++r) half += u.at(r) * c.at(r);
    return 2.0 * half.real();
}

HermVec hadamard(const HermVec& a, const HermVec& b) {
    if (a.n() != b.n()) throw ValidationError("hadamard: qubit counts differ");
    std::vector<Complex> reps(a.rep_dim());
    for (std::uint32_t r = 0; r < a.rep_dim(); ++r) reps[r] = a.at(r) * b.at(r);
    return HermVec::from_reps(a.n(), std::move(reps));
}

HermVec phase_exp(const PhaseVec& phi) {
    std::vector<Complex> reps(phi.rep_dim());
    for (std::uint32_t r = 0; r < phi.rep_dim(); ++r)
        reps[r] = std::polar(1.0, phi.at(r));
    return HermVec::from_reps(phi.n(), std::move(reps));
}

PhaseVec phase_part(const HermVec& c) {
    std::vector<double> reps(c.rep_dim());
    for (std::uint32_t r = 0; r < c.rep_dim(); ++r) {
        const Complex z = c.at(r);
        if (z == Complex{0.0, 0.0})
            throw ValidationError("phase part: zero entry at index " + Index(c.n(), r).str());
        reps[r] = std::arg(z);
    }
    return PhaseVec::from_reps(c.n(), std::move(reps));
}

DiagVec modulus(const HermVec& c) {
    DiagVec out(c.n());
    for (std::uint32_t r = 0; r < c.dim(); ++r) out[r] = std::abs(c.at(r));
    return out;
}

HermVec torus_vector(std::span<const Complex> alpha) {
    const int n = static_cast<int>(alpha.size());
    HermVec u(n);
    for (std::uint32_t r = 0; r < u.rep_dim(); ++r)
        u.rep(r) = monomial(alpha, Index(n, r));
    return u;
}

DiagVec power_vector(std::span<const double> r) {
    const int n = static_cast<int>(r.size());
    DiagVec a(n);
    for (std::uint32_t i = 0; i < a.dim(); ++i) a[i] = monomial(r, Index(n, i));
    return a;
}

}  // namespace xsep
