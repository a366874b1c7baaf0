// The X(a,c) matrix model: diagonal entries a_i at (i,i), anti-diagonal
// entries c_i at (i, complement of i).  Positivity and the closed-form PPT
// check, X-part extraction from dense matrices, and the GHZ-diagonal
// construction.

#pragma once

#include <Eigen/Dense>

#include "xsep/vectors.hpp"

namespace xsep {

inline constexpr int kMaxDenseQubits = 8;

struct XState {
    XState(DiagVec diag, HermVec anti);

    int n() const { return a.n(); }

    DiagVec a;
    HermVec c;
};

/// Dense Hermitian 2^n x 2^n container, the input for X-part extraction.
class DenseState {
public:
    DenseState(int n, Eigen::MatrixXcd m, double herm_tol = 1e-10);

    int n() const { return n_; }
    const Eigen::MatrixXcd& matrix() const { return m_; }

    double trace_error() const;  // |tr - 1|
    /// Smallest eigenvalue (Hermitian part).
    double min_eigenvalue() const;

private:
    int n_;
    Eigen::MatrixXcd m_;
};

/// Zero all entries off the diagonal and anti-diagonal: a_i = rho[i,i],
/// c_i = rho[i, complement(i)].
XState xpart(const DenseState& rho);

/// Every 2x2 pair block is positive semidefinite: a >= 0 and
/// a_i a_{complement} >= |c_i|^2 for all i.
bool is_positive(const XState& x, double tol = 0.0);

/// Closed-form PPT condition for X-states:
/// min_i sqrt(a_i a_{complement}) >= max_j |c_j|.
bool is_ppt(const XState& x, double tol = 0.0);

/// The index pair realizing the worst PPT margin:
/// first = argmin sqrt(a_i a_ibar), second = argmax |c_j|, together with the
/// margin sqrt(a a_bar) - |c|.  Negative margin means NPT.
struct PptMargin {
    std::uint32_t diag_rank;
    std::uint32_t anti_rank;
    double geo_mean;
    double anti_abs;
    double margin() const { return geo_mean - anti_abs; }
};
PptMargin ppt_margin(const XState& x);

/// State diagonal in the GHZ basis |xi_i> = (|i> + (-1)^{i_1}|complement>)/sqrt(2),
/// with probability p_i on |xi_i>.
XState ghz_diagonal(int n, std::span<const double> p, double tol = 1e-10);

/// Dense 2^n x 2^n assembly of an X-state (n <= 8).
DenseState assemble(const XState& x);

/// Dense projector onto the GHZ basis vector |xi_i> (n <= 8), for oracles.
Eigen::VectorXcd ghz_basis_vector(const Index& i);

}  // namespace xsep
