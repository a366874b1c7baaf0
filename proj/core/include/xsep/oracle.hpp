// Brute-force verifiers, independent of the optimization paths they check:
// grid restrictions of the posynomial infimum and the torus supremum, random
// separable-state sampling, dense partial-transpose checks, and the nested
// one-variable route to the three-qubit posynomial infimum.

#pragma once

#include "xsep/xstate.hpp"

namespace xsep::oracle {

inline constexpr int kMaxEigQubits = 4;

/// Default knobs for the brute-force verifiers.
struct OracleConfig {
    double L = 6.0;      // log-radius for the posynomial grid
    int grid = 201;      // points per axis / angles per circle
    int samples = 1000;  // sample counts for statistical checks
    std::uint64_t seed = 1;

    void validate() const {
        if (L <= 0.0 || grid < 2 || samples < 1)
            throw ValidationError("oracle config: all knobs must be positive");
    }
};

/// Minimum of sum_i s_i r^i over the log-grid [-L, L]^n with m points per
/// axis.  Always an upper bound for the infimum.  Guard: m^n <= 1e8.
double grid_delta(const DiagVec& s, double L, int m);

/// Maximum of sum_i u_i alpha^i over the m^n angle grid; always a lower
/// bound for the supremum.  Guard: m^n <= 1e8.
double grid_xnorm(const HermVec& u, int m);

/// Nested route for n = 3: golden-section search on the one-variable form
/// 2 inf_r [sqrt((s000 r + s001/r)(s110 r + s111/r)) + sqrt(...)].
double delta3_nested(const DiagVec& s, double L = 12.0, int iters = 200);

/// Convex mixture of k Haar-random pure product states with Dirichlet
/// weights; separable by construction.
DenseState sample_separable(int n, int k, std::uint64_t seed);

/// Positivity of every partial transpose of a dense state, by eigenvalue
/// decomposition (n <= 4).
bool dense_ppt_check(const DenseState& rho, double tol = 1e-10);

/// Ground truth for two qubits: separable iff PPT, decided by the dense
/// partial transpose spectrum.
bool two_qubit_oracle(const XState& x, double tol = 1e-10);

}  // namespace xsep::oracle
