// Decision procedures: witness verification, X-state separability, the
// necessary criterion for general states, the exact half-rank test, the
// GHZ-diagonal reduction, corank-2 identity checks, and the boundary family
// of PPT-entangled states.
//
// Entangled verdicts always carry a certificate that re-verifies
// independently; bound comparisons that fail by less than the configured
// margin yield UNDECIDED rather than a verdict.

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "xsep/multisets.hpp"
#include "xsep/norms.hpp"
#include "xsep/xstate.hpp"

namespace xsep {

enum class Outcome { Separable, Entangled, PptEntangled, Undecided };

std::string to_string(Outcome o);

/// Witness pair W = X(s, u): block-positive with a negative pairing against
/// the state.
struct WitnessCertificate {
    DiagVec s;
    HermVec u;
    BoundInterval delta_s;
    BoundInterval xnorm_u;
    double pairing = 0.0;  // <a,s> + <c,u> < 0
};

/// Violated closed-form PPT condition.
struct NptCertificate {
    std::uint32_t diag_rank = 0;  // argmin sqrt(a_i a_complement)
    std::uint32_t anti_rank = 0;  // argmax |c_j|
    double geo_mean = 0.0;
    double anti_abs = 0.0;
};

/// Violated order-4 multiset product in the half-rank test.
struct MultisetCertificate {
    BalancedMultiset multiset;
    Complex anti_product{0.0, 0.0};
    double diag_product = 0.0;
};

/// Product vector (one 2-vector per qubit) whose X-part reproduces the state.
struct ProductVectorCertificate {
    std::vector<std::array<Complex, 2>> factors;
    double reconstruction_error = 0.0;
};

/// A necessary identity from a saturated index pair that fails.
struct IdentityCertificate {
    std::uint32_t i1 = 0, i2 = 0;
    BalancedMultiset multiset;
    std::uint32_t j1 = 0, j2 = 0;
    bool modulus_ok = false;
    bool phase_ok = false;
};

using Certificate = std::variant<std::monostate, WitnessCertificate, NptCertificate,
                                 MultisetCertificate, ProductVectorCertificate,
                                 IdentityCertificate>;

struct Verdict {
    Outcome outcome = Outcome::Undecided;
    std::string annotation;
    Certificate certificate;
    std::optional<BoundInterval> delta_cap_bounds;
    std::optional<BoundInterval> dual_norm_bounds;

    bool entangled_class() const {
        return outcome == Outcome::Entangled || outcome == Outcome::PptEntangled;
    }
};

enum class WitnessStatus { BlockPositive, NotBlockPositive, Undecided };

std::string to_string(WitnessStatus s);

struct WitnessCheck {
    WitnessStatus status = WitnessStatus::Undecided;
    BoundInterval delta_s;
    BoundInterval xnorm_u;
    /// Separation of the certified bounds; positive gaps decide.
    double gap = 0.0;
};

/// Block-positivity of X(s,u) via the certified enclosures of the diagonal
/// functional and the torus norm.
WitnessCheck check_witness(const DiagVec& s, const HermVec& u, const OptimConfig& cfg = {});

/// Full X-state decision.  NPT states are entangled with the violating index
/// pair; the criterion comparison decides separability (complete for n <= 3);
/// PPT entanglement requires a re-verified witness.
Verdict decide_xstate(const XState& x, const OptimConfig& cfg = {});

/// Necessary criterion for dense states: the decision runs on the X-part.
/// A separable X-part verdict becomes UNDECIDED with a "criterion_passed"
/// annotation, since the criterion is necessary-only beyond X-shaped states.
Verdict check_general(const DenseState& rho, const OptimConfig& cfg = {});

/// Exact separability test for normalized half-rank states
/// (a_i a_complement = |c_i|^2 = 1): separable iff every irreducible
/// order-4 multiset product of a and of c equals 1; on success emits the
/// product vector, otherwise the violated multiset.
Verdict half_rank_test(const XState& x, double precondition_tol = 1e-8);

/// Rescale a state with constant a_i a_complement = |c_i|^2 to the normalized
/// half-rank form (division by the common value).
XState normalize_half_rank(const XState& x, double tol = 1e-8);

/// GHZ-diagonal reduction: for a_i = a_complement, separable iff
/// min a_i >= dual norm of c.
Verdict ghz_diag_test(const XState& x, const OptimConfig& cfg = {});

struct Corank2Finding {
    std::uint32_t i1 = 0, i2 = 0;  // saturated pair
    BalancedMultiset multiset;
    std::uint32_t j1 = 0, j2 = 0;
    double mod_j1 = 0.0, mod_j2 = 0.0;
    double phase_gap = 0.0;  // distance of the phase sum difference to 2*pi*Z
    bool modulus_ok = false;
    bool phase_ok = false;
};

/// Necessary identities at index pairs where sqrt(a_i a_complement) = |c_i|
/// saturates the largest anti-diagonal modulus; any failed identity proves
/// entanglement.
std::vector<Corank2Finding> corank2_check(const XState& x, double tol = 1e-8);

struct BoundaryReport {
    int n = 0;
    BoundInterval dual_norm_c;
    double t0_lower = 0.0;  // 1 / dual-upper
    double t0_upper = 0.0;  // 1 / dual-lower
    bool ppt_at_one = false;
    bool npt_just_above_one = false;
    bool nontrivial_phase = false;
    double phase_difference_norm = 0.0;
    std::optional<double> witness_t;
    std::optional<WitnessCertificate> witness;
};

/// The family rho_t = 2^{-n} X(1, t c) for unit-modulus c: separable up to
/// t0 = 1/dual_norm(c), PPT up to 1.  With a nontrivial phase difference the
/// window (t0, 1] consists of PPT-entangled states and the report attempts a
/// certified witness inside it.
BoundaryReport boundary_family(const HermVec& c, const OptimConfig& cfg = {});

}  // namespace xsep
