// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "xsep/io.hpp"
#include "xsep/multisets.hpp"
#include "xsep/norms.hpp"
#include "xsep/oracle.hpp"
#include "xsep/phase.hpp"
#include "xsep/separability.hpp"

using namespace xsep;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

OptimConfig acceptance_cfg() {
    OptimConfig cfg;
    cfg.multistart = 6;
    cfg.max_iter = 150;
    cfg.grid = 60000;
    cfg.mp_steps = 24;
    cfg.refine_budget = 150000;
    cfg.seed = 97;
    return cfg;
}

DiagVec random_positive(int n, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> uni(lo, hi);
    DiagVec s(n);
    for (std::uint32_t r = 0; r < s.dim(); ++r) s[r] = uni(rng);
    return s;
}

HermVec random_herm(int n, std::mt19937_64& rng, double lo = 0.1, double hi = 2.0) {
    std::uniform_real_distribution<double> mod(lo, hi);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    std::vector<Complex> reps(dim_of(n) / 2);
    for (auto& z : reps) z = std::polar(mod(rng), ang(rng));
    return HermVec::from_reps(n, std::move(reps));
}

XState random_x_state(int n, std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    DiagVec a(n);
    double sum = 0.0;
    for (std::uint32_t r = 0; r < a.dim(); ++r) sum += (a[r] = expo(rng));
    for (std::uint32_t r = 0; r < a.dim(); ++r) a[r] /= sum;
    std::vector<Complex> reps(a.dim() / 2);
    for (std::uint32_t r = 0; r < reps.size(); ++r) {
        const double cap = std::sqrt(a[r] * a[complement_rank(n, r)]);
        reps[r] = std::polar(cap * uni(rng), ang(rng));
    }
    return XState(std::move(a), HermVec::from_reps(n, std::move(reps)));
}

void reverify_witness(const WitnessCertificate& cert, const XState& x, const OptimConfig& cfg) {
    const auto cw = check_witness(cert.s, cert.u, cfg);
    require(cw.status == WitnessStatus::BlockPositive, "witness fails block-positivity recheck");
    require(pair(x.a, cert.s) + pair(x.c, cert.u) < 0.0, "witness pairing is not negative");
}

// --- criterion bodies --------------------------------------------------

void criterion1() {
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> uni(0.05, 5.0);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 200; ++trial) {
        const DiagVec s1(1, {uni(rng), uni(rng)});
        require(std::abs(delta(s1).upper - 2.0 * std::sqrt(s1[0] * s1[1])) <= 1e-9,
                "delta_1 closed form");
        const DiagVec s2(2, {uni(rng), uni(rng), uni(rng), uni(rng)});
        const double d2 = 2.0 * (std::sqrt(s2[0] * s2[3]) + std::sqrt(s2[1] * s2[2]));
        require(std::abs(delta(s2).upper - d2) <= 1e-9, "delta_2 closed form");

        const auto u1 = HermVec::from_reps(1, {std::polar(uni(rng), ang(rng))});
        require(std::abs(xnorm(u1).upper - u1.l1()) <= 1e-9, "xnorm_1 = l1");
        const auto u2 =
            HermVec::from_reps(2, {std::polar(uni(rng), ang(rng)), std::polar(uni(rng), ang(rng))});
        require(std::abs(xnorm(u2).upper - u2.l1()) <= 1e-9, "xnorm_2 = l1");
        require(std::abs(xnorm(u2).lower - u2.l1()) <= 1e-9, "xnorm_2 lower = l1");
    }
}

void criterion2() {
    const auto c3 = enumerate_irreducible(3, 4);
    require(c3.count(2) == 4 && c3.count(4) == 2, "three-qubit counts 4 / 2");
    const auto c4 = enumerate_irreducible(4, 8);
    require(c4.count(4) == 24 && c4.count(6) == 16 && c4.count(8) == 0,
            "four-qubit counts 24 / 16 / 0");
    require(recursive_t4(5).size() == 200, "recursive count 200 at five qubits");
    require(recursive_t4(6).size() == 1440, "recursive count 1440 at six qubits");
    for (int n = 4; n <= 5; ++n) {
        const auto rec = recursive_t4(n);
        const auto direct = enumerate_irreducible(n, 4).family(4);
        require(rec == direct, "recursive family equals direct enumeration");
    }
}

void criterion3() {
    for (int n = 1; n <= 8; ++n) {
        require(ThetaMap(n).rank() == n, "sign map rank");
        const auto& basis = PhaseBasis::get(n);
        require(basis.complement_dim() == static_cast<int>(dim_of(n) / 2) - n,
                "complement dimension 2^{n-1} - n");
        if (basis.complement_dim() > 0) {
            const auto& q = basis.orthonormal();
            require((q.transpose() * ThetaMap(n).matrix()).cwiseAbs().maxCoeff() < 1e-10,
                    "xi basis orthogonal to the sign map image");
        }
    }
    require(basic_family(3).size() == 1 && basic_family(4).size() == 4 &&
                basic_family(5).size() == 11,
            "basic family sizes 1 / 4 / 11");
    const auto f4 = basic_family(4);
    const std::vector<BalancedMultiset> expected{
        BalancedMultiset(4, {0b0000, 0b0011, 0b1101, 0b1110}),
        BalancedMultiset(4, {0b0000, 0b0101, 0b1011, 0b1110}),
        BalancedMultiset(4, {0b0000, 0b0110, 0b1011, 0b1101}),
        BalancedMultiset(4, {0b0000, 0b0111, 0b1001, 0b1110}),
    };
    for (const auto& t : expected)
        require(std::find(f4.begin(), f4.end(), t) != f4.end(),
                "four-qubit identity " + t.str() + " present");
}

void criterion4(const OptimConfig& cfg) {
    std::mt19937_64 rng(1004);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_positive(3, rng, 0.05, 5.0);
        const auto r = delta_cap(a, cfg);
        require(std::abs(r.optimizer_upper - r.tilde) <= 1e-4,
                "optimization endpoint within 1e-4 of the multiset bound");
        require(r.optimizer_upper >= r.tilde - 1e-9, "optimization endpoint never dips below");
        require(r.bounds.lower >= a.min() - 1e-12, "lower endpoint at least min a_i");
    }
}

void criterion5(const OptimConfig& cfg) {
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_real_distribution<double> mod(0.3, 1.7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + trial % 2;
        const auto u = random_herm(n, rng);
        const auto b = xnorm(u, cfg);
        require(2.0 * u.linf() <= b.lower + 1e-12, "sandwich lower");
        require(b.lower <= b.upper + 1e-12, "interval order");
        require(b.upper <= u.l1() + 1e-12, "sandwich upper");
    }
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + trial % 2;
        Eigen::VectorXd t(n);
        for (int k = 0; k < n; ++k) t(k) = uni(rng);
        const auto phases = ThetaMap(n).apply(t);
        std::vector<Complex> reps(dim_of(n) / 2);
        for (std::uint32_t r = 0; r < reps.size(); ++r)
            reps[r] = std::polar(mod(rng), phases.at(r));
        const auto u = HermVec::from_reps(n, std::move(reps));
        require(xnorm(u, cfg).upper - u.l1() <= 1e-6, "trivial phase difference attains l1");
    }
    // unit-modulus anti-diagonals with a phase-difference coefficient >= 1
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> reps(4);
        for (auto& x : reps) x = 0.2 * uni(rng);
        const double lift = 1.3;  // coefficient along the orthonormal xi direction
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        reps[0] += lift * 0.5 * inv_sqrt2 * 2.0;
        reps[1] -= lift * 0.5 * inv_sqrt2 * 2.0;
        reps[2] -= lift * 0.5 * inv_sqrt2 * 2.0;
        reps[3] += lift * 0.5 * inv_sqrt2 * 2.0;
        const auto c = phase_exp(PhaseVec::from_reps(3, std::move(reps)));
        const auto pd = phase_difference(c);
        require(pd.norm() >= 1.0, "constructed phase-difference magnitude at least 1");
        const auto r = dual_norm(c, cfg);
        require(r.bounds.lower >= 1.0 + 1e-3, "dual norm strictly above the sup norm");
    }
}

void criterion6() {
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> uni(0.5, 2.0);
    std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 2;
        std::vector<double> r(static_cast<std::size_t>(n));
        std::vector<Complex> alpha(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            r[static_cast<std::size_t>(k)] = uni(rng);
            alpha[static_cast<std::size_t>(k)] = std::polar(1.0, ang(rng));
        }
        const XState x(power_vector(r), torus_vector(alpha));
        const auto v = half_rank_test(x);
        require(v.outcome == Outcome::Separable, "round-trip construction is separable");
        const auto& cert = std::get<ProductVectorCertificate>(v.certificate);
        require(cert.reconstruction_error <= 1e-10, "product-vector x-part matches to 1e-10");

        auto c = torus_vector(alpha);
        c.rep(static_cast<std::uint32_t>(rng() % c.rep_dim())) *= std::polar(1.0, 0.1);
        const auto v2 = half_rank_test(XState(power_vector(r), c));
        require(v2.entangled_class(), "perturbed phase flips the verdict");
        const auto* mc = std::get_if<MultisetCertificate>(&v2.certificate);
        require(mc != nullptr && mc->multiset.order() == 4,
                "violated order-4 multiset certificate attached");
    }
}

void criterion7(const OptimConfig& cfg) {
    std::mt19937_64 rng(1007);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = random_x_state(2, rng);
        const auto v = decide_xstate(x, cfg);
        const bool oracle_sep = oracle::two_qubit_oracle(x);
        require(v.outcome != Outcome::Undecided, "two-qubit decision is definite");
        require((v.outcome == Outcome::Separable) == oracle_sep,
                "two-qubit decision agrees with the partial-transpose oracle");
    }
}

void criterion8(const OptimConfig& cfg) {
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            const auto rho = oracle::sample_separable(
                n, 1 + trial % 8, 80000 + static_cast<std::uint64_t>(n * 10000 + trial));
            const auto v = check_general(rho, cfg);
            require(!v.entangled_class(), "separable sample never certified entangled");
        }
    }
    // every PPT-entangled certificate emitted re-verifies from scratch
    auto c = HermVec::ones(3);
    c.rep(3) = Complex{-1.0, 0.0};
    const double w = 1.0 / 8.0;
    const XState x(DiagVec(3, w), c * (0.9 * w));
    const auto v = decide_xstate(x, cfg);
    require(v.outcome == Outcome::PptEntangled, "boundary point is PPT-entangled");
    reverify_witness(std::get<WitnessCertificate>(v.certificate), x, cfg);
}

void criterion9(const OptimConfig& cfg) {
    auto c = HermVec::ones(3);
    c.rep(3) = Complex{-1.0, 0.0};  // the pi pattern at index 011
    const auto rep = boundary_family(c, cfg);
    require(rep.t0_upper <= 1.0 - 1e-3, "separability threshold strictly below one");
    require(rep.ppt_at_one, "rho_1 is PPT");
    require(rep.witness_t.has_value() && *rep.witness_t > rep.t0_upper && *rep.witness_t <= 1.0,
            "certified witness inside the window");
    const double w = 1.0 / 8.0;
    const XState rho_t(DiagVec(3, w), c * (*rep.witness_t * w));
    reverify_witness(*rep.witness, rho_t, cfg);
}

void criterion10() {
    const auto rho = oracle::sample_separable(3, 4, 31337);
    io::save_state(io::make_dense_statefile(rho, "acceptance reproducibility"),
                   "/tmp/xsep_accept10.json");
    const auto run_once = [](const std::string& out) {
        const std::string cmd = std::string(XSEP_BIN) +
                                " check /tmp/xsep_accept10.json --json --seed 2718 > " + out +
                                " 2>&1";
        require(std::system(cmd.c_str()) != -1, "launching the tool");
        std::ifstream in(out);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string a = run_once("/tmp/xsep_accept10_a.txt");
    const std::string b = run_once("/tmp/xsep_accept10_b.txt");
    require(!a.empty(), "report not empty");
    require(a == b, "byte-identical JSON reports");
}

}  // namespace

int main() {
    const auto cfg = acceptance_cfg();
    struct Criterion {
        int id;
        const char* name;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria{
        {1, "closed-form agreement for one and two qubits", [] { criterion1(); }},
        {2, "irreducible balanced multiset counts", [] { criterion2(); }},
        {3, "phase geometry dimensions and identities", [] { criterion3(); }},
        {4, "three-qubit dual functional equals the multiset bound", [&] { criterion4(cfg); }},
        {5, "sandwich and equality law for the torus norm", [&] { criterion5(cfg); }},
        {6, "half-rank round trip and perturbation", [] { criterion6(); }},
        {7, "two-qubit ground truth", [&] { criterion7(cfg); }},
        {8, "soundness on separable samples", [&] { criterion8(cfg); }},
        {9, "nonzero-volume PPT entanglement demo", [&] { criterion9(cfg); }},
        {10, "byte-identical reports", [] { criterion10(); }},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            crit.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty()) {
            std::printf("[PASS] criterion %2d: %s (%.2f s)\n", crit.id, crit.name, secs);
        } else {
            std::printf("[FAIL] criterion %2d: %s (%.2f s): %s\n", crit.id, crit.name, secs,
                        error.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
