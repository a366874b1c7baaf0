// xsep: command-line surface over the X-state separability library.
//
// Subcommands: check, norms, witness, halfrank, ghz, phase, multisets,
// boundary, oracle.  Exit codes for decision commands: 0 separable /
// criterion passed, 1 entangled (NPT), 2 PPT-entangled, 3 undecided,
// >= 10 input or usage errors.
//
// JSON reports (--json) embed the seed and configuration and contain no
// timing, so identical inputs produce byte-identical output.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xsep/io.hpp"
#include "xsep/multisets.hpp"
#include "xsep/norms.hpp"
#include "xsep/oracle.hpp"
#include "xsep/phase.hpp"
#include "xsep/separability.hpp"

using nlohmann::ordered_json;
using namespace xsep;

namespace {

constexpr int kExitSeparable = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitPptEntangled = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitFileError = 10;
constexpr int kExitValidation = 11;
constexpr int kExitPrecondition = 12;
constexpr int kExitCostGuard = 13;

struct CommonOpts {
    std::string file;
    bool json = false;
    OptimConfig cfg;

    void attach(CLI::App* cmd, bool with_file = true) {
        if (with_file) cmd->add_option("file", file, "state file (JSON)")->required();
        cmd->add_flag("--json", json, "emit a machine-readable report");
        cmd->add_option("--tol", cfg.state_tol, "state validation tolerance");
        cmd->add_option("--grid", cfg.grid, "grid points per circle for certified bounds");
        cmd->add_option("--multistart", cfg.multistart, "ascent restarts");
        cmd->add_option("--seed", cfg.seed, "seed for all stochastic search");
        cmd->add_option("--max-iter", cfg.max_iter, "iterations per descent/ascent");
        cmd->add_option("--mp-steps", cfg.mp_steps, "atoms for the dual-norm upper bound");
        cmd->add_option("--refine-budget", cfg.refine_budget,
                        "evaluation budget for multi-angle certification");
    }
};

ordered_json config_json(const OptimConfig& cfg) {
    ordered_json j;
    j["tol"] = cfg.state_tol;
    j["grid"] = cfg.grid;
    j["multistart"] = cfg.multistart;
    j["max_iter"] = cfg.max_iter;
    j["mp_steps"] = cfg.mp_steps;
    j["refine_budget"] = cfg.refine_budget;
    j["seed"] = cfg.seed;
    return j;
}

ordered_json interval_json(const BoundInterval& b) {
    ordered_json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["lower_method"] = to_string(b.lower_method);
    j["upper_method"] = to_string(b.upper_method);
    return j;
}

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json certificate_json(const Certificate& cert, int n) {
    ordered_json j;
    if (std::holds_alternative<NptCertificate>(cert)) {
        const auto& c = std::get<NptCertificate>(cert);
        j["type"] = "npt";
        j["diag_index"] = Index(n, c.diag_rank).str();
        j["anti_index"] = Index(n, c.anti_rank).str();
        j["geo_mean"] = c.geo_mean;
        j["anti_abs"] = c.anti_abs;
    } else if (std::holds_alternative<WitnessCertificate>(cert)) {
        const auto& c = std::get<WitnessCertificate>(cert);
        j["type"] = "witness";
        ordered_json s = ordered_json::array();
        for (std::uint32_t r = 0; r < c.s.dim(); ++r) s.push_back(c.s[r]);
        ordered_json u = ordered_json::array();
        for (std::uint32_t r = 0; r < c.u.dim(); ++r) u.push_back(complex_json(c.u.at(r)));
        j["s"] = std::move(s);
        j["u"] = std::move(u);
        j["delta_s"] = interval_json(c.delta_s);
        j["xnorm_u"] = interval_json(c.xnorm_u);
        j["pairing"] = c.pairing;
    } else if (std::holds_alternative<MultisetCertificate>(cert)) {
        const auto& c = std::get<MultisetCertificate>(cert);
        j["type"] = "multiset_product";
        ordered_json t = ordered_json::array();
        for (std::uint32_t e : c.multiset.elems()) t.push_back(Index(n, e).str());
        j["multiset"] = std::move(t);
        j["diag_product"] = c.diag_product;
        j["anti_product"] = complex_json(c.anti_product);
    } else if (std::holds_alternative<ProductVectorCertificate>(cert)) {
        const auto& c = std::get<ProductVectorCertificate>(cert);
        j["type"] = "product_vector";
        ordered_json factors = ordered_json::array();
        for (const auto& f : c.factors)
            factors.push_back(ordered_json::array({complex_json(f[0]), complex_json(f[1])}));
        j["factors"] = std::move(factors);
        j["reconstruction_error"] = c.reconstruction_error;
    } else if (std::holds_alternative<IdentityCertificate>(cert)) {
        const auto& c = std::get<IdentityCertificate>(cert);
        j["type"] = "corank2_identity";
        j["i1"] = Index(n, c.i1).str();
        j["i2"] = Index(n, c.i2).str();
        ordered_json t = ordered_json::array();
        for (std::uint32_t e : c.multiset.elems()) t.push_back(Index(n, e).str());
        j["multiset"] = std::move(t);
        j["j1"] = Index(n, c.j1).str();
        j["j2"] = Index(n, c.j2).str();
        j["modulus_ok"] = c.modulus_ok;
        j["phase_ok"] = c.phase_ok;
    }
    return j;
}

int exit_code_for(Outcome o, const std::string& annotation) {
    switch (o) {
        case Outcome::Separable: return kExitSeparable;
        case Outcome::Entangled: return kExitEntangled;
        case Outcome::PptEntangled: return kExitPptEntangled;
        case Outcome::Undecided:
            return annotation == "criterion_passed" ? kExitSeparable : kExitUndecided;
    }
    return kExitUndecided;
}

void emit(const ordered_json& report, bool json, const std::string& human) {
    if (json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

ordered_json verdict_json(const Verdict& v, int n) {
    ordered_json j;
    j["verdict"] = to_string(v.outcome);
    if (!v.annotation.empty()) j["annotation"] = v.annotation;
    if (v.delta_cap_bounds) j["delta_cap"] = interval_json(*v.delta_cap_bounds);
    if (v.dual_norm_bounds) j["dual_norm"] = interval_json(*v.dual_norm_bounds);
    if (!std::holds_alternative<std::monostate>(v.certificate))
        j["certificate"] = certificate_json(v.certificate, n);
    return j;
}

std::string interval_text(const std::string& name, const BoundInterval& b) {
    std::ostringstream os;
    os << "  " << name << ": [" << b.lower << ", " << b.upper << "]  ("
       << to_string(b.lower_method) << " / " << to_string(b.upper_method) << ")\n";
    return os.str();
}

ordered_json base_report(const std::string& command, const std::string& input,
                         const OptimConfig& cfg) {
    ordered_json j;
    j["tool"] = "xsep";
    j["command"] = command;
    if (!input.empty()) j["input"] = input;
    j["config"] = config_json(cfg);
    return j;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int run_check(const CommonOpts& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sf = io::load_state(opt.file, opt.cfg.state_tol);
    Verdict v = sf.kind == io::StateKind::X ? decide_xstate(sf.as_x(), opt.cfg)
                                            : check_general(*sf.dense, opt.cfg);
    ordered_json report = base_report("check", opt.file, opt.cfg);
    report["n"] = sf.n;
    report["result"] = verdict_json(v, sf.n);
    const int code = exit_code_for(v.outcome, v.annotation);
    report["exit_code"] = code;

    std::ostringstream hu;
    hu << "verdict: " << to_string(v.outcome);
    if (!v.annotation.empty()) hu << "  (" << v.annotation << ")";
    hu << "\n";
    if (v.delta_cap_bounds) hu << interval_text("delta_cap", *v.delta_cap_bounds);
    if (v.dual_norm_bounds) hu << interval_text("dual_norm", *v.dual_norm_bounds);
    if (!std::holds_alternative<std::monostate>(v.certificate))
        hu << "  certificate: " << certificate_json(v.certificate, sf.n).dump() << "\n";
    hu << "  seed: " << opt.cfg.seed << "   elapsed: " << elapsed_ms(t0) << " ms\n";
    emit(report, opt.json, hu.str());
    return code;
}

int run_norms(const CommonOpts& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sf = io::load_state(opt.file, opt.cfg.state_tol);
    const XState& x = sf.as_x();
    const auto d = delta(x.a, opt.cfg);
    const auto xn = xnorm(x.c, opt.cfg);
    const auto dc = delta_cap(x.a, opt.cfg);
    const auto dn = dual_norm(x.c, opt.cfg);

    ordered_json report = base_report("norms", opt.file, opt.cfg);
    report["n"] = sf.n;
    ordered_json result;
    result["delta"] = interval_json(d);
    result["xnorm"] = interval_json(xn);
    result["delta_cap"] = interval_json(dc.bounds);
    result["delta_cap_detail"] = {{"min_diag", dc.min_diag},
                                  {"min_pair", dc.min_pair},
                                  {"tilde_delta", dc.tilde},
                                  {"optimizer_upper", dc.optimizer_upper}};
    result["dual_norm"] = interval_json(dn.bounds);
    report["result"] = std::move(result);
    report["exit_code"] = 0;

    std::ostringstream hu;
    hu << "functionals for n = " << sf.n << ":\n";
    hu << interval_text("delta (diag)", d) << interval_text("xnorm (anti)", xn)
       << interval_text("delta_cap (diag)", dc.bounds) << interval_text("dual_norm (anti)", dn.bounds);
    if (sf.n >= 5 && xn.width() > 1e-3 * std::max(1.0, x.c.l1()))
        hu << "  note: torus certification is coarse at this qubit count "
              "(certified width " << xn.width() << "); raise --refine-budget to tighten\n";
    if (dc.optimizer_upper < dc.tilde - 1e-8 * std::max(1.0, dc.tilde))
        hu << "  note: optimization found an upper bound below the multiset bound; "
              "the two need not coincide at this qubit count\n";
    hu << "  seed: " << opt.cfg.seed << "   elapsed: " << elapsed_ms(t0) << " ms\n";
    emit(report, opt.json, hu.str());
    return 0;
}

int run_witness(const CommonOpts& opt) {
    const auto sf = io::load_state(opt.file, opt.cfg.state_tol);
    const XState& x = sf.as_x();
    const auto cw = check_witness(x.a, x.c, opt.cfg);

    ordered_json report = base_report("witness", opt.file, opt.cfg);
    report["n"] = sf.n;
    ordered_json result;
    result["status"] = to_string(cw.status);
    result["delta_s"] = interval_json(cw.delta_s);
    result["xnorm_u"] = interval_json(cw.xnorm_u);
    result["gap"] = cw.gap;
    report["result"] = std::move(result);
    const int code = cw.status == WitnessStatus::BlockPositive     ? 0
                     : cw.status == WitnessStatus::NotBlockPositive ? 1
                                                                    : kExitUndecided;
    report["exit_code"] = code;

    std::ostringstream hu;
    hu << "witness status: " << to_string(cw.status) << "  (gap " << cw.gap << ")\n"
       << interval_text("delta(s)", cw.delta_s) << interval_text("xnorm(u)", cw.xnorm_u);
    emit(report, opt.json, hu.str());
    return code;
}

int run_halfrank(const CommonOpts& opt, bool normalize) {
    const auto sf = io::load_state(opt.file, opt.cfg.state_tol);
    XState x = sf.as_x();
    if (normalize) x = normalize_half_rank(x);
    Verdict v;
    std::string route = "half_rank";
    try {
        v = half_rank_test(x);
    } catch (const PreconditionError&) {
        route = "decide_xstate";  // not half rank; fall back to the general decision
        v = decide_xstate(x, opt.cfg);
    }
    ordered_json report = base_report("halfrank", opt.file, opt.cfg);
    report["n"] = sf.n;
    report["route"] = route;
    report["result"] = verdict_json(v, sf.n);
    const int code = exit_code_for(v.outcome, v.annotation);
    report["exit_code"] = code;

    std::ostringstream hu;
    hu << "route: " << route << "\nverdict: " << to_string(v.outcome) << "\n";
    if (!std::holds_alternative<std::monostate>(v.certificate))
        hu << "  certificate: " << certificate_json(v.certificate, sf.n).dump() << "\n";
    emit(report, opt.json, hu.str());
    return code;
}

int run_ghz(const CommonOpts& opt) {
    const auto sf = io::load_state(opt.file, opt.cfg.state_tol);
    const Verdict v = ghz_diag_test(sf.as_x(), opt.cfg);
    ordered_json report = base_report("ghz", opt.file, opt.cfg);
    report["n"] = sf.n;
    report["result"] = verdict_json(v, sf.n);
    const int code = exit_code_for(v.outcome, v.annotation);
    report["exit_code"] = code;

    std::ostringstream hu;
    hu << "verdict: " << to_string(v.outcome) << "\n";
    if (v.delta_cap_bounds) hu << interval_text("min diagonal", *v.delta_cap_bounds);
    if (v.dual_norm_bounds) hu << interval_text("dual_norm", *v.dual_norm_bounds);
    emit(report, opt.json, hu.str());
    return code;
}

int run_phase(const CommonOpts& opt, double identity_tol) {
    const auto sf = io::load_state(opt.file, opt.cfg.state_tol);
    const XState& x = sf.as_x();
    const PhaseVec theta = phase_part(x.c);  // throws naming a zero entry
    const auto& basis = PhaseBasis::get(sf.n);
    const auto pd = phase_difference(x.c);

    ordered_json report = base_report("phase", opt.file, opt.cfg);
    report["n"] = sf.n;
    ordered_json idents = ordered_json::array();
    std::ostringstream hu;
    hu << "phase identities (sums tested mod 2*pi):\n";
    for (const auto& T : basis.family()) {
        const double s = identity_sum(theta, T);
        const double gap = mod_two_pi_distance(s);
        ordered_json row;
        ordered_json t = ordered_json::array();
        for (std::uint32_t e : T.elems()) t.push_back(Index(sf.n, e).str());
        row["multiset"] = std::move(t);
        row["sum"] = s;
        row["mod_2pi_gap"] = gap;
        row["holds"] = gap <= identity_tol;
        idents.push_back(std::move(row));
        hu << "  " << T.str() << "  sum = " << s << "  gap = " << gap
           << (gap <= identity_tol ? "  [holds]" : "  [violated]") << "\n";
    }
    ordered_json result;
    result["identities"] = std::move(idents);
    ordered_json coeffs = ordered_json::array();
    for (Eigen::Index j = 0; j < pd.coeffs.size(); ++j) coeffs.push_back(pd.coeffs(j));
    result["phase_difference"] = std::move(coeffs);
    result["phase_difference_norm"] = pd.norm();
    report["result"] = std::move(result);
    report["exit_code"] = 0;
    hu << "phase difference coefficients (orthonormal xi basis): " << pd.coeffs.transpose()
       << "\n  norm = " << pd.norm() << "\n";
    emit(report, opt.json, hu.str());
    return 0;
}

int run_multisets(int n, int max_order, bool recursive, bool catalog, bool json) {
    ordered_json report;
    report["tool"] = "xsep";
    report["command"] = "multisets";
    report["n"] = n;
    std::ostringstream hu;

    if (recursive) {
        report["method"] = "recursive";
        report["t4_count"] = t4_count(n);
        hu << "order 4 (recursive count): " << t4_count(n) << "\n";
        if (catalog) {
            const auto fam = recursive_t4(n);
            ordered_json members = ordered_json::array();
            for (const auto& t : fam) {
                ordered_json m = ordered_json::array();
                for (std::uint32_t e : t.elems()) m.push_back(Index(n, e).str());
                members.push_back(std::move(m));
            }
            report["order_4"] = std::move(members);
            for (const auto& t : fam) hu << "  " << t.str() << "\n";
        }
    } else {
        if (max_order <= 0) max_order = static_cast<int>(dim_of(n) / 2);
        const auto cat = enumerate_irreducible(n, max_order);
        report["method"] = "direct";
        report["max_order"] = max_order;
        ordered_json counts;
        for (int m = 2; m <= max_order; m += 2) {
            counts["order " + std::to_string(m)] = cat.count(m);
            hu << "order " << m << ": " << cat.count(m) << "\n";
        }
        report["counts"] = std::move(counts);
        if (catalog) {
            ordered_json families;
            for (const auto& [order, fam] : cat.by_order) {
                ordered_json members = ordered_json::array();
                for (const auto& t : fam) {
                    ordered_json m = ordered_json::array();
                    for (std::uint32_t e : t.elems()) m.push_back(Index(n, e).str());
                    members.push_back(std::move(m));
                }
                families["order " + std::to_string(order)] = std::move(members);
                for (const auto& t : fam) hu << "  " << t.str() << "\n";
            }
            report["catalog"] = std::move(families);
        }
    }
    report["exit_code"] = 0;
    emit(report, json, hu.str());
    return 0;
}

int run_boundary(int n, const std::string& phase_spec, const std::string& file,
                 const CommonOpts& opt) {
    HermVec c(1);
    if (!file.empty()) {
        const auto sf = io::load_state(file, opt.cfg.state_tol);
        c = sf.as_x().c;
        n = sf.n;
    } else {
        if (n < 1) throw ValidationError("boundary: --n is required without --file");
        std::vector<double> reps(dim_of(n) / 2, 0.0);
        std::istringstream ss(phase_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw ValidationError("boundary: phase spec entries look like bits=radians");
            const Index idx = Index::from_string(item.substr(0, eq));
            if (idx.n() != n) throw ValidationError("boundary: phase spec index length != n");
            const double val = std::stod(item.substr(eq + 1));
            if (idx.rank() < dim_of(n) / 2)
                reps[idx.rank()] = val;
            else
                reps[complement_rank(n, idx.rank())] = -val;
        }
        c = phase_exp(PhaseVec::from_reps(n, std::move(reps)));
    }

    const auto rep = boundary_family(c, opt.cfg);
    ordered_json report = base_report("boundary", file, opt.cfg);
    report["n"] = rep.n;
    ordered_json result;
    result["dual_norm_c"] = interval_json(rep.dual_norm_c);
    result["t0_lower"] = rep.t0_lower;
    result["t0_upper"] = rep.t0_upper;
    result["ppt_at_one"] = rep.ppt_at_one;
    result["npt_just_above_one"] = rep.npt_just_above_one;
    result["nontrivial_phase_difference"] = rep.nontrivial_phase;
    result["phase_difference_norm"] = rep.phase_difference_norm;
    if (rep.witness_t) {
        result["witness_t"] = *rep.witness_t;
        result["witness"] = certificate_json(Certificate{*rep.witness}, rep.n);
    }
    report["result"] = std::move(result);
    report["exit_code"] = 0;

    std::ostringstream hu;
    hu << "boundary family rho_t = 2^{-n} X(1, t c), n = " << rep.n << "\n"
       << interval_text("dual_norm(c)", rep.dual_norm_c) << "  t0 in [" << rep.t0_lower << ", "
       << rep.t0_upper << "]\n"
       << "  PPT at t = 1: " << (rep.ppt_at_one ? "yes" : "no")
       << "; NPT just above 1: " << (rep.npt_just_above_one ? "yes" : "no") << "\n"
       << "  phase difference: " << (rep.nontrivial_phase ? "nontrivial" : "trivial")
       << " (norm " << rep.phase_difference_norm << ")\n";
    if (rep.witness_t)
        hu << "  certified PPT-entangled point at t = " << *rep.witness_t
           << " (witness pairing " << rep.witness->pairing << ")\n";
    else if (rep.nontrivial_phase)
        hu << "  no witness certified inside the window\n";
    emit(report, opt.json, hu.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separability analysis for multi-qubit X-shaped states"};
    app.require_subcommand(1);

    CommonOpts check_opt, norms_opt, witness_opt, halfrank_opt, ghz_opt, phase_opt, boundary_opt;
    bool halfrank_normalize = false;

    auto* cmd_check = app.add_subcommand("check", "decide separability of a state file");
    check_opt.attach(cmd_check);
    auto* cmd_norms = app.add_subcommand("norms", "certified enclosures of the four functionals");
    norms_opt.attach(cmd_norms);
    auto* cmd_witness = app.add_subcommand("witness", "block-positivity of X(s,u)");
    witness_opt.attach(cmd_witness);
    auto* cmd_halfrank = app.add_subcommand("halfrank", "exact half-rank separability test");
    halfrank_opt.attach(cmd_halfrank);
    cmd_halfrank->add_flag("--normalize", halfrank_normalize,
                           "rescale a constant-pair-product state to the normalized form");
    auto* cmd_ghz = app.add_subcommand("ghz", "GHZ-diagonal separability test");
    ghz_opt.attach(cmd_ghz);
    auto* cmd_phase = app.add_subcommand("phase", "phase identities and phase difference");
    phase_opt.attach(cmd_phase);
    double phase_identity_tol = 1e-8;
    cmd_phase->add_option("--identity-tol", phase_identity_tol,
                          "tolerance for declaring an identity sum zero (mod 2*pi)");

    int ms_n = 0, ms_max_order = 0;
    bool ms_recursive = false, ms_catalog = false, ms_json = false;
    auto* cmd_ms = app.add_subcommand("multisets", "irreducible balanced multiset families");
    cmd_ms->add_option("--n", ms_n, "qubit count")->required();
    cmd_ms->add_option("--max-order", ms_max_order, "largest order to enumerate");
    cmd_ms->add_flag("--recursive", ms_recursive, "use the recursive order-4 construction");
    cmd_ms->add_flag("--catalog", ms_catalog, "print every member");
    cmd_ms->add_flag("--json", ms_json, "emit a machine-readable report");

    int bd_n = 0;
    std::string bd_phase_spec, bd_file;
    auto* cmd_bd = app.add_subcommand("boundary", "boundary family of PPT-entangled states");
    cmd_bd->add_option("--n", bd_n, "qubit count");
    cmd_bd->add_option("--phase-spec", bd_phase_spec,
                       "comma list bits=radians for the unit-modulus anti-diagonal");
    cmd_bd->add_option("--file", bd_file, "state file supplying the anti-diagonal");
    boundary_opt.attach(cmd_bd, false);

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force verifiers");
    cmd_oracle->require_subcommand(1);
    CommonOpts ogd_opt, ogx_opt, otq_opt;
    const oracle::OracleConfig oracle_defaults;
    double ogd_L = oracle_defaults.L;
    int ogd_m = oracle_defaults.grid, ogx_m = 64;
    auto* cmd_ogd = cmd_oracle->add_subcommand("grid-delta", "grid restriction of the infimum");
    ogd_opt.attach(cmd_ogd);
    cmd_ogd->add_option("--L", ogd_L, "log-radius of the grid");
    cmd_ogd->add_option("--m", ogd_m, "points per axis");
    auto* cmd_ogx = cmd_oracle->add_subcommand("grid-xnorm", "grid restriction of the supremum");
    ogx_opt.attach(cmd_ogx);
    cmd_ogx->add_option("--m", ogx_m, "angles per circle");
    int osp_n = 2, osp_k = 2;
    std::uint64_t osp_seed = oracle_defaults.seed;
    std::string osp_out;
    bool osp_json = false;
    auto* cmd_osp = cmd_oracle->add_subcommand("sample-separable", "random separable state");
    cmd_osp->add_option("--n", osp_n, "qubit count")->required();
    cmd_osp->add_option("--k", osp_k, "product terms");
    cmd_osp->add_option("--seed", osp_seed, "sampler seed");
    cmd_osp->add_option("--out", osp_out, "write the dense state file here");
    cmd_osp->add_flag("--json", osp_json, "emit the state file to stdout");
    auto* cmd_otq = cmd_oracle->add_subcommand("two-qubit", "partial-transpose ground truth");
    otq_opt.attach(cmd_otq);

    try {
        app.parse(argc, argv);

        if (*cmd_check) return run_check(check_opt);
        if (*cmd_norms) return run_norms(norms_opt);
        if (*cmd_witness) return run_witness(witness_opt);
        if (*cmd_halfrank) return run_halfrank(halfrank_opt, halfrank_normalize);
        if (*cmd_ghz) return run_ghz(ghz_opt);
        if (*cmd_phase) return run_phase(phase_opt, phase_identity_tol);
        if (*cmd_ms) return run_multisets(ms_n, ms_max_order, ms_recursive, ms_catalog, ms_json);
        if (*cmd_bd) return run_boundary(bd_n, bd_phase_spec, bd_file, boundary_opt);
        if (*cmd_ogd) {
            const auto sf = io::load_state(ogd_opt.file, ogd_opt.cfg.state_tol);
            const double v = oracle::grid_delta(sf.as_x().a, ogd_L, ogd_m);
            std::cout << v << "\n";
            return 0;
        }
        if (*cmd_ogx) {
            const auto sf = io::load_state(ogx_opt.file, ogx_opt.cfg.state_tol);
            const double v = oracle::grid_xnorm(sf.as_x().c, ogx_m);
            std::cout << v << "\n";
            return 0;
        }
        if (*cmd_osp) {
            const auto rho = oracle::sample_separable(osp_n, osp_k, osp_seed);
            const auto sf = io::make_dense_statefile(rho, "sampled separable mixture", osp_seed);
            if (!osp_out.empty()) io::save_state(sf, osp_out);
            if (osp_json || osp_out.empty()) std::cout << io::serialize_state(sf);
            return 0;
        }
        if (*cmd_otq) {
            const auto sf = io::load_state(otq_opt.file, otq_opt.cfg.state_tol);
            const bool sep = oracle::two_qubit_oracle(sf.as_x());
            std::cout << (sep ? "SEPARABLE" : "ENTANGLED") << "\n";
            return sep ? 0 : 1;
        }
        return kExitUndecided;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const CostGuardError& e) {
        std::cerr << "cost guard: " << e.what() << "\n";
        return kExitCostGuard;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFileError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFileError;
    }
}
