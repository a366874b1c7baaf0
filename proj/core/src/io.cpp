#include "xsep/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace xsep::io {

using nlohmann::ordered_json;

const XState& StateFile::as_x() const {
    if (!x) throw ValidationError("state file: expected kind \"x\"");
    return *x;
}

namespace {

Complex parse_complex(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("state file: " + where + " must be a [re, im] pair");
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

ordered_json dump_complex(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

}  // namespace

StateFile parse_state(const std::string& json_text, double tol) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("state file: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("state file: top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ValidationError("state file: missing integer field \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxQubits)
        throw ValidationError("state file: n must be in [1, " + std::to_string(kMaxQubits) + "]");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ValidationError("state file: missing string field \"kind\"");
    const std::string kind = j["kind"].get<std::string>();

    StateFile sf;
    sf.n = n;
    if (j.contains("metadata") && j["metadata"].is_object()) {
        const auto& md = j["metadata"];
        if (md.contains("label") && md["label"].is_string()) sf.label = md["label"].get<std::string>();
        if (md.contains("seed") && md["seed"].is_number_unsigned())
            sf.seed = md["seed"].get<std::uint64_t>();
    }

    if (kind == "x") {
        sf.kind = StateKind::X;
        if (!j.contains("diag") || !j["diag"].is_array() || j["diag"].size() != dim_of(n))
            throw ValidationError("state file: \"diag\" must hold " + std::to_string(dim_of(n)) +
                                  " reals");
        std::vector<double> diag;
        diag.reserve(dim_of(n));
        for (const auto& v : j["diag"]) {
            if (!v.is_number()) throw ValidationError("state file: non-numeric diagonal entry");
            diag.push_back(v.get<double>());
        }
        for (std::size_t r = 0; r < diag.size(); ++r) {
            if (diag[r] < -tol)
                throw ValidationError("state file: negative diagonal entry at index " +
                                      Index(n, static_cast<std::uint32_t>(r)).str());
            if (diag[r] < 0.0) diag[r] = 0.0;
        }
        if (!j.contains("anti") || !j["anti"].is_array() || j["anti"].size() != dim_of(n))
            throw ValidationError("state file: \"anti\" must hold " + std::to_string(dim_of(n)) +
                                  " [re, im] pairs");
        std::vector<Complex> anti;
        anti.reserve(dim_of(n));
        for (std::size_t r = 0; r < j["anti"].size(); ++r)
            anti.push_back(parse_complex(j["anti"][r], "anti[" + std::to_string(r) + "]"));
        sf.x = XState(DiagVec(n, std::move(diag)), HermVec::from_full(n, anti, tol));
    } else if (kind == "dense") {
        sf.kind = StateKind::Dense;
        if (n > kMaxDenseQubits)
            throw ValidationError("state file: dense matrices are capped at n <= " +
                                  std::to_string(kMaxDenseQubits));
        if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != dim_of(n))
            throw ValidationError("state file: \"matrix\" must hold " + std::to_string(dim_of(n)) +
                                  " rows");
        const auto d = static_cast<Eigen::Index>(dim_of(n));
        Eigen::MatrixXcd m(d, d);
        for (std::size_t r = 0; r < dim_of(n); ++r) {
            const auto& row = j["matrix"][r];
            if (!row.is_array() || row.size() != dim_of(n))
                throw ValidationError("state file: matrix row " + std::to_string(r) +
                                      " must hold " + std::to_string(dim_of(n)) + " pairs");
            for (std::size_t cidx = 0; cidx < dim_of(n); ++cidx)
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx)) = parse_complex(
                    row[cidx], "matrix[" + std::to_string(r) + "][" + std::to_string(cidx) + "]");
        }
        sf.dense = DenseState(n, std::move(m), tol);
    } else {
        throw ValidationError("state file: kind must be \"x\" or \"dense\"");
    }
    return sf;
}

StateFile load_state(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw ValidationError("state file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str(), tol);
}

std::string serialize_state(const StateFile& sf) {
    ordered_json j;
    j["n"] = sf.n;
    j["kind"] = sf.kind == StateKind::X ? "x" : "dense";
    if (sf.kind == StateKind::X) {
        const XState& x = sf.as_x();
        ordered_json diag = ordered_json::array();
        for (std::uint32_t r = 0; r < x.a.dim(); ++r) diag.push_back(x.a[r]);
        ordered_json anti = ordered_json::array();
        for (std::uint32_t r = 0; r < x.c.dim(); ++r) anti.push_back(dump_complex(x.c.at(r)));
        j["diag"] = std::move(diag);
        j["anti"] = std::move(anti);
    } else {
        if (!sf.dense) throw ValidationError("state file: dense payload missing");
        ordered_json matrix = ordered_json::array();
        const auto& m = sf.dense->matrix();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(dump_complex(m(r, c)));
            matrix.push_back(std::move(row));
        }
        j["matrix"] = std::move(matrix);
    }
    if (!sf.label.empty() || sf.seed) {
        ordered_json md;
        if (!sf.label.empty()) md["label"] = sf.label;
        if (sf.seed) md["seed"] = *sf.seed;
        j["metadata"] = std::move(md);
    }
    return j.dump(2) + "\n";
}

void save_state(const StateFile& sf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("state file: cannot write " + path);
    out << serialize_state(sf);
}

StateFile make_x_statefile(const XState& x, std::string label, std::optional<std::uint64_t> seed) {
    StateFile sf;
    sf.n = x.n();
    sf.kind = StateKind::X;
    sf.x = x;
    sf.label = std::move(label);
    sf.seed = seed;
    return sf;
}

StateFile make_dense_statefile(const DenseState& rho, std::string label,
                               std::optional<std::uint64_t> seed) {
    StateFile sf;
    sf.n = rho.n();
    sf.kind = StateKind::Dense;
    sf.dense = rho;
    sf.label = std::move(label);
    sf.seed = seed;
    return sf;
}

}  // namespace xsep::io
