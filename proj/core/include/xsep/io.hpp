// JSON state files: kind "x" carries the diagonal and the Hermitian-paired
// anti-diagonal, kind "dense" a full complex matrix.  Complex numbers are
// [re, im] pairs throughout.

#pragma once

#include <optional>
#include <string>

#include "xsep/xstate.hpp"

namespace xsep::io {

enum class StateKind { X, Dense };

struct StateFile {
    int n = 0;
    StateKind kind = StateKind::X;
    std::optional<XState> x;
    std::optional<DenseState> dense;
    std::string label;
    std::optional<std::uint64_t> seed;

    const XState& as_x() const;
};

/// Parse and validate a state file; tol controls the Hermitian-pair and
/// nonnegativity checks.
StateFile load_state(const std::string& path, double tol = 1e-10);
StateFile parse_state(const std::string& json_text, double tol = 1e-10);

std::string serialize_state(const StateFile& sf);
void save_state(const StateFile& sf, const std::string& path);

StateFile make_x_statefile(const XState& x, std::string label = "",
                           std::optional<std::uint64_t> seed = std::nullopt);
StateFile make_dense_statefile(const DenseState& rho, std::string label = "",
                               std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace xsep::io
