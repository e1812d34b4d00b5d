#pragma once

// The `qutrit` command line: verify, synth, nform, gates, modred, approx.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qutrit/umatrix.hpp"

namespace qutrit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

/// {"num": 3x3 arrays of 6 decimal strings, "pi_exp": e}. Output is the
/// canonical representative.
nlohmann::ordered_json matrix_to_json(const ScaledUnitary& m);
/// Accepts decimal strings or integers as coefficients. Throws InvalidInput.
ScaledUnitary matrix_from_json(const nlohmann::json& j);
ScaledUnitary read_matrix_file(const std::string& path);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qutrit::cli
