#pragma once

// JSON interchange formats and the command-line front end.
//
// Complex numbers are {"re": x, "im": y}; {"theta": t} is accepted on input as
// e^{it}. Symbol files carry schema_version 1.
//
// Exit codes: 0 ran and verdict positive, 1 ran and verdict negative,
// 2 input or usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/conjugations.hpp"
#include "hardy/toeplitz.hpp"

namespace hardy::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kPositive = 0, kNegative = 1, kInputError = 2 };

/// Malformed command-line or file input; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json symbol_to_json(const LaurentSymbol& symbol);
LaurentSymbol symbol_from_json(const json& j);

/// Sequence spec: a list of complex values, {"values": [...]}, or a named generator
/// {"generator": "constant", "value" | "theta": ...}, {"generator": "angles", "thetas": [...]}
/// (entries e^{i theta_k}), {"generator": "root_angles", "thetas": [...]} (entry n is
/// conj(e^{i theta_n / (2n)}), n starting at `first_index`, which must be >= 1).
/// Returns exactly `count` values; explicit lists longer than that contribute a prefix.
std::vector<Complex> sequence_from_json(const json& spec, std::size_t count, std::size_t first_index);

json certificate_to_json(const ConjugationCert& cert);
json report_to_json(const SymmetryReport& report);
json record_to_json(const ExplorationRecord& record);

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
