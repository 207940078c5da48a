#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "phm/linalg.hpp"

namespace phm::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Malformed or unreadable matrix file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"n": n, "entries": [[[re, im], ...], ...]}, row-major.
ComplexMatrix parse_matrix(std::string_view text);
ComplexMatrix read_matrix_file(const std::string& path);
Json matrix_entries(const ComplexMatrix& m);
Json matrix_document(const ComplexMatrix& m);

struct RunOptions {
    double tol = 1e-8;
    std::uint64_t seed = 0;
    bool strict = false;

    /// The base tolerance after --strict.
    double base_tol() const { return strict ? tol / 2 : tol; }
};

struct MorseOptions {
    double A = 3.0;
    double B = 4.0;
    double C = 4.0;
    std::size_t N = 256;
    double x_min = -4.0;
    double x_max = 14.0;
};

/// Report builders. Library errors propagate, except those the report
/// turns into a verdict.
Json analyze_report(const ComplexMatrix& h, const RunOptions& opts);
Json realform_report(const ComplexMatrix& h, const RunOptions& opts);
Json morse_report(const MorseOptions& m, const RunOptions& opts);
/// `summary` receives one PASS/FAIL line per criterion with its runtime.
Json selftest_report(const RunOptions& opts, std::string* summary = nullptr);

/// Exit code for an exception escaping a report builder.
int exit_code_for(const std::exception& e);

/// Pretty-printed document plus trailing newline.
std::string render(const Json& report);

} // namespace phm::cli
