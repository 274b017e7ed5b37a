#pragma once

#include "loophom/error.hpp"
#include "loophom/manifold/bundle.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace loophom::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitUnsupported = 3 };

/// Input file: {"intersection_form": [[...]], "w2": [0|1, ...], "p1": int}
/// with optional "name" and "schema". An empty form means N = S^4.
struct ManifoldSpec {
    std::optional<std::string> name;
    IntMatrix intersection_form;
    manifold::Z2Vector w2;
    std::int64_t p1 = 0;

    friend bool operator==(const ManifoldSpec&, const ManifoldSpec&) = default;
};

/// Throws ParseError for malformed JSON or fields of the wrong type.
ManifoldSpec parse_spec(const nlohmann::json& j);
ManifoldSpec load_spec(const std::filesystem::path& path);
nlohmann::json spec_to_json(const ManifoldSpec& spec);

struct ValidatedInput {
    manifold::FourManifold base;
    manifold::BundleData bundle;
};

/// Runs the manifold-level validation (form, bundle classes).
ValidatedInput validate_spec(const ManifoldSpec& spec);

/// d, Spin flag, (alpha, ell) and, for d >= 1, the case I/II annotation.
nlohmann::json input_summary(const ManifoldSpec& spec, const ValidatedInput& input);

struct ReportError {
    std::string code;
    std::string message;

    friend bool operator==(const ReportError&, const ReportError&) = default;
};

struct Report {
    std::string command;
    /// One summary per input file (two for compare).
    std::vector<nlohmann::json> inputs;
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::string> warnings;
    std::optional<ReportError> error;

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);

    friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { Json, Text };

/// Deterministic serialization; text mode omits empty sections.
std::string emit_report(const Report& r, Format format);

/// Maps a library error code to the process exit status.
int exit_code_for(ErrorCode code);

/// Full command-line entry point; writes the report to `out` and usage
/// problems to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace loophom::cli
