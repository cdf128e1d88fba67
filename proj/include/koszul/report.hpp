#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "koszul/sweep.hpp"

namespace koszul {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "koszul";
inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { Human, Machine };

struct CliOptions {
    std::optional<SignConvention> convention;  // nullopt = auto (adjudicated)
    ReportFormat format = ReportFormat::Human;
    int n_max = 3;
    int sweep_ceiling = 8;
    int jobs = 1;
    bool timings = false;                       // timings are opt-in; the
                                                // default report is byte-stable
    std::optional<std::string> corrupt_mu_key;  // debug: flip one mu entry
    std::optional<std::string> out_path;
};

// Exit codes shared by every subcommand: 0 success, 1 input validation,
// 2 verification failure. Nothing else.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

struct RunReport {
    Json machine;
    int exit_code = kExitOk;
    std::string render_human() const;
    std::string render(ReportFormat f) const;
};

// Parses {"n": int, "relations": [[s, t], ...]} and normalizes.
RelationPattern parse_pattern_doc(const std::string& text, NormalizeLog* log);

RunReport cmd_analyze(const std::string& doc_text, const CliOptions& opt);
RunReport cmd_verify(const std::string& doc_text, const CliOptions& opt);
RunReport cmd_sweep(const CliOptions& opt);
// Writes the SVG for the pattern; the report carries only status info.
RunReport cmd_diagram(const std::string& doc_text, const std::string& out_path,
                      const CliOptions& opt);

// Serialization helpers shared with the tests.
Json pattern_json(const RelationPattern& pat, const NormalizeLog& log);
Json sequences_json(const SequenceTable& seqs);
Json category_json(const GradedBasisCategory& cat);
Json verdict_json(const PatternVerdict& v);

}  // namespace koszul
