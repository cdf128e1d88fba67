#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/dual.hpp"
#include "koszul/pattern.hpp"

namespace koszul {

struct CheckOutcome {
    std::string name;
    bool passed = true;
    int checked = 0;
    std::vector<std::string> failures;
};

// Everything cmd_verify asserts about one pattern. The same routine backs
// the single-pattern commands and the sweep.
struct PatternVerdict {
    RelationPattern pattern{RelationPattern::normalize(0, {})};
    std::vector<CheckOutcome> checks;
    bool all_passed() const;
    std::string first_failure() const;
};

struct VerifyOptions {
    SignConvention convention = kDefaultConvention;
    // chain length for the associativity verifier; default n + 1
    std::optional<int> max_chain;
    // Ext-oracle agreement is skipped above this n (resolution sweep cost);
    // single-pattern verify uses a high bound, the big sweep stays at 6.
    int oracle_n_limit = 16;
};

// Runs: sequence lemmas (strict decrease, inversion, dagger bound, counting
// duality, target membership), associativity of the dual, unitality under
// both conventions, hom-table versus sequence agreement, Ext-oracle
// agreement and resolution lengths, the quadratic comparison when the
// pattern is quadratic, and the closed-form comparison when the pattern is
// a one-relation-length-k family.
PatternVerdict verify_pattern(const RelationPattern& pat, const VerifyOptions& opt);

struct SweepConfig {
    int n_max = 3;
    int jobs = 1;  // 1 = serial reference path
    VerifyOptions verify;
    bool adjudicate = true;
};

struct SweepResult {
    SweepConfig config;
    std::vector<PatternVerdict> verdicts;  // canonical pattern order
    AdjudicationReport adjudication;
    long long patterns = 0;
    bool all_passed() const;
    // first failing pattern in canonical order, if any
    std::optional<std::string> minimal_failure() const;
};

// Serial reference implementation: a plain loop in canonical order.
SweepResult run_sweep_serial(const SweepConfig& cfg);

// OpenMP implementation; produces the identical result for any job count.
SweepResult run_sweep_parallel(const SweepConfig& cfg);

// Dispatches on cfg.jobs (<= 1 serial, else parallel).
SweepResult run_sweep(const SweepConfig& cfg);

}  // namespace koszul
