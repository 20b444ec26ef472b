#pragma once

#include "reklab/generators.hpp"
#include "reklab/report.hpp"
#include "reklab/theorems.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace reklab {

// A reproducible generator x theorem grid: the per-instance factor graphs
// and cycle/complete orders are derived from `seed` alone, so a sweep re-run
// from its recorded config reproduces the identical summary.
struct SweepConfig {
    std::uint64_t seed = 1;
    int instances = 10;
    std::vector<TheoremId> theorems;   // empty: all
    std::vector<std::string> families; // empty: all generator families
    int factor_order_min = 5;
    int factor_order_max = 8;
    int n_min = 4;
    int n_max = 5;
    Budget budget;
    int threads = 0;
    std::string output; // summary path; empty means stdout

    static SweepConfig from_json(const nlohmann::json& j);
    OrderedJson to_json() const;
};

struct SweepViolation {
    int instance = 0;
    TheoremId theorem = TheoremId::t3_1;
    gen::GeneratorSpec spec;
    int n = 0;
    TheoremReport report;
};

struct VerdictCounts {
    int confirmed = 0;
    int violated = 0;
    int hypotheses_unmet = 0;
    int oracle_too_large = 0;

    int total() const { return confirmed + violated + hypotheses_unmet + oracle_too_large; }
};

struct SweepSummary {
    SweepConfig config;
    std::map<std::string, VerdictCounts> per_theorem;
    std::vector<SweepViolation> violations;

    bool any_violation() const { return !violations.empty(); }
    OrderedJson to_json() const;
};

SweepSummary run_sweep(const SweepConfig& config);

} // namespace reklab
