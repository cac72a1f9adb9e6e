#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "awdaha/analysis.hpp"

namespace awdaha {

// How parameter tuples are produced for each (family, d, q) cell: either
// an explicit list of tuples (scalar strings, "auto" allowed in the
// constrained slot) or seeded random tuples drawn from the small-height
// pool.  Seeded draws are reproducible from the seed alone.
struct SamplerSpec {
    std::string kind;  // "explicit" or "seeded"
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<std::vector<std::string>> points;
};

struct SweepConfig {
    std::vector<std::string> families;  // subset of {"Vd", "E", "O"}
    std::vector<int> d_values;
    std::vector<std::string> q_values;
    SamplerSpec sampler;
    std::vector<int> twists{0};
    std::vector<std::string> suites;
    // appends the hardcoded equality/resonance points per criterion suite;
    // switching it off for a criterion suite is a config error
    bool include_boundary = true;
};

// accepts "d_values": [..] or "d_range": [lo, hi]; throws ConfigError
SweepConfig parse_sweep_config(const std::string& json_text);
std::string sweep_config_to_json(const SweepConfig& config);

// One executed grid point.  The id encodes family, d, q, twist, the full
// parameter tuple, and the suite, so a point can be replayed from the id
// alone.
struct PointOutcome {
    std::string id;
    std::string suite;
    std::string family;
    int d = 0;
    std::string q;
    std::vector<std::string> params;
    int twist = 0;
    std::vector<VerificationReport> reports;
    bool pass = false;
};

struct SuiteResult {
    SweepConfig config;
    std::vector<PointOutcome> points;
    int check_count = 0;
    int failed_checks = 0;
    int failed_points = 0;
    double wall_ms = 0.0;
};

// JSON form of the result; byte-identical across runs of the same config
// except for the wall_ms field
std::string suite_result_to_json(const SuiteResult& result);

// Executes every requested suite at every grid point.  Deterministic
// given the config (single-threaded, fixed iteration order).  Throws
// ConfigError on invalid configs.
SuiteResult run_suite(const SweepConfig& config);

// Re-executes one grid point from its id and returns the point's merged
// report.  Throws UnknownPoint when the id does not decode to a valid
// point.
VerificationReport replay(const std::string& point_id);

const std::vector<std::string>& known_suites();

// The parameter tuple the seeded sampler would draw first for this
// family/d/q, so one-shot callers reproduce sweep points exactly
// (family "Vd" yields a, b, c; "E" and "O" yield k0..k3 honouring the
// family constraint).  Throws ConfigError on an unknown family name.
std::vector<FieldElement> seeded_params(const std::string& family, int d, const FieldElement& q,
                                        std::uint64_t seed);

}  // namespace awdaha
