#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace opgeo {

/// Reproducible suite configuration: one config, one byte-identical report.
struct SuiteConfig {
    uint64_t seed = 1;
    uint64_t trials = 1000;
    int frame_dimension = 2;
    long coordinate_range = 40;  // bound on numerators/denominators
    enum class Mode { Exact, IntervalOnly } mode = Mode::Exact;
};

struct Counterexample {
    uint64_t trial = 0;
    std::string description;
    /// named inputs as exact expression strings, replayable through the
    /// scalar parser
    std::vector<std::pair<std::string, std::string>> inputs;
};

struct AxiomResult {
    std::string name;
    uint64_t pass = 0;
    uint64_t fail = 0;
    uint64_t uncertain = 0;
    std::optional<Counterexample> counterexample;  // lowest failing trial
};

struct Report {
    std::string suite;
    uint64_t seed = 0;
    uint64_t trials = 0;
    std::vector<AxiomResult> axioms;
    int64_t elapsed_ms = 0;  // measured; serialized as 0 unless timings are requested

    bool all_passed() const;
    uint64_t total_failures() const;
    uint64_t total_uncertain() const;

    /// Stable-order JSON: {suite, seed, trials, axioms: [...], elapsed_ms}.
    /// elapsed_ms is written as 0 unless include_timing is set, keeping the
    /// serialized report byte-identical across runs of the same config.
    std::string to_json(bool include_timing = false, int indent = 2) const;
    std::string to_text(bool include_timing = false) const;
};

}  // namespace opgeo
