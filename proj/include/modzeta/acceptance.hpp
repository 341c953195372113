#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modzeta::acceptance {

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;   // observed numbers, one line per sub-check
    double seconds = 0.0;
};

struct Options {
    bool quick = false;           // reduced sizes for smoke / determinism runs
    std::uint64_t seed = 0x5eedULL;
    std::string out_dir;          // when nonempty, reports are written there
};

std::vector<CriterionOutcome> run(const Options& opt);

// Render the outcome list as the summary JSON written by the suite subcommand.
std::string summary_json(const std::vector<CriterionOutcome>& outcomes, const Options& opt);

// Same content minus wall-clock timings; two runs with the same options must
// produce identical bytes.
std::string deterministic_json(const std::vector<CriterionOutcome>& outcomes);

bool all_pass(const std::vector<CriterionOutcome>& outcomes);

} // namespace modzeta::acceptance
