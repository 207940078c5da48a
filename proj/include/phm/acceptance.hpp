#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace phm::acceptance {

enum class Relation { at_most, at_least, less_than };

/// One measured quantity compared against a pinned threshold.
struct Check {
    std::string name;
    double value = 0.0;
    Relation relation = Relation::at_most;
    double threshold = 0.0;
    bool passed = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    /// Extra deterministic diagnostics for the report.
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    /// Wall time; never serialized, so reports stay byte-identical.
    double seconds = 0.0;

    bool passed() const;
};

Check make_check(std::string name, double value, Relation rel, double threshold);

/// Criteria 1 to 6. Criterion 7 (determinism of the CLI report) is checked
/// by running the CLI itself.
CriterionResult criterion_paired_metric(std::uint64_t seed);
CriterionResult criterion_unpaired_rejection(std::uint64_t seed);
CriterionResult criterion_antilinear_symmetry(std::uint64_t seed);
CriterionResult criterion_reality_test(std::uint64_t seed);
CriterionResult criterion_real_form(std::uint64_t seed);
CriterionResult criterion_morse();

std::vector<CriterionResult> run_all(std::uint64_t seed);

nlohmann::ordered_json to_json(const CriterionResult& r);

const char* to_string(Relation r);

} // namespace phm::acceptance
