// Acceptance gate: one PASS/FAIL line per criterion.
//
// usage: phm_acceptance <path-to-phm> [seed]

#include <cstdio>
#include <iostream>
#include <string>

#include "phm/acceptance.hpp"

namespace {

using phm::acceptance::CriterionResult;
using phm::acceptance::Relation;

// stdout of a shell command, or nothing with ok = false
std::string capture(const std::string& command, bool& ok) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        ok = false;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    ok = pclose(pipe) == 0;
    return out;
}

CriterionResult determinism(const std::string& cli, std::uint64_t seed) {
    CriterionResult r;
    r.id = 7;
    r.title = "selftest reports are byte-identical across runs";
    const std::string cmd = "'" + cli + "' selftest --seed " + std::to_string(seed) + " 2>/dev/null";
    bool ok1 = false;
    bool ok2 = false;
    const std::string first = capture(cmd, ok1);
    const std::string second = capture(cmd, ok2);
    r.checks.push_back(phm::acceptance::make_check("runs_completed", (ok1 ? 1 : 0) + (ok2 ? 1 : 0),
                                                   Relation::at_least, 2));
    r.checks.push_back(phm::acceptance::make_check("report_bytes", static_cast<double>(first.size()),
                                                   Relation::at_least, 1));
    r.checks.push_back(phm::acceptance::make_check("byte_differences", first == second ? 0 : 1,
                                                   Relation::at_most, 0));
    return r;
}

void print(const CriterionResult& r) {
    std::cout << "criterion " << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << "  " << r.title << "\n";
    for (const auto& c : r.checks) {
        std::cout << "    " << (c.passed ? "ok  " : "FAIL") << " " << c.name << " = " << c.value << " "
                  << phm::acceptance::to_string(c.relation) << " " << c.threshold << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: phm_acceptance <path-to-phm> [seed]\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 0;

    auto results = phm::acceptance::run_all(seed);
    // wall-clock limits are checked here rather than in the report, which
    // has to stay byte-identical between runs
    for (auto& r : results) {
        if (r.id == 1) r.checks.push_back(phm::acceptance::make_check("runtime_seconds", r.seconds, Relation::less_than, 5.0));
        if (r.id == 6) r.checks.push_back(phm::acceptance::make_check("runtime_seconds", r.seconds, Relation::less_than, 30.0));
    }
    results.push_back(determinism(cli, seed));

    int failed = 0;
    for (const auto& r : results) {
        print(r);
        failed += r.passed() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << "\n";
    return failed == 0 ? 0 : 1;
}
