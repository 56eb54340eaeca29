#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glink::verify {

struct Options {
    int N = 4;               // root order for the N-generic suites
    std::uint64_t seed = 7;  // base seed; every check derives its own stream
    double tol = 1e-9;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    double deviation = 0.0;  // worst deviation observed, when meaningful
    double bound = 0.0;      // the threshold the deviation was held to
    std::string detail;
};

/// Suites in canonical order. "all" expands to every one of these.
std::vector<std::string> available_suites();

/// Runs the named suites ("all" allowed) and returns per-check results in a
/// deterministic order. Unknown suite names throw std::invalid_argument.
std::vector<CheckResult> run_suites(const std::vector<std::string>& suites,
                                    const Options& opt);

/// One line per check ("PASS suite/name ...") plus a summary line;
/// deterministic for fixed options.
std::string format_results(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace glink::verify
