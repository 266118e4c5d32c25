#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wellcov {

/// Knobs for a verification suite. Negative size/samples select the suite's
/// defaults (the bounds the acceptance gate runs at); the seed fixes all
/// randomness.
struct SuiteOptions {
    int size = -1;
    int samples = -1;
    std::uint64_t seed = 0;
};

struct SuiteResult {
    std::string suite;
    bool passed = true;
    long long checked = 0;
    std::string counterexample;       // first failing instance, fully serialized
    std::vector<std::string> notes;   // informational, never affect passed
};

/// Suites: gadget-w2, gadget-wk, gadget-es, pi-alpha, gplus-lemma, mis-eq,
/// domset, chordal-agree, oracle-agree. Throws Error on unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

std::vector<std::string> suite_names();

}  // namespace wellcov
