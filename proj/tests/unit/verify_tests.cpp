#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "wellcov/errors.hpp"
#include "wellcov/verify.hpp"

using namespace wellcov;

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 9);
    for (const char* expected :
         {"gadget-w2", "gadget-wk", "gadget-es", "pi-alpha", "gplus-lemma", "mis-eq", "domset",
          "chordal-agree", "oracle-agree"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(run_suite("no-such-suite", {}), Error);
}

TEST_CASE("scaled-down suites pass") {
    struct Shrunk {
        const char* suite;
        SuiteOptions options;
    };
    const Shrunk runs[] = {
        {"gadget-w2", {1, 4, 7}},    {"gadget-wk", {1, 3, 7}},     {"gadget-es", {1, 3, 7}},
        {"pi-alpha", {4, 10, 7}},    {"gplus-lemma", {4, 5, 7}},   {"mis-eq", {4, 10, 7}},
        {"domset", {5, 8, 7}},       {"chordal-agree", {8, 25, 7}}, {"oracle-agree", {6, 15, 7}},
    };
    for (const auto& run : runs) {
        INFO(run.suite);
        SuiteResult result = run_suite(run.suite, run.options);
        CHECK(result.suite == run.suite);
        CHECK(result.passed);
        CHECK(result.checked > 0);
        CHECK(result.counterexample.empty());
    }
}
