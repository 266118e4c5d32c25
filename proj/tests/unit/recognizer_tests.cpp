#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wellcov/errors.hpp"
#include "wellcov/generators.hpp"
#include "wellcov/recognizers.hpp"

using namespace wellcov;
using testsupport::complete_graph;
using testsupport::cycle_graph;
using testsupport::empty_graph;
using testsupport::path_graph;
using testsupport::star_graph;

TEST_CASE("three-vertex path is not well-covered") {
    Verdict v = is_well_covered(path_graph(3));
    REQUIRE_FALSE(v.holds);
    const auto& cert = std::get<TwoMaximalSets>(v.certificate);
    VertexSet small = VertexSet::of({1});
    VertexSet large = VertexSet::of({0, 2});
    bool as_found = cert.set1 == large && cert.set2 == small;
    bool reversed = cert.set1 == small && cert.set2 == large;
    CHECK((as_found || reversed));
    CHECK(reverify_certificate(path_graph(3), ClassQuery::well_covered(), v));
}

TEST_CASE("well-covered spot checks") {
    CHECK(is_well_covered(empty_graph(0)).holds);
    CHECK(is_well_covered(empty_graph(3)).holds);
    CHECK(is_well_covered(complete_graph(4)).holds);
    CHECK(is_well_covered(cycle_graph(4)).holds);
    CHECK(is_well_covered(cycle_graph(5)).holds);
    CHECK(is_well_covered(cycle_graph(7)).holds);
    CHECK_FALSE(is_well_covered(cycle_graph(6)).holds);
    CHECK(is_well_covered(path_graph(4)).holds);
    CHECK_FALSE(is_well_covered(path_graph(5)).holds);
}

TEST_CASE("five-vertex path fails 1-extendability at vertex 1") {
    Verdict v = is_B_graph(path_graph(5));
    REQUIRE_FALSE(v.holds);
    CHECK(std::get<NonExtendableSet>(v.certificate).set == VertexSet::of({1}));
    CHECK(reverify_certificate(path_graph(5), ClassQuery::b_graph(), v));
}

TEST_CASE("the claw is 2-extendable but not 1-extendable") {
    Graph claw = star_graph(3);
    CHECK(is_k_extendable(claw, 2).holds);
    CHECK_FALSE(is_k_extendable(claw, 1).holds);
    CHECK_FALSE(is_Es(claw, 2).holds);
}

TEST_CASE("extendability is vacuous above the independence number") {
    CHECK(is_k_extendable(complete_graph(3), 2).holds);
    CHECK(is_k_extendable(path_graph(2), 5).holds);
}

TEST_CASE("triangle leaves W3 when a removal kills the independence number") {
    Graph k3 = complete_graph(3);
    CHECK(is_Wk_staples(k3, 3).holds);
    Verdict v = is_Wk_staples(k3, 4);
    REQUIRE_FALSE(v.holds);
    const auto& cert = std::get<SubsetRemovalFailure>(v.certificate);
    CHECK(cert.removed == VertexSet::of({0, 1, 2}));
    CHECK(cert.alpha_dropped);
    CHECK(cert.set1.size() == 1);
    CHECK(cert.set2.empty());
    CHECK(reverify_certificate(k3, ClassQuery::wk(4), v));
}

TEST_CASE("shedding vertices of small graphs") {
    CHECK_FALSE(is_shedding(empty_graph(1), 0).holds);
    Verdict isolated = is_shedding(empty_graph(1), 0);
    CHECK(std::get<DominatingWitness>(isolated.certificate).set.empty());

    // In a path, the second vertex sheds but a leaf does not.
    CHECK(is_shedding(path_graph(3), 1).holds);
    CHECK_FALSE(is_shedding(path_graph(3), 0).holds);
    CHECK(is_shedding(complete_graph(4), 2).holds);
    CHECK_THROWS_AS(is_shedding(path_graph(3), 9), OutOfRangeVertexError);
}

TEST_CASE("parameter validation") {
    Graph g = path_graph(2);
    CHECK_THROWS_AS(is_k_extendable(g, 0), Error);
    CHECK_THROWS_AS(is_Wk_staples(g, 0), Error);
    CHECK(is_Es(g, 0).holds);
    CHECK_THROWS_AS(is_Wk_definitional(g, 4), InstanceTooLargeError);
    CHECK_THROWS_AS(is_Wk_definitional(empty_graph(11), 2), InstanceTooLargeError);
}

TEST_CASE("recognizers agree with the bitmask oracles on every small graph") {
    for (int n = 0; n <= 4; ++n) {
        for (const Graph& g : testsupport::all_graphs(n)) {
            CHECK(is_well_covered(g).holds == testsupport::brute_well_covered(g));
            for (int k = 1; k <= 2; ++k)
                CHECK(is_k_extendable(g, k).holds == testsupport::brute_k_extendable(g, k));
            for (int s = 1; s <= 2; ++s)
                CHECK(is_Es(g, s).holds == testsupport::brute_es(g, s));
            for (int v = 0; v < n; ++v)
                CHECK(is_shedding(g, v).holds == testsupport::brute_shedding(g, v));
        }
    }
}

TEST_CASE("recognizers agree with the bitmask oracles on random graphs") {
    Rng rng(3);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + rng.below(9);
        int percent = rng.below(101);
        Graph g = random_graph(rng, n, percent);
        CHECK(is_well_covered(g).holds == testsupport::brute_well_covered(g));
        CHECK(is_B_graph(g).holds == testsupport::brute_k_extendable(g, 1));
        CHECK(is_Es(g, 2).holds == testsupport::brute_es(g, 2));
        int v = rng.below(n);
        CHECK(is_shedding(g, v).holds == testsupport::brute_shedding(g, v));
    }
}

TEST_CASE("both Wk characterizations agree on every small graph") {
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : testsupport::all_graphs(n))
            for (int k = 1; k <= 3; ++k)
                CHECK(is_Wk_staples(g, k).holds == is_Wk_definitional(g, k).holds);
}

TEST_CASE("class inclusions hold on every small graph") {
    for (int n = 0; n <= 4; ++n) {
        for (const Graph& g : testsupport::all_graphs(n)) {
            bool wc = is_well_covered(g).holds;
            CHECK(wc == is_Wk_staples(g, 1).holds);

            bool all_extendable = true;
            for (int k = 1; k <= n; ++k)
                if (!is_k_extendable(g, k).holds) all_extendable = false;
            CHECK(wc == all_extendable);

            for (int k = 1; k <= 2; ++k)
                if (is_Wk_staples(g, k + 1).holds) CHECK(is_Wk_staples(g, k).holds);
            for (int s = 1; s <= 2; ++s)
                if (is_Es(g, s + 1).holds) CHECK(is_Es(g, s).holds);
            if (is_Wk_staples(g, 2).holds)
                for (int s = 1; s <= 3; ++s) CHECK(is_Es(g, s).holds);
        }
    }
}

TEST_CASE("certificates re-verify, corrupted ones do not") {
    Rng rng(17);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + rng.below(7);
        int percent = rng.below(101);
        Graph g = random_graph(rng, n, percent);
        std::vector<std::pair<ClassQuery, Verdict>> results;
        results.emplace_back(ClassQuery::well_covered(), is_well_covered(g));
        results.emplace_back(ClassQuery::b_graph(), is_B_graph(g));
        results.emplace_back(ClassQuery::wk(2), is_Wk_staples(g, 2));
        results.emplace_back(ClassQuery::es(2), is_Es(g, 2));
        int v = rng.below(n);
        results.emplace_back(ClassQuery::shedding(v), is_shedding(g, v));
        for (const auto& [query, verdict] : results)
            CHECK(reverify_certificate(g, query, verdict));
    }

    Verdict fake = Verdict::no(TwoMaximalSets{VertexSet::of({0}), VertexSet::of({1})});
    CHECK_FALSE(reverify_certificate(cycle_graph(4), ClassQuery::well_covered(), fake));
    Verdict bogus_witness = Verdict::no(NonExtendableSet{VertexSet::of({0})});
    CHECK_FALSE(reverify_certificate(cycle_graph(4), ClassQuery::b_graph(), bogus_witness));
}
