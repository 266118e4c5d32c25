#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "support/oracles.hpp"
#include "wellcov/errors.hpp"
#include "wellcov/generators.hpp"

using namespace wellcov;

TEST_CASE("seeded draws are reproducible") {
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
    CHECK_THROWS_AS(a.below(0), Error);

    Rng g1(5);
    Rng g2(5);
    CHECK(random_graph(g1, 9, 40).edges() == random_graph(g2, 9, 40).edges());
}

TEST_CASE("random graphs respect their density extremes") {
    Rng rng(1);
    CHECK(random_graph(rng, 6, 0).edge_count() == 0);
    CHECK(random_graph(rng, 6, 100).edge_count() == 15);
    CHECK(random_graph(rng, 0, 50).vertex_count() == 0);
}

TEST_CASE("universal-vertex-free sampling") {
    Rng rng(2);
    for (int round = 0; round < 30; ++round) {
        Graph g = random_graph_no_universal(rng, 2 + rng.below(7), rng.below(80));
        CHECK_FALSE(g.has_universal_vertex());
    }
    CHECK_THROWS_AS(random_graph_no_universal(rng, 1, 50), Error);
}

TEST_CASE("constructed chordal graphs really are chordal") {
    Rng rng(3);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + rng.below(13);
        Graph g = random_chordal_graph(rng, n, 30 + rng.below(70));
        CHECK(g.vertex_count() == n);
        CHECK(testsupport::elimination_chordal(g));
    }
}

TEST_CASE("random 3-CNF formulas avoid tautologies") {
    Rng rng(4);
    for (int round = 0; round < 50; ++round) {
        int nv = 1 + rng.below(5);
        int m = rng.below(10);
        CnfFormula f = random_three_cnf(rng, nv, m);
        CHECK(f.num_vars == nv);
        CHECK(f.clause_count() == m);
        CHECK((m == 0 || f.three_cnf));
        for (const auto& clause : f.clauses)
            for (int lit : clause)
                CHECK(std::find(clause.begin(), clause.end(), -lit) == clause.end());
    }
    CHECK(random_three_cnf(rng, 0, 0).clause_count() == 0);
    CHECK_THROWS_AS(random_three_cnf(rng, 0, 1), Error);
}

TEST_CASE("the exhaustive formula corpus has the expected shape") {
    auto corpus = all_small_three_cnf(2, 4);
    CHECK(corpus.size() == 799);

    long long by_vars[3] = {0, 0, 0};
    std::set<std::string> seen;
    for (const CnfFormula& f : corpus) {
        REQUIRE(f.num_vars <= 2);
        REQUIRE(f.clause_count() <= 4);
        ++by_vars[f.num_vars];
        CHECK(f.three_cnf);
        for (const auto& clause : f.clauses)
            for (int lit : clause)
                CHECK(std::find(clause.begin(), clause.end(), -lit) == clause.end());
        seen.insert(std::to_string(f.num_vars) + "|" + write_dimacs(f));
    }
    CHECK(by_vars[0] == 1);
    CHECK(by_vars[1] == 4);
    CHECK(by_vars[2] == 794);
    CHECK(seen.size() == corpus.size());

    CHECK(all_small_three_cnf(0, 4).size() == 1);
}

TEST_CASE("graph catalogs are capped, bounded, and reproducible") {
    auto tiny = graph_catalog(2, 100, 1);
    CHECK(tiny.size() == 4);

    auto capped = graph_catalog(6, 500, 9);
    CHECK(capped.size() <= 500);
    for (const Graph& g : capped) CHECK(g.vertex_count() <= 6);

    auto once = graph_catalog(5, 300, 42);
    auto twice = graph_catalog(5, 300, 42);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i].edges() == twice[i].edges());
}
