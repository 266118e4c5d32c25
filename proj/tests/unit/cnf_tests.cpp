#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "wellcov/cnf.hpp"
#include "wellcov/errors.hpp"
#include "wellcov/generators.hpp"

using namespace wellcov;

TEST_CASE("assignments track values and print") {
    Assignment a(3);
    CHECK(a.num_vars() == 3);
    CHECK(a.assigned_count() == 0);
    CHECK_FALSE(a.is_assigned(2));

    a.assign(1, true);
    a.assign(3, false);
    CHECK(a.assigned_count() == 2);
    CHECK(a.value(1));
    CHECK(a.satisfies(1));
    CHECK(a.falsifies(-1));
    CHECK(a.satisfies(-3));
    CHECK_FALSE(a.satisfies(2));
    CHECK_FALSE(a.falsifies(2));
    CHECK(a.to_string() == "x1=T x3=F");

    a.unassign(1);
    CHECK(a.to_string() == "x3=F");
}

TEST_CASE("formula construction validates literals") {
    CnfFormula f = CnfFormula::make(2, {{1, -2}, {2, 2, 1}});
    CHECK(f.clause_count() == 2);
    CHECK_FALSE(f.three_cnf);
    CHECK(CnfFormula::make(2, {{1, 2, -1}}).three_cnf);
    CHECK(CnfFormula::make(0, {}).three_cnf);

    CHECK_THROWS_AS(CnfFormula::make(2, {{3}}), LiteralOutOfRangeError);
    CHECK_THROWS_AS(CnfFormula::make(2, {{0}}), LiteralOutOfRangeError);
    CHECK_THROWS_AS(CnfFormula::make(-1, {}), LiteralOutOfRangeError);
}

TEST_CASE("evaluation distinguishes the three outcomes") {
    CnfFormula f = CnfFormula::make(2, {{1, 2}, {-1, -2}});
    Assignment a(2);
    CHECK(evaluate(f, a) == Evaluation::Undetermined);
    a.assign(1, true);
    CHECK(evaluate(f, a) == Evaluation::Undetermined);
    a.assign(2, false);
    CHECK(evaluate(f, a) == Evaluation::Satisfied);
    a.assign(2, true);
    CHECK(evaluate(f, a) == Evaluation::Falsified);
}

TEST_CASE("dimacs round-trip and errors") {
    CnfFormula f = CnfFormula::make(3, {{1, -3}, {2}});
    CnfFormula again = parse_dimacs(write_dimacs(f));
    CHECK(again.num_vars == 3);
    CHECK(again.clauses == f.clauses);

    CnfFormula commented = parse_dimacs("c comment\np cnf 2 1\n1 -2 0\n");
    CHECK(commented.num_vars == 2);
    CHECK(commented.clauses == std::vector<std::vector<int>>{{1, -2}});

    CnfFormula multiline = parse_dimacs("p cnf 2 2\n1\n2 0 -1\n-2 0\n");
    CHECK(multiline.clause_count() == 2);

    CHECK_THROWS_AS(parse_dimacs(""), MalformedHeaderError);
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n"), MalformedHeaderError);
    CHECK_THROWS_AS(parse_dimacs("1 0\np cnf 1 1\n"), MalformedHeaderError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), LiteralOutOfRangeError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0\n"), ClauseCountMismatchError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), ClauseCountMismatchError);
    CHECK_THROWS_AS(read_dimacs_file("/nonexistent/file"), ParseError);
}

TEST_CASE("brute-force satisfiability finds the lexicographically first model") {
    CnfFormula f = CnfFormula::make(2, {{1, 2}});
    auto model = brute_force_satisfiable(f);
    REQUIRE(model.has_value());
    CHECK(model->to_string() == "x1=F x2=T");

    CnfFormula unsat = CnfFormula::make(1, {{1}, {-1}});
    CHECK_FALSE(brute_force_satisfiable(unsat).has_value());

    CnfFormula empty_clause = CnfFormula::make(1, {{}});
    CHECK_FALSE(brute_force_satisfiable(empty_clause).has_value());

    CnfFormula no_clauses = CnfFormula::make(0, {});
    CHECK(brute_force_satisfiable(no_clauses).has_value());

    CHECK_THROWS_AS(brute_force_satisfiable(CnfFormula::make(30, {}), 24),
                    TooManyVariablesError);
}

TEST_CASE("brute-force satisfiability agrees with the bitmask oracle") {
    Rng rng(20);
    for (int round = 0; round < 200; ++round) {
        int nv = 1 + rng.below(4);
        int m = rng.below(8);
        CnfFormula f = random_three_cnf(rng, nv, m);
        auto mine = brute_force_satisfiable(f);
        auto reference = testsupport::brute_sat(f);
        REQUIRE(mine.has_value() == reference.has_value());
        if (mine) {
            CHECK(evaluate(f, *mine) == Evaluation::Satisfied);
            CHECK(mine->to_string() == reference->to_string());
        }
    }
}
