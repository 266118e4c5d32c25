#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wellcov/errors.hpp"
#include "wellcov/gadgets.hpp"
#include "wellcov/generators.hpp"
#include "wellcov/independent_sets.hpp"
#include "wellcov/recognizers.hpp"

using namespace wellcov;
using testsupport::complete_graph;
using testsupport::cycle_graph;
using testsupport::empty_graph;
using testsupport::path_graph;

namespace {

CnfFormula one_clause_x1() { return CnfFormula::make(1, {{1, 1, 1}}); }

// Unsatisfiable: forces x_a = x_b and x_a != x_b for both orders of (a, b).
CnfFormula unsat_eight() {
    std::vector<std::vector<int>> clauses;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            clauses.push_back({s1 * 1, s1 * 1, s2 * 2});
            clauses.push_back({s1 * 2, s1 * 2, s2 * 1});
        }
    return CnfFormula::make(2, clauses);
}

std::vector<std::string> role_strings(const GadgetGraph& gg) {
    std::vector<std::string> out;
    for (const auto& role : gg.roles) out.push_back(role.to_string());
    return out;
}

}  // namespace

TEST_CASE("vertex roles serialize and parse") {
    std::vector<VertexRole> samples = {
        {VertexRole::Kind::CliqueK, 3},
        {VertexRole::Kind::Apex},
        {VertexRole::Kind::CliqueU, 2},
        {VertexRole::Kind::VarBlock, 4, true, 2},
        {VertexRole::Kind::VarBlock, 1, false, 1},
        {VertexRole::Kind::TriangleU, 1},
        {VertexRole::Kind::TriangleUbar, 2},
        {VertexRole::Kind::TriangleW, 3},
        {VertexRole::Kind::OriginalG, 0},
        {VertexRole::Kind::OriginalH, 5},
        {VertexRole::Kind::PiSideG, 1},
        {VertexRole::Kind::PiSideH, 0},
        {VertexRole::Kind::DomCliqueC, 2},
        {VertexRole::Kind::DomI, 0},
        {VertexRole::Kind::DomIPrime, 4},
    };
    for (const auto& role : samples) CHECK(VertexRole::parse(role.to_string()) == role);
    CHECK(VertexRole::parse("var:4:pos:2").to_string() == "var:4:pos:2");

    CHECK_THROWS_AS(VertexRole::parse("apex:1"), ParseError);
    CHECK_THROWS_AS(VertexRole::parse("K"), ParseError);
    CHECK_THROWS_AS(VertexRole::parse("K:x"), ParseError);
    CHECK_THROWS_AS(VertexRole::parse("var:1:maybe:2"), ParseError);
    CHECK_THROWS_AS(VertexRole::parse("junk:3"), ParseError);
}

TEST_CASE("role maps round-trip and reject malformed input") {
    GadgetGraph gg = pi_join(complete_graph(2), path_graph(3));
    std::string text = write_role_map(gg);
    CHECK(parse_role_map(text) == gg.roles);

    CHECK(parse_role_map("# comment\n0 apex\n").size() == 1);
    CHECK(parse_role_map("1\tK:2\r\n0\tK:1\n")[1] == VertexRole{VertexRole::Kind::CliqueK, 2});

    CHECK_THROWS_AS(parse_role_map("0\tapex\n0\tK:1\n"), ParseError);
    CHECK_THROWS_AS(parse_role_map("1\tapex\n"), ParseError);
    CHECK_THROWS_AS(parse_role_map("0\n"), ParseError);
    CHECK_THROWS_AS(parse_role_map("0\tnothing:1\n"), ParseError);
}

TEST_CASE("formula gadgets reject malformed formulas") {
    CnfFormula two_lits = CnfFormula::make(2, {{1, 2}});
    CnfFormula tautology = CnfFormula::make(2, {{1, -1, 2}});
    CHECK_THROWS_AS(gadget_w2_shedding(two_lits), NotThreeCnfError);
    CHECK_THROWS_AS(gadget_wk(two_lits, 2), NotThreeCnfError);
    CHECK_THROWS_AS(gadget_es_wellcovered(two_lits, 1), NotThreeCnfError);
    CHECK_THROWS_AS(gadget_w2_shedding(tautology), TautologicalClauseError);
    CHECK_THROWS_AS(gadget_wk(tautology, 3), TautologicalClauseError);
    CHECK_THROWS_AS(gadget_es_wellcovered(tautology, 1), TautologicalClauseError);
    CHECK_THROWS_AS(gadget_wk(one_clause_x1(), 1), Error);
    CHECK_THROWS_AS(gadget_es_wellcovered(one_clause_x1(), 0), Error);
}

TEST_CASE("the one-clause W2 gadget has the documented layout") {
    GadgetGraph gg = gadget_w2_shedding(one_clause_x1());
    CHECK(gg.graph.vertex_count() == 6);
    CHECK(gg.graph.edge_count() == 9);
    CHECK(gg.distinguished == 1);
    CHECK(role_strings(gg) == std::vector<std::string>{"K:1", "apex", "var:1:pos:1",
                                                       "var:1:pos:2", "var:1:neg:1",
                                                       "var:1:neg:2"});
    CHECK(gg.graph.has_edge(0, 1));
    CHECK(gg.graph.has_edge(0, 2));
    CHECK(gg.graph.has_edge(0, 3));
    CHECK_FALSE(gg.graph.has_edge(0, 4));
    CHECK_FALSE(gg.graph.has_edge(1, 2));

    CHECK(is_well_covered(gg.graph).holds);
    CHECK(independence_number(gg.graph) == 2);
    // The formula is satisfiable, so the gadget is neither W2 nor apex-shedding.
    CHECK_FALSE(is_Wk_staples(gg.graph, 2).holds);
    CHECK_FALSE(is_shedding(gg.graph, *gg.distinguished).holds);
}

TEST_CASE("the W2 gadget of an unsatisfiable formula is W2 with a shedding apex") {
    GadgetGraph gg = gadget_w2_shedding(unsat_eight());
    CHECK(gg.graph.vertex_count() == 17);
    CHECK(gg.distinguished == 8);
    CHECK(is_well_covered(gg.graph).holds);
    CHECK(independence_number(gg.graph) == 3);
    CHECK(is_Wk_staples(gg.graph, 2).holds);
    CHECK(is_shedding(gg.graph, 8).holds);
}

TEST_CASE("the Wk gadget generalizes the W2 layout") {
    GadgetGraph two = gadget_wk(one_clause_x1(), 2);
    CHECK(two.graph.vertex_count() == 6);
    CHECK(two.graph.edges() == gadget_w2_shedding(one_clause_x1()).graph.edges());
    CHECK(role_strings(two)[1] == "U:1");
    CHECK_FALSE(two.distinguished.has_value());

    GadgetGraph three = gadget_wk(one_clause_x1(), 3);
    CHECK(three.graph.vertex_count() == 9);
    CHECK(three.graph.edge_count() == 21);
    CHECK(role_strings(three) == std::vector<std::string>{
                                     "K:1", "U:1", "U:2", "var:1:pos:1", "var:1:pos:2",
                                     "var:1:pos:3", "var:1:neg:1", "var:1:neg:2", "var:1:neg:3"});
    CHECK(independence_number(three.graph) == 2);
    // Satisfiable input: W_{k-1} holds, Wk does not.
    CHECK(is_Wk_staples(three.graph, 2).holds);
    CHECK_FALSE(is_Wk_staples(three.graph, 3).holds);

    CnfFormula unsat1 = CnfFormula::make(1, {{1, 1, 1}, {-1, -1, -1}});
    GadgetGraph built = gadget_wk(unsat1, 3);
    CHECK(built.graph.vertex_count() == 10);
    CHECK(is_Wk_staples(built.graph, 3).holds);
}

TEST_CASE("the Es gadget pre-test answers satisfiable-by-few formulas directly") {
    auto result = gadget_es_wellcovered(one_clause_x1(), 1);
    REQUIRE(std::holds_alternative<KnownNegative>(result));
    const auto& neg = std::get<KnownNegative>(result);
    CHECK(neg.reason == "every clause is satisfied by x1=T");
    CHECK(neg.witness.to_string() == "x1=T");
    CHECK(neg.witness.assigned_count() == 1);
    REQUIRE(neg.dummy.has_value());
    CHECK_FALSE(is_well_covered(neg.dummy->graph).holds);
    CHECK(is_Es(neg.dummy->graph, 1).holds);

    auto empty = gadget_es_wellcovered(CnfFormula::make(0, {}), 1);
    REQUIRE(std::holds_alternative<KnownNegative>(empty));
    CHECK(std::get<KnownNegative>(empty).reason ==
          "every clause is satisfied by the empty assignment");

    // The stand-in instance is memoized per s.
    auto again = gadget_es_wellcovered(one_clause_x1(), 1);
    CHECK(std::get<KnownNegative>(again).dummy->graph.edges() == neg.dummy->graph.edges());
}

TEST_CASE("the Es gadget builds triangles when no small assignment settles the formula") {
    GadgetGraph built = std::get<GadgetGraph>(gadget_es_wellcovered(unsat_eight(), 1));
    CHECK(built.graph.vertex_count() == 14);
    CHECK(built.graph.edge_count() == 50);
    CHECK(role_strings(built)[8] == "tri_u:1");
    CHECK(role_strings(built)[9] == "tri_ubar:1");
    CHECK(role_strings(built)[10] == "tri_w:1");
    CHECK(role_strings(built)[13] == "tri_w:2");
    CHECK(independence_number(built.graph) == 3);
    CHECK(is_Es(built.graph, 1).holds);
    // Unsatisfiable input makes the output well-covered.
    CHECK(is_well_covered(built.graph).holds);

    CnfFormula needs_two = CnfFormula::make(2, {{1, 1, 2}, {-1, -1, -2}});
    GadgetGraph sat_built = std::get<GadgetGraph>(gadget_es_wellcovered(needs_two, 1));
    CHECK(sat_built.graph.vertex_count() == 8);
    CHECK(is_Es(sat_built.graph, 1).holds);
    CHECK_FALSE(is_well_covered(sat_built.graph).holds);

    // With s = 2 the pre-test reaches the two-variable model instead.
    auto settled = gadget_es_wellcovered(needs_two, 2);
    REQUIRE(std::holds_alternative<KnownNegative>(settled));
    CHECK(std::get<KnownNegative>(settled).witness.assigned_count() <= 2);
}

TEST_CASE("pi of two edges") {
    GadgetGraph gg = pi_join(complete_graph(2), complete_graph(2));
    CHECK(gg.graph.vertex_count() == 8);
    CHECK(gg.graph.edge_count() == 10);
    CHECK(independence_number(gg.graph) == 3);
    CHECK(role_strings(gg) == std::vector<std::string>{"orig_g:0", "orig_g:1", "orig_h:0",
                                                       "orig_h:1", "pi_g:0", "pi_g:1", "pi_h:0",
                                                       "pi_h:1"});
    CHECK(gg.graph.has_edge(0, 4));
    CHECK(gg.graph.has_edge(4, 6));
    CHECK(gg.graph.has_edge(5, 7));
    CHECK_FALSE(gg.graph.has_edge(0, 2));
    CHECK_FALSE(gg.graph.has_edge(4, 5));
}

TEST_CASE("pi independence numbers follow the max formula") {
    GadgetGraph tiny = pi_join(complete_graph(1), complete_graph(1));
    CHECK(tiny.graph.vertex_count() == 4);
    CHECK(independence_number(tiny.graph) == 2);

    CHECK(independence_number(pi_join(empty_graph(0), complete_graph(2)).graph) == 2);

    Rng rng(47);
    for (int round = 0; round < 25; ++round) {
        int ng = rng.below(6);
        int nh = 1 + rng.below(5);
        int pg = rng.below(101);
        int ph = rng.below(101);
        Graph g = random_graph(rng, ng, pg);
        Graph h = random_graph(rng, nh, ph);
        GadgetGraph joined = pi_join(g, h);
        CHECK(joined.graph.vertex_count() == 2 * (ng + nh));
        int expected = std::max(ng + testsupport::brute_independence_number(h),
                                nh + testsupport::brute_independence_number(g));
        CHECK(independence_number(joined.graph) == expected);
    }
}

TEST_CASE("doubling preserves the extendability ladder") {
    GadgetGraph k1 = g_plus(complete_graph(1));
    CHECK(k1.graph.vertex_count() == 4);
    CHECK(independence_number(k1.graph) == 2);
    CHECK(is_well_covered(k1.graph).holds);
    CHECK(is_Es(k1.graph, 1).holds);

    CHECK(independence_number(g_plus(cycle_graph(5)).graph) == 7);

    Rng rng(53);
    for (int round = 0; round < 15; ++round) {
        int n = 1 + rng.below(5);
        int percent = rng.below(101);
        Graph g = random_graph(rng, n, percent);
        GadgetGraph doubled = g_plus(g);
        CHECK(independence_number(doubled.graph) ==
              n + testsupport::brute_independence_number(g));
        CHECK(is_Es(doubled.graph, 1).holds);
        CHECK(is_Es(doubled.graph, 2).holds == is_B_graph(g).holds);
    }
}

TEST_CASE("independence comparison rides on 1-extendability") {
    GadgetGraph equal = mis_equality_to_1ext(complete_graph(2), complete_graph(2));
    CHECK(equal.graph.vertex_count() == 8);
    CHECK(is_B_graph(equal.graph).holds);

    GadgetGraph unequal = mis_equality_to_1ext(complete_graph(3), empty_graph(3));
    CHECK(unequal.graph.vertex_count() == 12);
    CHECK_FALSE(is_B_graph(unequal.graph).holds);

    // The smaller side is padded with universal vertices at the top ids.
    GadgetGraph padded = mis_equality_to_1ext(complete_graph(1), complete_graph(3));
    CHECK(padded.graph.vertex_count() == 12);
    CHECK(padded.graph.has_edge(0, 1));
    CHECK(padded.graph.has_edge(0, 2));
    CHECK(padded.graph.has_edge(1, 2));
    CHECK(is_B_graph(padded.graph).holds);

    CHECK_THROWS_AS(mis_equality_to_1ext(empty_graph(0), complete_graph(2)), Error);
    CHECK_THROWS_AS(mis_equality_to_1ext(complete_graph(2), empty_graph(0)), Error);

    Rng rng(59);
    for (int round = 0; round < 25; ++round) {
        int ng = 1 + rng.below(5);
        int nh = 1 + rng.below(5);
        int pg = rng.below(101);
        int ph = rng.below(101);
        Graph g = random_graph(rng, ng, pg);
        Graph h = random_graph(rng, nh, ph);
        bool same_alpha = testsupport::brute_independence_number(g) ==
                          testsupport::brute_independence_number(h);
        CHECK(is_B_graph(mis_equality_to_1ext(g, h).graph).holds == same_alpha);
    }
}

TEST_CASE("domination gadget on a path") {
    GadgetGraph gg = domset_to_chordal_es(path_graph(4));
    CHECK(gg.graph.vertex_count() == 12);
    CHECK(gg.graph.edge_count() == 20);
    CHECK(role_strings(gg)[0] == "dom_c:0");
    CHECK(role_strings(gg)[4] == "dom_i:0");
    CHECK(role_strings(gg)[8] == "dom_ip:0");
    CHECK(testsupport::elimination_chordal(gg.graph));
    CHECK(is_B_graph(gg.graph).holds);
    CHECK(independence_number(gg.graph) == 5);

    // gamma(P4) = 2: still E1, no longer E2.
    CHECK(testsupport::brute_min_dominating_set(path_graph(4)) == 2);
    CHECK(is_Es(gg.graph, 1).holds);
    CHECK_FALSE(is_Es(gg.graph, 2).holds);

    GadgetGraph c4 = domset_to_chordal_es(cycle_graph(4));
    CHECK(is_Es(c4.graph, 1).holds);
    CHECK_FALSE(is_Es(c4.graph, 2).holds);
}

TEST_CASE("domination gadget input validation and edge rules") {
    CHECK_THROWS_AS(domset_to_chordal_es(empty_graph(0)), Error);
    CHECK_THROWS_AS(domset_to_chordal_es(complete_graph(1)), UniversalVertexPresentError);
    CHECK_THROWS_AS(domset_to_chordal_es(testsupport::star_graph(3)),
                    UniversalVertexPresentError);

    // The two readings agree exactly when no vertex is isolated.
    Graph p4 = path_graph(4);
    CHECK(domset_to_chordal_es(p4, DomsetEdgeRule::PerEdgeLiteral).graph.edges() ==
          domset_to_chordal_es(p4, DomsetEdgeRule::ClosedNeighborhood).graph.edges());

    Graph lonely = Graph::build(3, {{0, 1}});
    auto closed = domset_to_chordal_es(lonely, DomsetEdgeRule::ClosedNeighborhood);
    auto literal = domset_to_chordal_es(lonely, DomsetEdgeRule::PerEdgeLiteral);
    CHECK(closed.graph.edge_count() == 11);
    CHECK(literal.graph.edge_count() == 9);

    Rng rng(61);
    for (int round = 0; round < 25; ++round) {
        int n = 2 + rng.below(5);
        int percent = rng.below(100);
        Graph g;
        try {
            g = random_graph_no_universal(rng, n, percent);
        } catch (const Error&) {
            continue;
        }
        GadgetGraph gg = domset_to_chordal_es(g);
        CHECK(testsupport::elimination_chordal(gg.graph));
        CHECK(is_B_graph(gg.graph).holds);
        CHECK(independence_number(gg.graph) == n + 1);
        int gamma = testsupport::brute_min_dominating_set(g);
        for (int s = 1; s <= 3; ++s)
            CHECK(is_Es(gg.graph, s).holds == (gamma > s));
    }
}
