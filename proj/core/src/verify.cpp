#include "wellcov/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "wellcov/chordal.hpp"
#include "wellcov/cnf.hpp"
#include "wellcov/errors.hpp"
#include "wellcov/gadgets.hpp"
#include "wellcov/generators.hpp"
#include "wellcov/graph.hpp"
#include "wellcov/independent_sets.hpp"
#include "wellcov/oracle_algorithms.hpp"
#include "wellcov/recognizers.hpp"
#include "wellcov/sat_solver.hpp"

namespace wellcov {

namespace {

std::string format_formula(const CnfFormula& f) {
    std::string out = "vars=" + std::to_string(f.num_vars) + " m=" +
                      std::to_string(f.clause_count()) + " [";
    for (const auto& clause : f.clauses) {
        out += '(';
        for (size_t i = 0; i < clause.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(clause[i]);
        }
        out += ')';
    }
    out += ']';
    return out;
}

std::string format_graph(const Graph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + " edges=[";
    for (auto [u, v] : g.edges())
        out += '(' + std::to_string(u) + ',' + std::to_string(v) + ')';
    out += ']';
    return out;
}

void fail(SuiteResult& r, std::string what) {
    r.passed = false;
    r.counterexample = std::move(what);
}

bool same_graph(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

/// Reconstructs the edge set a gadget's role labels imply (together with the
/// source formula/graphs) and compares it with the stored graph.
bool roles_match(const GadgetGraph& gg, const CnfFormula* f, const Graph* side_g,
                 const Graph* side_h) {
    using Kind = VertexRole::Kind;
    const int n = gg.graph.vertex_count();
    if (static_cast<int>(gg.roles.size()) != n) return false;

    std::vector<int> clique_k, clique_u, apexes;
    std::map<int, int> cls, tri_u, tri_ubar, tri_w, og, oh, pg, ph, dc, di, dip;
    std::map<int, std::vector<int>> block;
    struct LiteralCopy {
        int vertex;
        int var;
        bool positive;
    };
    std::vector<LiteralCopy> copies;
    for (int v = 0; v < n; ++v) {
        const VertexRole& role = gg.roles[v];
        switch (role.kind) {
            case Kind::CliqueK:
                clique_k.push_back(v);
                cls[role.index] = v;
                break;
            case Kind::Apex: apexes.push_back(v); break;
            case Kind::CliqueU: clique_u.push_back(v); break;
            case Kind::VarBlock:
                block[role.index].push_back(v);
                copies.push_back({v, role.index, role.positive});
                break;
            case Kind::TriangleU: tri_u[role.index] = v; break;
            case Kind::TriangleUbar: tri_ubar[role.index] = v; break;
            case Kind::TriangleW: tri_w[role.index] = v; break;
            case Kind::OriginalG: og[role.index] = v; break;
            case Kind::OriginalH: oh[role.index] = v; break;
            case Kind::PiSideG: pg[role.index] = v; break;
            case Kind::PiSideH: ph[role.index] = v; break;
            case Kind::DomCliqueC: dc[role.index] = v; break;
            case Kind::DomI: di[role.index] = v; break;
            case Kind::DomIPrime: dip[role.index] = v; break;
        }
    }

    std::vector<std::pair<int, int>> edges;
    auto pairwise = [&](const std::vector<int>& vs) {
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) edges.emplace_back(vs[a], vs[b]);
    };
    auto occurs = [](const std::vector<int>& clause, int lit) {
        return std::find(clause.begin(), clause.end(), lit) != clause.end();
    };

    try {
        pairwise(clique_k);
        pairwise(clique_u);
        for (int a : clique_k)
            for (int b : clique_u) edges.emplace_back(a, b);
        for (int a : apexes)
            for (int b : clique_k) edges.emplace_back(a, b);
        for (const auto& [var, vs] : block) pairwise(vs);
        for (const auto& [var, uv] : tri_u) {
            int ub = tri_ubar.at(var);
            int w = tri_w.at(var);
            edges.emplace_back(uv, ub);
            edges.emplace_back(uv, w);
            edges.emplace_back(ub, w);
        }
        if (f) {
            for (const LiteralCopy& c : copies)
                for (int j = 0; j < f->clause_count(); ++j)
                    if (occurs(f->clauses[j], c.positive ? c.var : -c.var))
                        edges.emplace_back(c.vertex, cls.at(j + 1));
            for (const auto& [var, uv] : tri_u)
                for (int j = 0; j < f->clause_count(); ++j) {
                    if (occurs(f->clauses[j], var)) edges.emplace_back(uv, cls.at(j + 1));
                    if (occurs(f->clauses[j], -var))
                        edges.emplace_back(tri_ubar.at(var), cls.at(j + 1));
                }
        }
        if (!di.empty()) {
            if (!side_g) return false;
            std::vector<int> cvec;
            for (const auto& [v, vtx] : dc) cvec.push_back(vtx);
            pairwise(cvec);
            for (const auto& [v, vtx] : di) {
                edges.emplace_back(vtx, dip.at(v));
                edges.emplace_back(vtx, dc.at(v));
                for (int w : side_g->neighbors(v)) edges.emplace_back(vtx, dc.at(w));
            }
        } else {
            if (side_g) {
                for (auto [u, v] : side_g->edges()) edges.emplace_back(og.at(u), og.at(v));
                for (const auto& [u, vtx] : pg) edges.emplace_back(og.at(u), vtx);
            }
            if (side_h) {
                for (auto [u, v] : side_h->edges()) edges.emplace_back(oh.at(u), oh.at(v));
                for (const auto& [u, vtx] : ph) edges.emplace_back(oh.at(u), vtx);
            }
            for (const auto& [ua, va] : pg)
                for (const auto& [ub, vb] : ph) edges.emplace_back(va, vb);
        }
        return same_graph(Graph::build(n, edges), gg.graph);
    } catch (const std::out_of_range&) {
        return false;
    }
}

/// Exhaustive corpus (all formulas with <= max_vars variables and <= 4
/// clauses) plus seeded random formulas with <= 3 variables, <= 5 clauses.
std::vector<CnfFormula> suite_formulas(int max_vars, int samples, std::uint64_t seed) {
    auto formulas = all_small_three_cnf(max_vars, 4);
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        int nv = 1 + rng.below(3);
        int m = rng.below(6);
        formulas.push_back(random_three_cnf(rng, nv, m));
    }
    return formulas;
}

bool partial_sat_exists(const CnfFormula& f, int s) {
    int nv = f.num_vars;
    for (unsigned subset = 0; subset < (1u << nv); ++subset) {
        if (std::popcount(subset) > s) continue;
        unsigned signs = subset;
        while (true) {
            Assignment a(nv);
            for (int v = 1; v <= nv; ++v)
                if (subset >> (v - 1) & 1u) a.assign(v, (signs >> (v - 1) & 1u) != 0);
            if (evaluate(f, a) == Evaluation::Satisfied) return true;
            if (signs == 0) break;
            signs = (signs - 1) & subset;
        }
    }
    return false;
}

int min_dominating_set_size(const Graph& g) {
    int n = g.vertex_count();
    if (n > 25) throw InstanceTooLargeError("dominating-set search capped at 25 vertices");
    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (int w : g.neighbors(v)) closed[v] |= 1u << w;
    }
    const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    int best = n;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) >= best && mask != 0) continue;
        std::uint32_t covered = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) covered |= closed[v];
        if (covered == full) best = std::popcount(mask);
        if (mask == full) break;
    }
    return best;
}

Graph pad_with_universal(const Graph& g, int n) {
    auto edges = g.edges();
    for (int v = g.vertex_count(); v < n; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

SuiteResult suite_gadget_w2(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "gadget-w2";
    int size = o.size < 0 ? 2 : o.size;
    int samples = o.samples < 0 ? 200 : o.samples;
    for (const auto& f : suite_formulas(size, samples, o.seed)) {
        ++r.checked;
        bool unsat = !brute_force_satisfiable(f).has_value();
        GadgetGraph gg = gadget_w2_shedding(f);
        const Graph& g = gg.graph;
        if (!is_well_covered(g).holds) {
            fail(r, format_formula(f) + ": output is not well-covered");
            return r;
        }
        if (independence_number(g) != f.num_vars + 1) {
            fail(r, format_formula(f) + ": alpha != n+1");
            return r;
        }
        if (is_Wk_staples(g, 2).holds != unsat) {
            fail(r, format_formula(f) + ": W2 verdict disagrees with unsatisfiability (unsat=" +
                        std::to_string(unsat) + ")");
            return r;
        }
        if (is_shedding(g, *gg.distinguished).holds != unsat) {
            fail(r, format_formula(f) + ": shedding verdict disagrees with unsatisfiability");
            return r;
        }
        if (!roles_match(gg, &f, nullptr, nullptr)) {
            fail(r, format_formula(f) + ": role labels do not reproduce the edge set");
            return r;
        }
    }
    return r;
}

SuiteResult suite_gadget_wk(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "gadget-wk";
    int size = o.size < 0 ? 2 : o.size;
    int samples = o.samples < 0 ? 200 : o.samples;
    for (const auto& f : suite_formulas(size, samples, o.seed)) {
        ++r.checked;
        bool unsat = !brute_force_satisfiable(f).has_value();
        for (int k = 2; k <= 3; ++k) {
            GadgetGraph gg = gadget_wk(f, k);
            const Graph& g = gg.graph;
            if (!is_Wk_staples(g, k - 1).holds) {
                fail(r, format_formula(f) + " k=" + std::to_string(k) + ": output is not W(k-1)");
                return r;
            }
            if (is_Wk_staples(g, k).holds != unsat) {
                fail(r, format_formula(f) + " k=" + std::to_string(k) +
                            ": Wk verdict disagrees with unsatisfiability");
                return r;
            }
            if (!roles_match(gg, &f, nullptr, nullptr)) {
                fail(r, format_formula(f) + " k=" + std::to_string(k) +
                            ": role labels do not reproduce the edge set");
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_gadget_es(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "gadget-es";
    int size = o.size < 0 ? 2 : o.size;
    int samples = o.samples < 0 ? 200 : o.samples;
    bool dummy_checked[3] = {false, false, false};
    for (const auto& f : suite_formulas(size, samples, o.seed)) {
        ++r.checked;
        bool unsat = !brute_force_satisfiable(f).has_value();
        for (int s = 1; s <= 2; ++s) {
            bool expected_fire = partial_sat_exists(f, s);
            GadgetOrVerdict out = gadget_es_wellcovered(f, s);
            if (const auto* neg = std::get_if<KnownNegative>(&out)) {
                if (!expected_fire) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) +
                                ": pre-test fired but no small satisfying assignment exists");
                    return r;
                }
                if (evaluate(f, neg->witness) != Evaluation::Satisfied ||
                    neg->witness.assigned_count() > s) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) +
                                ": pre-test witness invalid (" + neg->witness.to_string() + ")");
                    return r;
                }
                if (!neg->dummy) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) + ": missing dummy");
                    return r;
                }
                if (!dummy_checked[s]) {
                    dummy_checked[s] = true;
                    if (is_well_covered(neg->dummy->graph).holds ||
                        !is_Es(neg->dummy->graph, s).holds) {
                        fail(r, "s=" + std::to_string(s) +
                                    ": dummy instance is not (Es and non-well-covered)");
                        return r;
                    }
                }
            } else {
                const auto& gg = std::get<GadgetGraph>(out);
                const Graph& g = gg.graph;
                if (expected_fire) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) +
                                ": pre-test missed a small satisfying assignment");
                    return r;
                }
                if (!is_Es(g, s).holds) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) + ": output is not Es");
                    return r;
                }
                if (is_well_covered(g).holds != unsat) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) +
                                ": well-coveredness disagrees with unsatisfiability");
                    return r;
                }
                if (independence_number(g) != f.num_vars + 1) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) + ": alpha != n+1");
                    return r;
                }
                if (!roles_match(gg, &f, nullptr, nullptr)) {
                    fail(r, format_formula(f) + " s=" + std::to_string(s) +
                                ": role labels do not reproduce the edge set");
                    return r;
                }
            }
        }
    }
    return r;
}

SuiteResult suite_pi_alpha(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "pi-alpha";
    int size = o.size < 0 ? 8 : o.size;
    int samples = o.samples < 0 ? 300 : o.samples;
    Rng rng(o.seed);
    for (int i = 0; i < samples; ++i) {
        ++r.checked;
        int ng = rng.below(size + 1);
        int nh = rng.below(size + 1);
        int percent_g = rng.below(101);
        int percent_h = rng.below(101);
        Graph g = random_graph(rng, ng, percent_g);
        Graph h = random_graph(rng, nh, percent_h);
        GadgetGraph gg = pi_join(g, h);
        std::string label = "G " + format_graph(g) + "; H " + format_graph(h);
        if (gg.graph.vertex_count() != 2 * (ng + nh)) {
            fail(r, label + ": vertex count != 2(|G|+|H|)");
            return r;
        }
        int want = std::max(ng + independence_number(h), nh + independence_number(g));
        if (independence_number(gg.graph) != want) {
            fail(r, label + ": alpha(pi) != max(|G|+alpha(H), |H|+alpha(G))");
            return r;
        }
        if (!roles_match(gg, nullptr, &g, &h)) {
            fail(r, label + ": role labels do not reproduce the edge set");
            return r;
        }
    }
    return r;
}

SuiteResult suite_gplus_lemma(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "gplus-lemma";
    int size = o.size < 0 ? 6 : o.size;
    int samples = o.samples < 0 ? 200 : o.samples;
    Rng rng(o.seed);
    for (int i = 0; i < samples; ++i) {
        ++r.checked;
        int n = rng.below(size + 1);
        int percent = rng.below(101);
        Graph g = random_graph(rng, n, percent);
        GadgetGraph plus = g_plus(g);
        for (int s = 1; s <= 2; ++s) {
            if (is_Es(plus.graph, s).holds != is_Es(g, s - 1).holds) {
                fail(r, format_graph(g) + " s=" + std::to_string(s) +
                            ": G+ in Es does not match G in E(s-1)");
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_mis_eq(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "mis-eq";
    int size = o.size < 0 ? 7 : o.size;
    int samples = o.samples < 0 ? 300 : o.samples;
    Rng rng(o.seed);
    for (int i = 0; i < samples; ++i) {
        ++r.checked;
        int ng = 1 + rng.below(size);
        int nh = 1 + rng.below(size);
        int percent_g = rng.below(101);
        int percent_h = rng.below(101);
        Graph g = random_graph(rng, ng, percent_g);
        Graph h = random_graph(rng, nh, percent_h);
        GadgetGraph gg = mis_equality_to_1ext(g, h);
        std::string label = "G " + format_graph(g) + "; H " + format_graph(h);
        bool equal_alpha = independence_number(g) == independence_number(h);
        if (is_B_graph(gg.graph).holds != equal_alpha) {
            fail(r, label + ": 1-extendability does not match alpha(G)=alpha(H)");
            return r;
        }
        int n = std::max(ng, nh);
        Graph padded_g = pad_with_universal(g, n);
        Graph padded_h = pad_with_universal(h, n);
        if (!roles_match(gg, nullptr, &padded_g, &padded_h)) {
            fail(r, label + ": role labels do not reproduce the edge set");
            return r;
        }
    }
    return r;
}

SuiteResult suite_domset(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "domset";
    int size = o.size < 0 ? 7 : o.size;
    int samples = o.samples < 0 ? 200 : o.samples;
    Rng rng(o.seed);
    for (int i = 0; i < samples; ++i) {
        ++r.checked;
        int n = 2 + rng.below(size - 1);
        int percent = rng.below(100);
        Graph g = random_graph_no_universal(rng, n, percent);
        GadgetGraph gg = domset_to_chordal_es(g);
        const Graph& built = gg.graph;
        std::string label = format_graph(g);
        if (!is_chordal(built)) {
            fail(r, label + ": output is not chordal");
            return r;
        }
        if (!is_B_graph(built).holds) {
            fail(r, label + ": output is not 1-extendable");
            return r;
        }
        if (independence_number(built) != n + 1) {
            fail(r, label + ": alpha != n+1");
            return r;
        }
        if (!roles_match(gg, nullptr, &g, nullptr)) {
            fail(r, label + ": role labels do not reproduce the edge set");
            return r;
        }
        int gamma = min_dominating_set_size(g);
        Graph literal = domset_to_chordal_es(g, DomsetEdgeRule::PerEdgeLiteral).graph;
        bool es_closed = true;
        bool es_literal = true;
        for (int s = 1; s <= 3; ++s) {
            es_closed = es_closed && is_k_extendable(built, s).holds;
            es_literal = es_literal && is_k_extendable(literal, s).holds;
            if (!es_closed != (gamma <= s)) {
                fail(r, label + " s=" + std::to_string(s) +
                            ": Es verdict does not match dominating-set size " +
                            std::to_string(gamma));
                return r;
            }
            if (es_closed != es_literal && r.notes.size() < 8)
                r.notes.push_back(label + " s=" + std::to_string(s) +
                                  ": closed-neighborhood and per-edge readings disagree");
        }
    }
    return r;
}

SuiteResult suite_chordal_agree(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "chordal-agree";
    int size = o.size < 0 ? 20 : o.size;
    int samples = o.samples < 0 ? 1000 : o.samples;
    Rng rng(o.seed);
    for (int i = 0; i < samples; ++i) {
        ++r.checked;
        int n = rng.below(size + 1);
        int keep = rng.below(101);
        Graph g = random_chordal_graph(rng, n, keep);
        std::string label = format_graph(g);
        if (!is_chordal(g)) {
            fail(r, label + ": generator produced a non-chordal graph");
            return r;
        }
        Verdict brute_ext = is_B_graph(g);
        Verdict chordal_ext = chordal_is_1_extendable(g);
        if (brute_ext.holds != chordal_ext.holds) {
            fail(r, label + ": 1-extendability verdicts disagree");
            return r;
        }
        if (!reverify_certificate(g, ClassQuery::b_graph(), chordal_ext) ||
            !reverify_certificate(g, ClassQuery::b_graph(), brute_ext)) {
            fail(r, label + ": a 1-extendability certificate does not re-verify");
            return r;
        }
        for (int k = 1; k <= 3; ++k) {
            Verdict staples = is_Wk_staples(g, k);
            Verdict chordal_wk = chordal_is_Wk(g, k);
            if (staples.holds != chordal_wk.holds) {
                fail(r, label + " k=" + std::to_string(k) + ": Wk verdicts disagree");
                return r;
            }
            if (!reverify_certificate(g, ClassQuery::wk(k), chordal_wk) ||
                !reverify_certificate(g, ClassQuery::wk(k), staples)) {
                fail(r, label + " k=" + std::to_string(k) +
                            ": a Wk certificate does not re-verify");
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_oracle_agree(const SuiteOptions& o) {
    SuiteResult r;
    r.suite = "oracle-agree";
    int size = o.size < 0 ? 12 : o.size;
    int samples = o.samples < 0 ? 500 : o.samples;
    Rng rng(o.seed);
    DpllSolver solver;
    for (int i = 0; i < samples; ++i) {
        ++r.checked;
        int n = rng.below(size + 1);
        int percent = rng.below(101);
        int s = 1 + rng.below(2);
        Graph g = random_graph(rng, n, percent);
        std::string label = format_graph(g) + " s=" + std::to_string(s);
        int bound = std::bit_width(static_cast<unsigned>(n)) + 1;
        auto [alpha, astats] = alpha_binary_search(g, solver);
        if (alpha != independence_number(g)) {
            fail(r, label + ": binary-search alpha is wrong");
            return r;
        }
        if (astats.calls > bound) {
            fail(r, label + ": binary search used " + std::to_string(astats.calls) +
                        " oracle calls (bound " + std::to_string(bound) + ")");
            return r;
        }
        bool truth = is_Es(g, s).holds;
        for (OracleMode mode : {OracleMode::PerSet, OracleMode::Combined}) {
            auto [verdict, stats] = is_Es_via_oracle(g, s, solver, mode);
            if (verdict.holds != truth) {
                fail(r, label + ": oracle Es verdict disagrees with the brute recognizer");
                return r;
            }
            if (mode == OracleMode::Combined && stats.calls > bound + 1) {
                fail(r, label + ": combined mode used " + std::to_string(stats.calls) +
                            " oracle calls (bound " + std::to_string(bound + 1) + ")");
                return r;
            }
        }
    }
    return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "gadget-w2") return suite_gadget_w2(options);
    if (name == "gadget-wk") return suite_gadget_wk(options);
    if (name == "gadget-es") return suite_gadget_es(options);
    if (name == "pi-alpha") return suite_pi_alpha(options);
    if (name == "gplus-lemma") return suite_gplus_lemma(options);
    if (name == "mis-eq") return suite_mis_eq(options);
    if (name == "domset") return suite_domset(options);
    if (name == "chordal-agree") return suite_chordal_agree(options);
    if (name == "oracle-agree") return suite_oracle_agree(options);
    throw Error("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"gadget-w2", "gadget-wk", "gadget-es",     "pi-alpha",    "gplus-lemma",
            "mis-eq",    "domset",    "chordal-agree", "oracle-agree"};
}

}  // namespace wellcov
