#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "report.hpp"
#include "wellcov/chordal.hpp"
#include "wellcov/cnf.hpp"
#include "wellcov/errors.hpp"
#include "wellcov/gadgets.hpp"
#include "wellcov/graph.hpp"
#include "wellcov/independent_sets.hpp"
#include "wellcov/oracle_algorithms.hpp"
#include "wellcov/recognizers.hpp"
#include "wellcov/sat_solver.hpp"
#include "wellcov/verify.hpp"

namespace {

using namespace wellcov;
using nlohmann::ordered_json;

constexpr int ExitHolds = 0;
constexpr int ExitFails = 1;
constexpr int ExitUsage = 2;
constexpr int ExitParse = 3;
constexpr int ExitMismatch = 4;
constexpr int ExitNegative = 5;

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return ExitUsage;
}

int fail_parse(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return ExitParse;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedGraph {
    std::string path;
    std::string raw;
    Graph graph;
};

LoadedGraph load_graph(const std::string& path) {
    LoadedGraph out;
    out.path = path;
    out.raw = slurp(path);
    out.graph = parse_edge_list(out.raw);
    return out;
}

struct LoadedFormula {
    std::string path;
    std::string raw;
    CnfFormula formula;
};

LoadedFormula load_formula(const std::string& path) {
    LoadedFormula out;
    out.path = path;
    out.raw = slurp(path);
    out.formula = parse_dimacs(out.raw);
    return out;
}

ordered_json input_json(const std::string& path, const std::string& raw, const Graph& g) {
    return {{"path", path},
            {"digest", cli::digest(raw)},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()}};
}

class Stopwatch {
public:
    long long ms() const {
        auto delta = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(delta).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const char* mode_name(OracleMode mode) {
    return mode == OracleMode::Combined ? "combined" : "per-set";
}

struct CheckOpts {
    std::string property;
    std::string algo = "brute";
    std::string path;
    std::string solver;
    std::string mode = "per-set";
    bool machine = false;
    bool force = false;
};

int run_check(const CheckOpts& opt) {
    Stopwatch clock;
    ClassQuery query;
    try {
        query = cli::parse_property(opt.property);
    } catch (const Error& e) {
        return fail_usage(e.what());
    }
    LoadedGraph in;
    try {
        in = load_graph(opt.path);
    } catch (const ParseError& e) {
        return fail_parse(e.what());
    }
    const Graph& g = in.graph;
    if (query.kind == ClassQuery::Kind::Shedding &&
        (query.parameter < 0 || query.parameter >= g.vertex_count()))
        return fail_usage("shedding vertex " + std::to_string(query.parameter) + " out of range");

    Verdict verdict;
    std::optional<OracleStats> stats;
    if (opt.algo == "brute") {
        if (g.vertex_count() > 26 && !opt.force)
            return fail_usage("input has " + std::to_string(g.vertex_count()) +
                              " vertices; exhaustive recognizers are capped at 26 (pass --force "
                              "to run anyway)");
        switch (query.kind) {
            case ClassQuery::Kind::WellCovered: verdict = is_well_covered(g); break;
            case ClassQuery::Kind::Wk: verdict = is_Wk_staples(g, query.parameter); break;
            case ClassQuery::Kind::KExtendable:
                verdict = is_k_extendable(g, query.parameter);
                break;
            case ClassQuery::Kind::Es: verdict = is_Es(g, query.parameter); break;
            case ClassQuery::Kind::BGraph: verdict = is_B_graph(g); break;
            case ClassQuery::Kind::Shedding: verdict = is_shedding(g, query.parameter); break;
        }
    } else if (opt.algo == "sat") {
        if (query.kind != ClassQuery::Kind::Es && query.kind != ClassQuery::Kind::BGraph &&
            query.kind != ClassQuery::Kind::KExtendable)
            return fail_usage("the sat algorithm supports es:S, b-graph, and extendable:K");
        OracleMode mode;
        if (opt.mode == "per-set")
            mode = OracleMode::PerSet;
        else if (opt.mode == "combined")
            mode = OracleMode::Combined;
        else
            return fail_usage("unknown oracle mode '" + opt.mode + "'");
        std::unique_ptr<SatOracle> solver;
        if (opt.solver.empty())
            solver = builtin_solver();
        else
            solver = std::make_unique<ExternalProcessSolver>(opt.solver);
        try {
            if (query.kind == ClassQuery::Kind::KExtendable) {
                auto [alpha, search_stats] = alpha_binary_search(g, *solver);
                auto [ok, query_stats] =
                    exact_k_extendable_queries(g, alpha, query.parameter, *solver, mode);
                verdict = ok ? Verdict::yes() : Verdict::no();
                stats = OracleStats{search_stats.calls + query_stats.calls, mode};
            } else {
                int s = query.kind == ClassQuery::Kind::BGraph ? 1 : query.parameter;
                auto [v, es_stats] = is_Es_via_oracle(g, s, *solver, mode);
                verdict = v;
                stats = es_stats;
            }
        } catch (const ExternalSolverError& e) {
            return fail_usage(e.what());
        }
    } else if (opt.algo == "chordal") {
        if (query.kind != ClassQuery::Kind::WellCovered && query.kind != ClassQuery::Kind::Wk &&
            query.kind != ClassQuery::Kind::BGraph)
            return fail_usage("the chordal algorithm supports well-covered, wk:K, and b-graph");
        try {
            if (query.kind == ClassQuery::Kind::BGraph)
                verdict = chordal_is_1_extendable(g);
            else
                verdict = chordal_is_Wk(
                    g, query.kind == ClassQuery::Kind::WellCovered ? 1 : query.parameter);
        } catch (const NotChordalError& e) {
            std::string cycle;
            for (int v : e.witness_cycle()) cycle += ' ' + std::to_string(v);
            std::cerr << "error: " << e.what() << " (cycle:" << cycle << ")\n";
            return ExitMismatch;
        }
    } else {
        return fail_usage("unknown algorithm '" + opt.algo + "'");
    }

    if (opt.machine) {
        ordered_json j{{"command", "check"},
                       {"property", query.to_string()},
                       {"algorithm", opt.algo},
                       {"input", input_json(in.path, in.raw, g)},
                       {"verdict", verdict.holds ? "holds" : "does-not-hold"},
                       {"certificate", cli::certificate_to_json(verdict.certificate)}};
        if (stats)
            j["oracle"] = ordered_json{{"calls", stats->calls}, {"mode", mode_name(stats->mode)}};
        else
            j["oracle"] = nullptr;
        j["wall_time_ms"] = clock.ms();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "property: " << query.to_string() << '\n'
                  << "algorithm: " << opt.algo << '\n'
                  << "input: " << in.path << " (n=" << g.vertex_count()
                  << ", m=" << g.edge_count() << ", " << cli::digest(in.raw) << ")\n"
                  << "verdict: " << (verdict.holds ? "holds" : "does-not-hold") << '\n'
                  << "certificate: " << cli::describe_certificate(verdict.certificate) << '\n';
        if (stats)
            std::cout << "oracle-calls: " << stats->calls << " (" << mode_name(stats->mode)
                      << ")\n";
        std::cout << "wall-time-ms: " << clock.ms() << '\n';
    }
    return verdict.holds ? ExitHolds : ExitFails;
}

struct GadgetOpts {
    std::string name;
    std::string cnf;
    std::string graph;
    std::string graph2;
    std::string out;
    std::string roles;
    bool machine = false;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out.flush()) throw Error("cannot write " + path);
}

int run_gadget(const GadgetOpts& opt) {
    Stopwatch clock;
    std::string family = opt.name;
    int parameter = 0;
    if (auto colon = opt.name.find(':'); colon != std::string::npos) {
        family = opt.name.substr(0, colon);
        try {
            parameter = std::stoi(opt.name.substr(colon + 1));
        } catch (const std::exception&) {
            return fail_usage("malformed gadget name '" + opt.name + "'");
        }
    }

    bool needs_cnf = family == "w2" || family == "wk" || family == "es";
    bool needs_graph = family == "pi" || family == "gplus" || family == "mis-eq" ||
                       family == "domset";
    bool needs_graph2 = family == "pi" || family == "mis-eq";
    if (!needs_cnf && !needs_graph) return fail_usage("unknown gadget '" + opt.name + "'");
    if (family == "wk" && parameter < 2) return fail_usage("wk:K needs K >= 2");
    if (family == "es" && parameter < 1) return fail_usage("es:S needs S >= 1");
    if (needs_cnf && opt.cnf.empty()) return fail_usage("gadget " + family + " needs --cnf");
    if (needs_graph && opt.graph.empty()) return fail_usage("gadget " + family + " needs --graph");
    if (needs_graph2 && opt.graph2.empty())
        return fail_usage("gadget " + family + " needs --graph2");

    LoadedFormula cnf;
    LoadedGraph graph, graph2;
    ordered_json inputs = ordered_json::array();
    try {
        if (needs_cnf) {
            cnf = load_formula(opt.cnf);
            inputs.push_back({{"path", cnf.path}, {"digest", cli::digest(cnf.raw)}});
        }
        if (needs_graph) {
            graph = load_graph(opt.graph);
            inputs.push_back({{"path", graph.path}, {"digest", cli::digest(graph.raw)}});
        }
        if (needs_graph2) {
            graph2 = load_graph(opt.graph2);
            inputs.push_back({{"path", graph2.path}, {"digest", cli::digest(graph2.raw)}});
        }
    } catch (const ParseError& e) {
        return fail_parse(e.what());
    }

    GadgetGraph built;
    try {
        if (family == "w2") {
            built = gadget_w2_shedding(cnf.formula);
        } else if (family == "wk") {
            built = gadget_wk(cnf.formula, parameter);
        } else if (family == "es") {
            GadgetOrVerdict result = gadget_es_wellcovered(cnf.formula, parameter);
            if (const auto* neg = std::get_if<KnownNegative>(&result)) {
                std::cerr << "known negative: " << neg->reason << '\n';
                std::string shown = neg->witness.to_string();
                std::cerr << "witness: " << (shown.empty() ? "(empty assignment)" : shown)
                          << '\n';
                if (opt.machine) {
                    ordered_json j{{"command", "gadget"},
                                   {"name", opt.name},
                                   {"inputs", inputs},
                                   {"result", "known-negative"},
                                   {"reason", neg->reason},
                                   {"witness", neg->witness.to_string()},
                                   {"wall_time_ms", clock.ms()}};
                    std::cout << j.dump(2) << '\n';
                }
                return ExitNegative;
            }
            built = std::get<GadgetGraph>(result);
        } else if (family == "pi") {
            built = pi_join(graph.graph, graph2.graph);
        } else if (family == "gplus") {
            built = g_plus(graph.graph);
        } else if (family == "mis-eq") {
            built = mis_equality_to_1ext(graph.graph, graph2.graph);
        } else {
            built = domset_to_chordal_es(graph.graph);
        }
    } catch (const NotThreeCnfError& e) {
        return fail_usage(e.what());
    } catch (const TautologicalClauseError& e) {
        return fail_usage(e.what());
    } catch (const UniversalVertexPresentError& e) {
        return fail_usage(e.what());
    } catch (const Error& e) {
        return fail_usage(e.what());
    }

    std::string roles_path = opt.roles.empty() ? opt.out + ".roles" : opt.roles;
    std::string edge_text = write_edge_list(built.graph);
    if (built.distinguished)
        edge_text += "# distinguished " + std::to_string(*built.distinguished) + '\n';
    try {
        write_file(opt.out, edge_text);
        write_file(roles_path, write_role_map(built));
    } catch (const Error& e) {
        return fail_usage(e.what());
    }

    if (opt.machine) {
        ordered_json output{{"path", opt.out},
                            {"roles_path", roles_path},
                            {"vertices", built.graph.vertex_count()},
                            {"edges", built.graph.edge_count()}};
        if (built.distinguished)
            output["distinguished"] = *built.distinguished;
        else
            output["distinguished"] = nullptr;
        ordered_json j{{"command", "gadget"},
                       {"name", opt.name},
                       {"inputs", inputs},
                       {"result", "built"},
                       {"output", output},
                       {"wall_time_ms", clock.ms()}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "wrote " << built.graph.vertex_count() << "-vertex gadget ("
                  << built.graph.edge_count() << " edges) to " << opt.out << '\n'
                  << "roles: " << roles_path << '\n';
        if (built.distinguished)
            std::cout << "distinguished vertex: " << *built.distinguished << '\n';
    }
    return ExitHolds;
}

struct VerifyOpts {
    std::string suite;
    int size = -1;
    int samples = -1;
    std::uint64_t seed = 0;
    bool machine = false;
};

int run_verify(const VerifyOpts& opt) {
    Stopwatch clock;
    SuiteResult result;
    try {
        result = run_suite(opt.suite, SuiteOptions{opt.size, opt.samples, opt.seed});
    } catch (const Error& e) {
        return fail_usage(e.what());
    }
    if (opt.machine) {
        ordered_json j{{"command", "verify"},
                       {"suite", result.suite},
                       {"size", opt.size},
                       {"samples", opt.samples},
                       {"seed", opt.seed},
                       {"checked", result.checked},
                       {"passed", result.passed}};
        if (result.passed)
            j["counterexample"] = nullptr;
        else
            j["counterexample"] = result.counterexample;
        j["notes"] = result.notes;
        j["wall_time_ms"] = clock.ms();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "suite: " << result.suite << '\n'
                  << "checked: " << result.checked << '\n'
                  << "result: " << (result.passed ? "pass" : "fail") << '\n';
        if (!result.passed) std::cout << "counterexample: " << result.counterexample << '\n';
        for (const auto& note : result.notes) std::cout << "note: " << note << '\n';
        std::cout << "wall-time-ms: " << clock.ms() << '\n';
    }
    return result.passed ? ExitHolds : ExitFails;
}

struct AlphaOpts {
    std::string algo = "brute";
    std::string path;
    std::string solver;
    bool machine = false;
};

int run_alpha(const AlphaOpts& opt) {
    Stopwatch clock;
    if (opt.algo != "brute" && opt.algo != "sat")
        return fail_usage("unknown algorithm '" + opt.algo + "'");
    LoadedGraph in;
    try {
        in = load_graph(opt.path);
    } catch (const ParseError& e) {
        return fail_parse(e.what());
    }
    int alpha = 0;
    std::optional<VertexSet> witness;
    std::optional<OracleStats> stats;
    if (opt.algo == "brute") {
        witness = maximum_independent_set(in.graph);
        alpha = witness->size();
    } else {
        std::unique_ptr<SatOracle> solver;
        if (opt.solver.empty())
            solver = builtin_solver();
        else
            solver = std::make_unique<ExternalProcessSolver>(opt.solver);
        try {
            auto [value, search_stats] = alpha_binary_search(in.graph, *solver);
            alpha = value;
            stats = search_stats;
        } catch (const ExternalSolverError& e) {
            return fail_usage(e.what());
        }
    }
    if (opt.machine) {
        ordered_json j{{"command", "alpha"},
                       {"algorithm", opt.algo},
                       {"input", input_json(in.path, in.raw, in.graph)},
                       {"alpha", alpha}};
        if (witness) {
            ordered_json ids = ordered_json::array();
            for (int v : *witness) ids.push_back(v);
            j["witness"] = ids;
        } else {
            j["witness"] = nullptr;
        }
        if (stats)
            j["oracle"] = ordered_json{{"calls", stats->calls}, {"mode", "per-set"}};
        else
            j["oracle"] = nullptr;
        j["wall_time_ms"] = clock.ms();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "alpha: " << alpha << '\n';
        if (witness) std::cout << "witness: " << witness->to_string() << '\n';
        if (stats) std::cout << "oracle-calls: " << stats->calls << '\n';
        std::cout << "wall-time-ms: " << clock.ms() << '\n';
    }
    return ExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-covered graph recognizers, reduction gadgets, and verification suites"};
    app.require_subcommand(1);

    CheckOpts check;
    CLI::App* check_cmd = app.add_subcommand("check", "Decide a graph-class membership");
    check_cmd->add_option("--property", check.property,
                          "well-covered, wk:K, extendable:K, es:S, b-graph, or shedding:V")
        ->required();
    check_cmd->add_option("--algo", check.algo, "brute, sat, or chordal");
    check_cmd->add_option("graph", check.path, "edge-list file")->required();
    check_cmd->add_option("--solver", check.solver, "external SAT solver command (sat algo)");
    check_cmd->add_option("--mode", check.mode, "oracle mode: per-set or combined");
    check_cmd->add_flag("--machine", check.machine, "structured JSON report");
    check_cmd->add_flag("--force", check.force, "run exhaustive recognizers above 26 vertices");

    GadgetOpts gadget;
    CLI::App* gadget_cmd = app.add_subcommand("gadget", "Build a reduction instance");
    gadget_cmd->add_option("--name", gadget.name, "w2, wk:K, es:S, pi, gplus, mis-eq, or domset")
        ->required();
    gadget_cmd->add_option("--cnf", gadget.cnf, "DIMACS CNF input");
    gadget_cmd->add_option("--graph", gadget.graph, "edge-list input");
    gadget_cmd->add_option("--graph2", gadget.graph2, "second edge-list input");
    gadget_cmd->add_option("--out", gadget.out, "output edge-list path")->required();
    gadget_cmd->add_option("--roles", gadget.roles, "role sidecar path (default: <out>.roles)");
    gadget_cmd->add_flag("--machine", gadget.machine, "structured JSON report");

    VerifyOpts verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a randomized self-check suite");
    verify_cmd->add_option("--suite", verify.suite, "suite name (see README)")->required();
    verify_cmd->add_option("--size", verify.size, "size bound (suite default if omitted)");
    verify_cmd->add_option("--samples", verify.samples, "sample count (suite default if omitted)");
    verify_cmd->add_option("--seed", verify.seed, "random seed");
    verify_cmd->add_flag("--machine", verify.machine, "structured JSON report");

    AlphaOpts alpha;
    CLI::App* alpha_cmd = app.add_subcommand("alpha", "Compute the independence number");
    alpha_cmd->add_option("--algo", alpha.algo, "brute or sat");
    alpha_cmd->add_option("graph", alpha.path, "edge-list file")->required();
    alpha_cmd->add_option("--solver", alpha.solver, "external SAT solver command (sat algo)");
    alpha_cmd->add_flag("--machine", alpha.machine, "structured JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ExitUsage;
    }

    try {
        if (check_cmd->parsed()) return run_check(check);
        if (gadget_cmd->parsed()) return run_gadget(gadget);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (alpha_cmd->parsed()) return run_alpha(alpha);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ExitUsage;
    }
    return ExitUsage;
}
