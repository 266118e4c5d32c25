#include "wellcov/sat_solver.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "wellcov/errors.hpp"

namespace wellcov {

std::optional<Assignment> SatOracle::solve(const CnfFormula& f) {
    ++calls_;
    std::optional<Assignment> result = run(f);
    if (!result) return result;
    for (int v = 1; v <= f.num_vars; ++v)
        if (!result->is_assigned(v)) result->assign(v, false);
    if (evaluate(f, *result) != Evaluation::Satisfied)
        throw ExternalSolverError("solver '" + name() + "' returned a non-satisfying model");
    return result;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

struct ComponentDpll {
    const CnfFormula& f;
    const std::vector<int>& clause_ids;
    const std::vector<int>& vars;  // ascending
    Assignment& a;
    std::vector<int> trail;

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            a.unassign(trail.back());
            trail.pop_back();
        }
    }

    Evaluation propagate() {
        for (bool changed = true; changed;) {
            changed = false;
            bool all_satisfied = true;
            for (int ci : clause_ids) {
                const auto& clause = f.clauses[ci];
                bool satisfied = false;
                int open = 0;
                int open_lit = 0;
                for (int lit : clause) {
                    if (a.satisfies(lit)) {
                        satisfied = true;
                        break;
                    }
                    if (!a.is_assigned(lit > 0 ? lit : -lit)) {
                        ++open;
                        open_lit = lit;
                    }
                }
                if (satisfied) continue;
                if (open == 0) return Evaluation::Falsified;
                all_satisfied = false;
                if (open == 1) {
                    a.assign(open_lit > 0 ? open_lit : -open_lit, open_lit > 0);
                    trail.push_back(open_lit > 0 ? open_lit : -open_lit);
                    changed = true;
                }
            }
            if (all_satisfied) return Evaluation::Satisfied;
        }
        return Evaluation::Undetermined;
    }

    bool solve() {
        std::size_t mark = trail.size();
        Evaluation ev = propagate();
        if (ev == Evaluation::Satisfied) return true;
        if (ev == Evaluation::Undetermined) {
            int branch = 0;
            for (int v : vars)
                if (!a.is_assigned(v)) {
                    branch = v;
                    break;
                }
            for (bool value : {true, false}) {
                std::size_t inner = trail.size();
                a.assign(branch, value);
                trail.push_back(branch);
                if (solve()) return true;
                undo_to(inner);
            }
        }
        undo_to(mark);
        return false;
    }
};

}  // namespace

std::optional<Assignment> DpllSolver::run(const CnfFormula& f) {
    Assignment a(f.num_vars);
    DisjointSets components(f.num_vars + 1);
    for (const auto& clause : f.clauses) {
        if (clause.empty()) return std::nullopt;
        int first = std::abs(clause[0]);
        for (int lit : clause) components.unite(first, std::abs(lit));
    }
    std::vector<std::vector<int>> clauses_of(f.num_vars + 1);
    std::vector<std::vector<int>> vars_of(f.num_vars + 1);
    for (int ci = 0; ci < f.clause_count(); ++ci)
        clauses_of[components.find(std::abs(f.clauses[ci][0]))].push_back(ci);
    for (int v = 1; v <= f.num_vars; ++v) vars_of[components.find(v)].push_back(v);
    for (int root = 1; root <= f.num_vars; ++root) {
        if (clauses_of[root].empty()) continue;
        ComponentDpll dpll{f, clauses_of[root], vars_of[root], a, {}};
        if (!dpll.solve()) return std::nullopt;
    }
    return a;
}

std::optional<Assignment> ExternalProcessSolver::run(const CnfFormula& f) {
    static int sequence = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("wellcov-sat-" + std::to_string(::getpid()) + "-" + std::to_string(sequence++) +
                 ".cnf");
    {
        std::ofstream out(path);
        if (!out) throw ExternalSolverError("cannot write " + path.string());
        out << write_dimacs(f);
    }
    std::string output;
    {
        std::string cmd = command_ + " " + path.string();
        FILE* pipe = ::popen(cmd.c_str(), "r");
        if (!pipe) {
            std::filesystem::remove(path);
            throw ExternalSolverError("cannot run '" + command_ + "'");
        }
        char buf[4096];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
        ::pclose(pipe);
    }
    std::filesystem::remove(path);

    std::istringstream in(output);
    std::string verdict;
    if (!(in >> verdict)) throw ExternalSolverError("'" + command_ + "' produced no output");
    if (verdict == "UNSAT") return std::nullopt;
    if (verdict != "SAT")
        throw ExternalSolverError("'" + command_ + "' printed '" + verdict +
                                  "', expected SAT or UNSAT");
    Assignment a(f.num_vars);
    int lit;
    while (in >> lit) {
        if (lit == 0) break;
        int var = std::abs(lit);
        if (var > f.num_vars)
            throw ExternalSolverError("'" + command_ + "' mentioned out-of-range variable " +
                                      std::to_string(var));
        a.assign(var, lit > 0);
    }
    return a;
}

std::unique_ptr<SatOracle> builtin_solver() { return std::make_unique<DpllSolver>(); }

}  // namespace wellcov
