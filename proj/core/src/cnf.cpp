#include "wellcov/cnf.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wellcov/errors.hpp"

namespace wellcov {

signed char& Assignment::at(int var) {
    if (var < 1 || var >= static_cast<int>(values_.size()))
        throw LiteralOutOfRangeError("variable " + std::to_string(var) + " out of range");
    return values_[var];
}

const signed char& Assignment::at(int var) const {
    if (var < 1 || var >= static_cast<int>(values_.size()))
        throw LiteralOutOfRangeError("variable " + std::to_string(var) + " out of range");
    return values_[var];
}

int Assignment::assigned_count() const {
    int c = 0;
    for (int v = 1; v <= num_vars(); ++v)
        if (is_assigned(v)) ++c;
    return c;
}

std::string Assignment::to_string() const {
    std::string out;
    for (int v = 1; v <= num_vars(); ++v) {
        if (!is_assigned(v)) continue;
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(v) + (value(v) ? "=T" : "=F");
    }
    return out;
}

CnfFormula CnfFormula::make(int num_vars, std::vector<std::vector<int>> clauses) {
    if (num_vars < 0) throw LiteralOutOfRangeError("negative variable count");
    CnfFormula f;
    f.num_vars = num_vars;
    f.three_cnf = true;
    for (const auto& clause : clauses) {
        if (clause.size() != 3) f.three_cnf = false;
        for (int lit : clause) {
            int var = std::abs(lit);
            if (lit == 0 || var > num_vars)
                throw LiteralOutOfRangeError("literal " + std::to_string(lit) +
                                             " out of range for " + std::to_string(num_vars) +
                                             " variables");
        }
    }
    f.clauses = std::move(clauses);
    return f;
}

Evaluation evaluate(const CnfFormula& f, const Assignment& a) {
    bool all_satisfied = true;
    for (const auto& clause : f.clauses) {
        bool sat = false, all_false = true;
        for (int lit : clause) {
            if (a.satisfies(lit)) {
                sat = true;
                all_false = false;
                break;
            }
            if (!a.falsifies(lit)) all_false = false;
        }
        if (!sat && all_false) return Evaluation::Falsified;
        if (!sat) all_satisfied = false;
    }
    return all_satisfied ? Evaluation::Satisfied : Evaluation::Undetermined;
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    long declared_vars = 0, declared_clauses = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        if (line[first] == 'p') {
            if (have_header) throw MalformedHeaderError("dimacs: duplicate header");
            std::istringstream ls(line);
            std::string p, fmt;
            if (!(ls >> p >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" ||
                declared_vars < 0 || declared_clauses < 0)
                throw MalformedHeaderError("dimacs: malformed header at line " +
                                           std::to_string(lineno));
            have_header = true;
            continue;
        }
        if (!have_header)
            throw MalformedHeaderError("dimacs: clause before header at line " +
                                       std::to_string(lineno));
        std::istringstream ls(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                clauses.push_back(current);
                current.clear();
                continue;
            }
            long var = lit < 0 ? -lit : lit;
            if (var > declared_vars)
                throw LiteralOutOfRangeError("dimacs: literal " + std::to_string(lit) +
                                             " out of range at line " + std::to_string(lineno));
            current.push_back(static_cast<int>(lit));
        }
        if (!ls.eof())
            throw ParseError("dimacs: bad token at line " + std::to_string(lineno));
    }
    if (!have_header) throw MalformedHeaderError("dimacs: missing header");
    if (!current.empty())
        throw ClauseCountMismatchError("dimacs: unterminated final clause");
    if (static_cast<long>(clauses.size()) != declared_clauses)
        throw ClauseCountMismatchError("dimacs: header declares " +
                                       std::to_string(declared_clauses) + " clauses, found " +
                                       std::to_string(clauses.size()));
    return CnfFormula::make(static_cast<int>(declared_vars), std::move(clauses));
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str());
}

std::string write_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::optional<Assignment> brute_force_satisfiable(const CnfFormula& f, int max_vars) {
    if (f.num_vars > max_vars)
        throw TooManyVariablesError("brute-force satisfiability capped at " +
                                    std::to_string(max_vars) + " variables, formula has " +
                                    std::to_string(f.num_vars));
    int n = f.num_vars;
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Assignment a(n);
        for (int v = 1; v <= n; ++v) a.assign(v, (mask >> (n - v)) & 1);
        if (evaluate(f, a) == Evaluation::Satisfied) return a;
    }
    return std::nullopt;
}

}  // namespace wellcov
