#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wellcov {

/// Partial assignment over variables 1..num_vars. Unassigned by default.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(int num_vars) : values_(num_vars + 1, Unset) {}

    int num_vars() const noexcept { return static_cast<int>(values_.size()) - 1; }

    bool is_assigned(int var) const { return at(var) != Unset; }
    bool value(int var) const { return at(var) == True; }

    void assign(int var, bool value) { at(var) = value ? True : False; }
    void unassign(int var) { at(var) = Unset; }

    /// True iff the literal (nonzero, |lit| <= num_vars) is assigned true.
    bool satisfies(int lit) const {
        signed char v = at(lit > 0 ? lit : -lit);
        if (v == Unset) return false;
        return (v == True) == (lit > 0);
    }

    /// True iff the literal is assigned false.
    bool falsifies(int lit) const {
        signed char v = at(lit > 0 ? lit : -lit);
        if (v == Unset) return false;
        return (v == True) != (lit > 0);
    }

    int assigned_count() const;

    /// "x1=T x3=F" (assigned variables only, ascending).
    std::string to_string() const;

private:
    enum : signed char { Unset = -1, False = 0, True = 1 };

    signed char& at(int var);
    const signed char& at(int var) const;

    std::vector<signed char> values_;
};

/// CNF formula over variables 1..num_vars; literals are nonzero ints,
/// negative for negated. Clauses may repeat literals.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    bool three_cnf = false;  // every clause has exactly 3 literals

    /// Validates literal ranges and computes the 3-CNF flag.
    /// Throws LiteralOutOfRangeError.
    static CnfFormula make(int num_vars, std::vector<std::vector<int>> clauses);

    int clause_count() const noexcept { return static_cast<int>(clauses.size()); }
};

enum class Evaluation { Satisfied, Falsified, Undetermined };

/// Satisfied iff every clause has a true literal; Falsified iff some clause
/// has all literals assigned false; Undetermined otherwise.
Evaluation evaluate(const CnfFormula& f, const Assignment& a);

/// DIMACS CNF: "c" comment lines, "p cnf <vars> <clauses>" header,
/// whitespace-separated 0-terminated clauses.
CnfFormula parse_dimacs(std::string_view text);
CnfFormula read_dimacs_file(const std::string& path);
std::string write_dimacs(const CnfFormula& f);

/// Tries all assignments in lexicographic order (x1 most significant,
/// false before true); returns the first satisfying total assignment, or
/// nullopt if unsatisfiable. Throws TooManyVariablesError above max_vars.
std::optional<Assignment> brute_force_satisfiable(const CnfFormula& f, int max_vars = 24);

}  // namespace wellcov
