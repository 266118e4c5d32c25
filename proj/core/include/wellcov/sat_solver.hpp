#pragma once

#include <memory>
#include <optional>
#include <string>

#include "wellcov/cnf.hpp"

namespace wellcov {

/// Pluggable satisfiability oracle. solve() returns a total satisfying
/// assignment or nullopt for unsatisfiable, bumps the call counter exactly
/// once, and re-checks any returned model against the formula.
class SatOracle {
  public:
    virtual ~SatOracle() = default;

    std::optional<Assignment> solve(const CnfFormula& f);

    long long call_count() const noexcept { return calls_; }
    void reset_call_count() noexcept { calls_ = 0; }

    virtual std::string name() const = 0;

  protected:
    /// Backend entry point. May leave variables unassigned; solve() completes
    /// them to false before validating.
    virtual std::optional<Assignment> run(const CnfFormula& f) = 0;

  private:
    long long calls_ = 0;
};

/// Complete DPLL solver: unit propagation, deterministic branching on the
/// lowest unassigned variable with true tried first. Variable-disjoint parts
/// of the formula are solved independently.
class DpllSolver final : public SatOracle {
  public:
    std::string name() const override { return "dpll"; }

  protected:
    std::optional<Assignment> run(const CnfFormula& f) override;
};

/// Shells out to `command <dimacs-file>`. Expected stdout: a first line that
/// is exactly SAT or UNSAT; after SAT, one line of space-separated literals
/// (unmentioned variables default to false). Anything else raises
/// ExternalSolverError. The process exit status is ignored when the output
/// parses.
class ExternalProcessSolver final : public SatOracle {
  public:
    explicit ExternalProcessSolver(std::string command) : command_(std::move(command)) {}

    std::string name() const override { return "external:" + command_; }

  protected:
    std::optional<Assignment> run(const CnfFormula& f) override;

  private:
    std::string command_;
};

std::unique_ptr<SatOracle> builtin_solver();

}  // namespace wellcov
