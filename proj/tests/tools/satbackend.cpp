// Minimal external SAT backend used by the CLI integration tests.
// Reads a DIMACS file named on the command line and prints either
// "UNSAT" or "SAT" followed by the satisfying literals and a 0.

#include <exception>
#include <iostream>

#include "wellcov/cnf.hpp"
#include "wellcov/sat_solver.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: satbackend <dimacs-file>\n";
        return 2;
    }
    try {
        wellcov::CnfFormula f = wellcov::read_dimacs_file(argv[1]);
        wellcov::DpllSolver solver;
        auto model = solver.solve(f);
        if (!model) {
            std::cout << "UNSAT\n";
            return 0;
        }
        std::cout << "SAT\n";
        for (int v = 1; v <= f.num_vars; ++v)
            std::cout << (model->value(v) ? v : -v) << ' ';
        std::cout << "0\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "satbackend: " << e.what() << '\n';
        return 1;
    }
}
