#pragma once

#include <cstddef>
#include <vector>

namespace dwindex::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    std::vector<double> coeffs;
    Relation relation = Relation::LessEqual;
    double rhs = 0.0;
};

// minimize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
    std::size_t pivots = 0;
};

struct SolverOptions {
    double eps = 1e-11;
    // Exceeding this raises Error{LPFailure}; Bland's rule cannot cycle, so
    // reaching the guard indicates a numerical defect.
    std::size_t max_pivots = 100000;
};

// Dense two-phase tableau simplex with Bland's anti-cycling rule.
Solution solve(const LinearProgram& program, const SolverOptions& options = {});

} // namespace dwindex::lp
