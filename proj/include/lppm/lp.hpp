#pragma once

#include <string>
#include <vector>

namespace lppm::lp {

enum class Status { optimal, infeasible, unbounded };

std::string to_string(Status s);

// Dense linear program: maximize objective . x subject to
//   ineq[i].coeffs . x <= ineq[i].rhs
//   eq[k].coeffs   . x  = eq[k].rhs
//   x >= 0
struct LinearProgram {
    struct Row {
        std::vector<double> coeffs;
        double rhs = 0.0;
    };

    int n_vars = 0;
    std::vector<double> objective;
    std::vector<Row> ineq;
    std::vector<Row> eq;
    std::vector<std::string> var_names;  // optional, for dumps

    void check_well_formed() const;  // throws ValidationError
};

struct LpSolution {
    Status status = Status::infeasible;
    std::vector<double> x;
    double objective_value = 0.0;
    std::vector<double> duals_ineq;  // multipliers of the <= rows, >= 0
    std::vector<double> duals_eq;    // multipliers of the = rows, free sign
    int iterations = 0;
    bool blands_rule_engaged = false;
};

// Two-phase primal simplex on a dense tableau. Infeasible and unbounded
// problems are reported through the status field, never by throwing.
LpSolution solve(const LinearProgram& lp);

// Independent re-check of an optimal solution: feasibility residuals, dual
// feasibility, duality gap and complementary slackness.
struct VerifyReport {
    double primal_residual = 0.0;        // constraint violation
    double dual_residual = 0.0;          // dual feasibility violation
    double duality_gap = 0.0;            // |c.x - (b.y + d.z)|
    double complementary_slackness = 0.0;
    double max_residual = 0.0;
    bool ok(double tol = 1e-8) const { return max_residual <= tol; }
};

VerifyReport verify(const LinearProgram& lp, const LpSolution& sol);

// Plain-text table of the instance for debugging.
std::string dump(const LinearProgram& lp);

}  // namespace lppm::lp
