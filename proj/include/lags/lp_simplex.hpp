#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "lags/errors.hpp"

namespace lags {

// min c'x  subject to  A x <= b,  var_lower <= x <= var_upper.
// Every row is a <= inequality; bounds may be +-infinity (free variables are
// handled natively by the bounded-variable simplex, they are never split).
struct LpProblem {
    Eigen::VectorXd c;          // m
    Eigen::MatrixXd A;          // k x m
    Eigen::VectorXd b;          // k
    Eigen::VectorXd var_lower;  // m, -inf allowed
    Eigen::VectorXd var_upper;  // m, +inf allowed

    Eigen::Index num_vars() const { return c.size(); }
    Eigen::Index num_rows() const { return b.size(); }
    void validate() const;  // throws InvalidArgument on malformed input
};

// A restart point: which columns of the slack-augmented system [A | I] are
// basic (one per row), plus which nonbasic columns sit at their upper bound
// (everything else nonbasic rests at its lower bound, or at zero if free).
struct Basis {
    std::vector<int> basic_indices;      // size k when valid; column ids in [0, m+k)
    std::vector<int> nonbasic_at_upper;  // column ids parked at a finite upper bound

    bool empty() const { return basic_indices.empty(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Eigen::VectorXd x;          // m structural values (valid when Optimal)
    double objective = 0.0;
    Basis basis;
    long iterations = 0;        // pivots across both phases
    double phase1_objective = 0.0;  // residual infeasibility; > 0 certifies Infeasible

    // Residuals measured at the returned point (Optimal only).
    double primal_residual = 0.0;    // max over rows/bounds of constraint violation
    double dual_residual = 0.0;      // worst reduced-cost sign violation
    double complementarity = 0.0;    // max |dual_i * slack_i|
    bool degenerate_optimum = false; // a nonbasic column with zero reduced cost can move
};

struct SimplexOptions {
    double pivot_tol = 1e-9;      // smallest pivot magnitude accepted
    double dual_tol = 1e-9;       // reduced-cost tolerance for optimality
    double feas_tol = 1e-8;       // relative primal feasibility tolerance
    long degenerate_switch = 50;  // degenerate pivots before Bland's rule takes over
    int refactor_every = 64;      // pivots between basis refactorizations
    long max_iterations = 0;      // 0 = automatic cap
};

// Two-phase dense bounded-variable simplex.  Dantzig pricing with lowest-
// index tie breaking, switching permanently to Bland's rule once
// `degenerate_switch` degenerate pivots have accumulated.  Throws
// NumericalBreakdown when no numerically acceptable pivot exists.
LpSolution solve(const LpProblem& lp, const SimplexOptions& opts = {});

// Same solver started from a previous basis.  Falls back to a cold start when
// the basis is missing, malformed, singular, or primal infeasible for this
// problem's data.  Re-solving a problem from its own optimal basis performs
// zero pivots.
LpSolution solve_warm(const LpProblem& lp, const Basis& start, const SimplexOptions& opts = {});

// Independent oracle for small problems: enumerates every choice of m active
// constraints among {rows, finite bounds}, solves the square system, and
// keeps the feasible intersection points.  Infeasible problems yield an empty
// list.  Throws TooLarge when the combination count exceeds `max_combinations`.
struct VertexList {
    std::vector<Eigen::VectorXd> points;
    std::vector<double> objectives;

    double best_objective() const;  // min over vertices; throws InvalidArgument if empty
};
VertexList enumerate_vertices_bruteforce(const LpProblem& lp,
                                         std::uint64_t max_combinations = 2000000);

// Residuals of a candidate optimal point/basis, used by tests and by the
// integrated post-solve verification.
struct LpCheck {
    double primal_residual;
    double dual_residual;
    double complementarity;
};
LpCheck check_solution(const LpProblem& lp, const LpSolution& sol);

}  // namespace lags
