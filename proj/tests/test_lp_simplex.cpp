// Dense bounded-variable simplex: optimality certificates, warm starts,
// degeneracy handling, and agreement with brute-force vertex enumeration.
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include <lags/lags_core.hpp>
#include <lags/lp_simplex.hpp>
#include <lags/rng.hpp>

using namespace lags;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LpProblem box_lp(int m, int k, Rng& rng) {
    // Random inequality system guaranteed feasible (b = A x0 + positive
    // slack for an interior x0) and bounded (every variable in [-5, 5]).
    LpProblem lp;
    lp.A.resize(k, m);
    lp.b.resize(k);
    lp.c.resize(m);
    Eigen::VectorXd x0(m);
    for (int j = 0; j < m; ++j) {
        x0(j) = rng.uniform(-2.0, 2.0);
        lp.c(j) = rng.uniform(-1.0, 1.0);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j) lp.A(i, j) = rng.uniform(-2.0, 2.0);
        lp.b(i) = lp.A.row(i).dot(x0) + rng.uniform(0.2, 2.0);
    }
    lp.var_lower = Eigen::VectorXd::Constant(m, -5.0);
    lp.var_upper = Eigen::VectorXd::Constant(m, 5.0);
    return lp;
}

GradientSystem toy_system() {
    GradientSystem sys;
    sys.M.resize(4, 1);
    sys.M << 2, 3, 5, 7;
    sys.rhs.resize(4);
    sys.rhs << 7, 2, 4, 2;
    return sys;
}

}  // namespace

TEST_CASE("solve drives a single bounded variable to its bound") {
    LpProblem lp;
    lp.c.resize(1);
    lp.c << -1;
    lp.A.resize(1, 1);
    lp.A << 1;
    lp.b.resize(1);
    lp.b << 5;
    lp.var_lower = Eigen::VectorXd::Zero(1);
    lp.var_upper = Eigen::VectorXd::Constant(1, kInf);
    const LpSolution s = solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.x(0) == doctest::Approx(5.0));
    CHECK(s.objective == doctest::Approx(-5.0));
}

TEST_CASE("solve certifies infeasibility") {
    LpProblem lp;
    lp.c.resize(2);
    lp.c << 1, 1;
    lp.A.resize(1, 2);
    lp.A << 1, 1;
    lp.b.resize(1);
    lp.b << -1;
    lp.var_lower = Eigen::VectorXd::Zero(2);
    lp.var_upper = Eigen::VectorXd::Constant(2, kInf);
    const LpSolution s = solve(lp);
    CHECK(s.status == LpStatus::Infeasible);
    CHECK(s.phase1_objective > 1e-8);
}

TEST_CASE("solve detects an unbounded ray") {
    LpProblem lp;
    lp.c.resize(1);
    lp.c << -1;
    lp.A.resize(1, 1);
    lp.A << -1;  // -x <= 0, x unbounded above
    lp.b.resize(1);
    lp.b << 0;
    lp.var_lower = Eigen::VectorXd::Zero(1);
    lp.var_upper = Eigen::VectorXd::Constant(1, kInf);
    CHECK(solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("validate rejects malformed problems") {
    LpProblem lp;
    lp.c.resize(2);
    lp.c << 1, 1;
    lp.A.resize(1, 2);
    lp.A << 1, 1;
    lp.b.resize(2);  // row mismatch
    lp.b << 1, 1;
    lp.var_lower = Eigen::VectorXd::Zero(2);
    lp.var_upper = Eigen::VectorXd::Constant(2, kInf);
    CHECK_THROWS_AS(lp.validate(), InvalidArgument);
    lp.b.resize(1);
    lp.b << 1;
    lp.var_lower = Eigen::VectorXd::Constant(2, 2.0);
    lp.var_upper = Eigen::VectorXd::Constant(2, 1.0);  // crossed bounds
    CHECK_THROWS_AS(lp.validate(), InvalidArgument);
}

TEST_CASE("the single-predictor L1 system solves to 2/3 at penalty 1") {
    const LpProblem lp = assemble_lp(toy_system(), 1.0, uniform_weights(1));
    const LpSolution s = solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    // Variable layout: residual bounds u (4), coefficient bound v (1), beta (1).
    CHECK(s.x(5) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(s.objective == doctest::Approx(9.0 + 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("re-solving from the optimal basis performs zero pivots") {
    Rng rng(42);
    const LpProblem lp = box_lp(4, 6, rng);
    const LpSolution cold = solve(lp);
    REQUIRE(cold.status == LpStatus::Optimal);
    const LpSolution warm = solve_warm(lp, cold.basis);
    REQUIRE(warm.status == LpStatus::Optimal);
    CHECK(warm.iterations == 0);
    CHECK(warm.objective == doctest::Approx(cold.objective).epsilon(1e-12));
}

TEST_CASE("warm start across nearby penalties matches the cold solve") {
    const GradientSystem sys = toy_system();
    const WeightVector w = uniform_weights(1);
    const LpSolution first = solve(assemble_lp(sys, 1.0, w));
    REQUIRE(first.status == LpStatus::Optimal);
    const LpProblem lp2 = assemble_lp(sys, 2.0, w);
    const LpSolution cold = solve(lp2);
    const LpSolution warm = solve_warm(lp2, first.basis);
    REQUIRE(warm.status == LpStatus::Optimal);
    CHECK(warm.x(5) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(warm.objective == doctest::Approx(cold.objective).epsilon(1e-9));
    CHECK(warm.iterations <= cold.iterations);
}

TEST_CASE("a deliberately broken warm basis falls back to the cold answer") {
    Rng rng(7);
    const LpProblem lp = box_lp(3, 5, rng);
    const LpSolution cold = solve(lp);
    REQUIRE(cold.status == LpStatus::Optimal);

    Basis bad;
    bad.basic_indices = {0, 0, 0, 0, 0};  // duplicated => singular
    const LpSolution s = solve_warm(lp, bad);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(cold.objective).epsilon(1e-9));

    Basis wrong_size;
    wrong_size.basic_indices = {1};
    CHECK(solve_warm(lp, wrong_size).objective == doctest::Approx(cold.objective).epsilon(1e-9));
}

TEST_CASE("enumerate_vertices finds the single optimum of a box problem") {
    LpProblem lp;
    lp.c.resize(1);
    lp.c << -1;
    lp.A.resize(0, 1);
    lp.b.resize(0);
    lp.var_lower = Eigen::VectorXd::Zero(1);
    lp.var_upper = Eigen::VectorXd::Constant(1, 5.0);
    const VertexList v = enumerate_vertices_bruteforce(lp);
    REQUIRE(!v.points.empty());
    CHECK(v.best_objective() == doctest::Approx(-5.0));
}

TEST_CASE("enumerate_vertices returns an empty list on infeasible systems") {
    LpProblem lp;
    lp.c.resize(1);
    lp.c << 1;
    lp.A.resize(1, 1);
    lp.A << 1;
    lp.b.resize(1);
    lp.b << -2;
    lp.var_lower = Eigen::VectorXd::Zero(1);
    lp.var_upper = Eigen::VectorXd::Constant(1, 5.0);
    const VertexList v = enumerate_vertices_bruteforce(lp);
    CHECK(v.points.empty());
    CHECK_THROWS_AS(v.best_objective(), InvalidArgument);
}

TEST_CASE("enumerate_vertices honours its combination cap") {
    Rng rng(3);
    const LpProblem lp = box_lp(6, 8, rng);
    CHECK_THROWS_AS(enumerate_vertices_bruteforce(lp, 10), TooLarge);
}

TEST_CASE("solve agrees with vertex enumeration on random bounded problems") {
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int m = 1 + static_cast<int>(rng.uniform_int(0, 5));
        const int k = 1 + static_cast<int>(rng.uniform_int(0, 7));
        const LpProblem lp = box_lp(m, k, rng);
        const LpSolution s = solve(lp);
        REQUIRE(s.status == LpStatus::Optimal);
        const VertexList v = enumerate_vertices_bruteforce(lp);
        REQUIRE(!v.points.empty());
        CHECK(std::abs(s.objective - v.best_objective()) <= 1e-9 * (1.0 + std::abs(s.objective)));
        const LpCheck chk = check_solution(lp, s);
        CHECK(chk.primal_residual <= 1e-8 * (1.0 + lp.b.cwiseAbs().maxCoeff()));
        CHECK(chk.dual_residual <= 1e-9 * (1.0 + lp.c.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("free variables are handled without sign splitting") {
    // min x subject to x >= -3 encoded as -x <= 3 with x free.
    LpProblem lp;
    lp.c.resize(1);
    lp.c << 1;
    lp.A.resize(1, 1);
    lp.A << -1;
    lp.b.resize(1);
    lp.b << 3;
    lp.var_lower = Eigen::VectorXd::Constant(1, -kInf);
    lp.var_upper = Eigen::VectorXd::Constant(1, kInf);
    const LpSolution s = solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.x(0) == doctest::Approx(-3.0));
}

TEST_CASE("alternative optima raise the degenerate flag") {
    // min x1 + x2 over the segment x1 + x2 = 1 (entire face optimal).
    LpProblem lp;
    lp.c.resize(2);
    lp.c << 1, 1;
    lp.A.resize(1, 2);
    lp.A << -1, -1;  // x1 + x2 >= 1
    lp.b.resize(1);
    lp.b << -1;
    lp.var_lower = Eigen::VectorXd::Zero(2);
    lp.var_upper = Eigen::VectorXd::Constant(2, kInf);
    const LpSolution s = solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(1.0));
    CHECK(s.degenerate_optimum);
}

TEST_CASE("a classically cycling problem terminates under the rule switch") {
    // Known to cycle under naive most-negative pricing without anti-cycling.
    LpProblem lp;
    lp.c.resize(4);
    lp.c << -0.75, 150.0, -0.02, 6.0;
    lp.A.resize(3, 4);
    lp.A << 0.25, -60.0, -0.04, 9.0,
            0.5, -90.0, -0.02, 3.0,
            0.0, 0.0, 1.0, 0.0;
    lp.b.resize(3);
    lp.b << 0, 0, 1;
    lp.var_lower = Eigen::VectorXd::Zero(4);
    lp.var_upper = Eigen::VectorXd::Constant(4, kInf);
    const LpSolution s = solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == doctest::Approx(-0.05).epsilon(1e-9));
    const VertexList v = enumerate_vertices_bruteforce(lp);
    CHECK(std::abs(s.objective - v.best_objective()) <= 1e-9);
}

TEST_CASE("reported residuals match an independent recomputation") {
    Rng rng(99);
    const LpProblem lp = box_lp(5, 7, rng);
    const LpSolution s = solve(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    const LpCheck chk = check_solution(lp, s);
    CHECK(s.primal_residual == doctest::Approx(chk.primal_residual).epsilon(1e-12));
    CHECK(s.dual_residual == doctest::Approx(chk.dual_residual).epsilon(1e-12));
    CHECK(s.complementarity == doctest::Approx(chk.complementarity).epsilon(1e-12));
}
