#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lags/core_data.hpp"
#include "lags/lp_simplex.hpp"
#include "lags/weights.hpp"

namespace lags {

// The piecewise-linear system whose residual the estimator drives to zero in
// the L1 sense: residual(beta) = rhs - M * beta.  For a regression problem
// this is the 1/n-scaled normal system {M = X'X/n, rhs = X'y/n}, so
// |rhs - M*beta|_1 equals (1/n)|X'(y - X*beta)|_1 exactly.  The system may
// also be rectangular and given directly, which is how the small worked
// examples are posed.
struct GradientSystem {
    Eigen::MatrixXd M;    // k x p
    Eigen::VectorXd rhs;  // k

    Eigen::Index k() const { return M.rows(); }
    Eigen::Index p() const { return M.cols(); }
};

GradientSystem gradient_system(const GramCache& g);

struct LagsFit {
    Eigen::VectorXd beta;      // p
    Eigen::VectorXd gradient;  // k signed residual entries at beta
    double objective = 0.0;    // |gradient|_1 + lambda * sum_i w_i |beta_i|
    double lambda = 0.0;
    Eigen::VectorXd weights;
    std::vector<int> active_set;      // indices with |beta_i| > 1e-9
    Basis basis;                      // LP restart point for nearby lambdas
    bool degenerate_optimum = false;  // the LP reported alternative optima
    long lp_iterations = 0;
};

// Objective value at an arbitrary beta.  Coordinates with infinite weight
// are excluded from both terms (their residual rows and their penalty);
// a nonzero beta on such a coordinate throws InfinitePenalty.
double lags_objective(const Eigen::VectorXd& beta, const GramCache& g, double lambda,
                      const WeightVector& w);
double lags_objective(const Eigen::VectorXd& beta, const GradientSystem& sys, double lambda,
                      const WeightVector& w);

// The LP behind a fit: variables [u (residual bounds), v (coefficient
// bounds), beta], rows -u <= residual <= u and -v <= beta <= v.  With a
// square system and p' finite-weight coordinates that is 3p' variables and
// 4p' rows.  Throws AllExcluded when every weight is infinite.
LpProblem assemble_lp(const GramCache& g, double lambda, const WeightVector& w);
LpProblem assemble_lp(const GradientSystem& sys, double lambda, const WeightVector& w);

// Solves min |rhs - M*beta|_1 + lambda * sum w_i |beta_i|.  lambda = 0 is
// allowed only for a full-rank square Gram system (it returns the exact
// normal-equation solution).  `warm` restarts the LP from a previous basis.
LagsFit fit(const GramCache& g, double lambda, const WeightVector& w,
            const Basis* warm = nullptr);
LagsFit fit(const GradientSystem& sys, double lambda, const WeightVector& w,
            const Basis* warm = nullptr);

struct PathPoint {
    double lambda = 0.0;
    std::optional<LagsFit> fit;  // empty when the solve failed
    std::string error;
};

// A maximal run of consecutive grid points sharing one coefficient vector
// (max |beta_i - beta_j| <= 1e-9 between adjacent points).
struct PathSegment {
    double lambda_high = 0.0;
    double lambda_low = 0.0;
    int first_index = 0;  // into the descending grid
    int last_index = 0;
    Eigen::VectorXd beta;  // representative (first point of the run)
};

struct PathResult {
    std::vector<PathPoint> points;     // descending lambda order
    std::vector<PathSegment> segments; // disjoint, ordered, covering all points
};

// Fits a descending lambda grid with warm starts and groups the fits into
// constant segments.  Solver failures are recorded per point, not thrown.
PathResult fit_path(const GramCache& g, std::vector<double> lambdas, const WeightVector& w);
PathResult fit_path(const GradientSystem& sys, std::vector<double> lambdas,
                    const WeightVector& w);

// Smallest lambda whose fit is all-zero, located by bisection to `rel_tol`
// relative accuracy.
double lambda_max(const GradientSystem& sys, const WeightVector& w, double rel_tol = 1e-3);
double lambda_max(const GramCache& g, const WeightVector& w, double rel_tol = 1e-3);

// `count` log-spaced values from lambda_max down to lambda_max * 1e-4.
std::vector<double> default_lambda_grid(const GramCache& g, const WeightVector& w,
                                        int count = 100);
std::vector<double> default_lambda_grid(const GradientSystem& sys, const WeightVector& w,
                                        int count = 100);

// Weighted Dantzig-selector variant: min |residual|_inf + lambda*sum w|beta|.
// The LP has one scalar residual bound t, p' v-variables, and 2k' + 2p' rows.
LagsFit weighted_dantzig(const GramCache& g, double lambda, const WeightVector& w,
                         const Basis* warm = nullptr);
LagsFit weighted_dantzig(const GradientSystem& sys, double lambda, const WeightVector& w,
                         const Basis* warm = nullptr);
LpProblem assemble_dantzig_lp(const GradientSystem& sys, double lambda, const WeightVector& w);

// Support-conditioned diagnostics of a weighted fit.
struct DiagnosticsReport {
    double a_n = 0.0;             // max weight over the support
    double b_n = 0.0;             // min weight over the (nonempty) complement
    double gamma_estimate = 0.0;  // sampled estimate (from above) of the support margin
    double c_inf_norm = 0.0;      // |C|_inf of the Gram matrix
    double eta_estimate = 0.0;    // 1 - |C11^{-1} C12|_inf, the irrepresentable margin
};

DiagnosticsReport diagnostics(const GramCache& g, const WeightVector& w,
                              const std::vector<int>& support, int samples,
                              std::uint64_t seed = 0);

// |C^{-1/2}|_inf via a symmetric eigendecomposition; throws SingularGram on
// a non-positive-definite C.
double inverse_sqrt_inf_norm(const Eigen::MatrixXd& C);

}  // namespace lags
