// Reference estimators used for comparison suites: closed-form orthonormal
// threshold operators, a coordinate-descent Lasso, and exact OLS/ridge fits.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lags/core_data.hpp"
#include "lags/errors.hpp"

namespace lags {

enum class BaselineMethod { HardOrtho, SoftOrtho, LassoCd, Ols, Ridge };

struct BaselineFit {
    Eigen::VectorXd beta;
    BaselineMethod method = BaselineMethod::Ols;
    double lambda = 0.0;  // penalty level for LassoCd; unused otherwise
    double phi = 0.0;     // ridge level for Ridge; unused otherwise
    int sweeps = 0;       // coordinate-descent sweeps performed (LassoCd)
    // Largest stationarity violations of the LassoCd solution, both on the
    // raw gradient scale: on the active set | |X_j'(y-Xb)| - lambda |, off
    // it max(0, |X_j'(y-Xb)| - lambda).
    double kkt_active = 0.0;
    double kkt_inactive = 0.0;
    // Penalized objective value after each sweep, up to the constant
    // |y|^2/2 that the Gram form cannot see (LassoCd only).
    std::vector<double> sweep_objectives;
};

// Keep-or-kill: entry kept iff |beta_o_i| >= lambda (boundary kept).
Eigen::VectorXd hard_threshold_ortho(const Eigen::VectorXd& beta_o, double lambda);

// Shrink-toward-zero: sign(beta_o_i) * max(|beta_o_i| - lambda, 0).
Eigen::VectorXd soft_threshold_ortho(const Eigen::VectorXd& beta_o, double lambda);

// Cyclic coordinate descent on (1/2)|y - X beta|^2 + lambda*|beta|_1, driven
// entirely by the Gram cache (the raw cross-products are n*C and n*Xty).
// `lambda` is on the raw objective scale above, not divided by n.  Stops when
// the largest single-coordinate change in a sweep is <= 1e-8; throws
// MaxIterations after 1e5 sweeps.
BaselineFit lasso_cd(const GramCache& g, double lambda);

// Exact normal-equation solutions with iterative refinement so that
// |C beta - Xty|_inf stays at roundoff level on well-conditioned problems.
BaselineFit ols_fit(const GramCache& g);      // throws SingularGram
BaselineFit ridge_fit(const GramCache& g, double phi);  // requires phi > 0

}  // namespace lags
