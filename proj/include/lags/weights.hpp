#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "lags/core_data.hpp"

namespace lags {

enum class WeightScheme { Correlation, InverseOls, InverseRidge, Uniform };

// Per-coordinate penalty weights.  An entry of +infinity means the
// coordinate is excluded: any fit using this vector pins that coefficient to
// exactly zero and drops it from the optimization.
struct WeightVector {
    Eigen::VectorXd w;
    WeightScheme scheme = WeightScheme::Uniform;
    double phi = 0.0;  // ridge stabilizer, only meaningful for InverseRidge

    Eigen::Index p() const { return w.size(); }
    bool is_finite(Eigen::Index i) const { return std::isfinite(w(i)); }
    Eigen::Index num_finite() const;
};

WeightVector uniform_weights(Eigen::Index p);

// w_i = 1 / |c_i| from marginal response correlations; zero correlation
// yields an infinite weight (the coordinate is excluded).
WeightVector correlation_weights(const Eigen::VectorXd& c);

// w_i = 1 / |beta_ols_i|.  Requires n >= p and a numerically invertible
// Gram matrix (condition number at most 1e12), otherwise throws SingularGram.
// Coefficients below 1e-12 in magnitude get an infinite weight.
WeightVector ols_weights(const StandardizedDesign& s);
WeightVector ols_weights_from_gram(const GramCache& g);

// w_i = 1 / |beta_ridge_i| with beta_ridge = (C + phi*I)^{-1} xty on the
// 1/n-scaled (correlation-like) Gram system; usable when p > n.
WeightVector ridge_weights(const StandardizedDesign& s, double phi = 0.2);
WeightVector ridge_weights_from_gram(const GramCache& g, double phi = 0.2);

// The solves behind the weights, exposed for reuse by the baselines.
Eigen::VectorXd ols_solution(const GramCache& g);
Eigen::VectorXd ridge_solution(const GramCache& g, double phi);

}  // namespace lags
