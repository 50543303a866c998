#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lags/errors.hpp"

namespace lags {

// A regression problem as read from disk: n rows, p named predictors, one
// response.  Values are finite; load_csv enforces that.
struct Dataset {
    Eigen::VectorXd y;                       // n
    Eigen::MatrixXd X;                       // n x p
    std::vector<std::string> column_names;   // p predictor names
    std::string response_name;

    Eigen::Index n() const { return X.rows(); }
    Eigen::Index p() const { return X.cols(); }
};

// Column-standardized view of a Dataset: every predictor has mean 0 and
// population variance 1 (divisor n), and the response is centered.  The
// original location/scale is kept so fits can be mapped back.
struct StandardizedDesign {
    Eigen::MatrixXd Xs;           // n x p, mean-0 / variance-1 columns
    Eigen::VectorXd yc;           // n, centered response
    Eigen::VectorXd col_means;    // p
    Eigen::VectorXd col_scales;   // p, population standard deviations (> 0)
    double y_mean = 0.0;

    Eigen::Index n() const { return Xs.rows(); }
    Eigen::Index p() const { return Xs.cols(); }
};

// The sufficient statistics every estimator here runs on: C = X'X/n and
// xty = X'y/n.  Built from a StandardizedDesign (then diag(C) == 1) or from
// raw matrices when the caller wants the unstandardized problem.
struct GramCache {
    Eigen::MatrixXd C;          // p x p, symmetric PSD
    Eigen::VectorXd xty;        // p
    double inf_norm = 0.0;      // max absolute row sum of C
    Eigen::Index n = 0;         // sample count behind the averages

    Eigen::Index p() const { return C.rows(); }
};

// A fit mapped back to the original data scale.
struct RescaledFit {
    Eigen::VectorXd beta;       // p, original-scale slopes
    double intercept = 0.0;
};

// Reads a CSV file with a header row.  `response` names the response column;
// every other column becomes a predictor, in file order.  Throws FileNotFound,
// ParseError (1-based row/field), MissingColumn, EmptyData.
Dataset load_csv(const std::string& path, const std::string& response);

// Same parser over an in-memory buffer (used by tests and by load_csv).
Dataset parse_csv(const std::string& text, const std::string& response,
                  const std::string& origin = "<memory>");

// Mean-0 / variance-1 columns with the population convention (divisor n).
// Throws ConstantColumn for any zero-variance predictor.
StandardizedDesign standardize(const Dataset& d);

GramCache gram(const StandardizedDesign& s);

// Gram statistics of raw (already prepared) matrices: C = X'X/n, xty = X'y/n.
GramCache gram_raw(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

// Sample correlations between each predictor column and the centered
// response: c_i = <x_i, yc> / (|x_i| * |yc|).  Throws ZeroResponse if the
// centered response vanishes.
Eigen::VectorXd correlations(const StandardizedDesign& s);

// Maps standardized-scale coefficients back to the original data scale:
// beta_j = beta_s_j / col_scales_j, intercept = y_mean - sum beta_j * mean_j.
RescaledFit destandardize(const Eigen::VectorXd& beta_s, const StandardizedDesign& s);

}  // namespace lags
