// k-fold cross-validation over lambda grids and the selection rules used to
// pick a final penalty level from the CV error curve.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lags/core_data.hpp"
#include "lags/errors.hpp"
#include "lags/weights.hpp"

namespace lags {

enum class SelectionRule { MinError, OneSe, FractionSe };

struct RuleSpec {
    SelectionRule rule = SelectionRule::FractionSe;
    double fraction = 0.5;  // only read for FractionSe
};

enum class CvMethod { Lags, LassoCd };

struct CvReport {
    std::vector<double> lambdas;   // descending grid actually evaluated
    Eigen::VectorXd mean_err;      // per-lambda mean held-out squared error
    Eigen::VectorXd se_err;        // per-lambda standard error over folds
    std::vector<double> nonzeros;  // per-lambda mean active-set size over folds
    double chosen_lambda = 0.0;
    RuleSpec rule;
    CvMethod method = CvMethod::Lags;
    int failed_fits = 0;  // (fold, lambda) solves that errored; excluded from means
    std::vector<std::string> failure_messages;
    // Per-fold trained models on the original data scale, for inspection and
    // leakage checks: fold_betas[f] is p x L, fold_intercepts[f] has length L.
    // Entries for failed fits are NaN.
    std::vector<Eigen::MatrixXd> fold_betas;
    std::vector<Eigen::VectorXd> fold_intercepts;
};

// Deterministic shuffle-and-deal split of {0..n-1} into k folds whose sizes
// differ by at most one (the first n mod k folds get the extra row).
std::vector<std::vector<int>> kfold_split(int n, int k, std::uint64_t seed);  // throws BadK

// Cross-validates the estimator over `grid` (any order; evaluated descending).
// Every per-fold model standardizes on its own training rows and recomputes
// penalty weights there, so no held-out information reaches training.  For
// CvMethod::LassoCd the grid is on the raw (1/2)|y-Xb|^2 + lambda|b|_1 scale
// and `scheme`/`phi` are ignored.
CvReport cross_validate(const Dataset& d, int k, const std::vector<double>& grid,
                        WeightScheme scheme, std::uint64_t seed,
                        RuleSpec rule = RuleSpec{}, CvMethod method = CvMethod::Lags,
                        double phi = 0.2);

// MinError: smallest mean error, largest lambda on ties.  OneSe /
// FractionSe(f): largest lambda whose mean error is within 1 (resp. f)
// standard errors *of the minimizing lambda's SE* of the minimum.
double select_lambda(const CvReport& r, RuleSpec rule);

}  // namespace lags
