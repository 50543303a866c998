#include "lags/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lags/baselines.hpp"
#include "lags/lags_core.hpp"
#include "lags/rng.hpp"

namespace lags {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kActiveTol = 1e-9;

Dataset subset_rows(const Dataset& d, const std::vector<int>& rows) {
    Dataset out;
    out.column_names = d.column_names;
    out.response_name = d.response_name;
    out.y.resize(static_cast<Eigen::Index>(rows.size()));
    out.X.resize(static_cast<Eigen::Index>(rows.size()), d.p());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.y(static_cast<Eigen::Index>(i)) = d.y(rows[i]);
        out.X.row(static_cast<Eigen::Index>(i)) = d.X.row(rows[i]);
    }
    return out;
}

WeightVector weights_for(WeightScheme scheme, const StandardizedDesign& s, const GramCache& g,
                         double phi) {
    switch (scheme) {
        case WeightScheme::Correlation:
            return correlation_weights(correlations(s));
        case WeightScheme::InverseOls:
            return ols_weights_from_gram(g);
        case WeightScheme::InverseRidge:
            return ridge_weights_from_gram(g, phi);
        case WeightScheme::Uniform:
            return uniform_weights(s.p());
    }
    throw InvalidArgument("unknown weight scheme");
}

}  // namespace

std::vector<std::vector<int>> kfold_split(int n, int k, std::uint64_t seed) {
    if (k < 2 || k > n) throw BadK();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
    const int base = n / k;
    const int extra = n % k;
    std::size_t pos = 0;
    for (int f = 0; f < k; ++f) {
        const int size = base + (f < extra ? 1 : 0);
        auto& fold = folds[static_cast<std::size_t>(f)];
        fold.assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                    order.begin() + static_cast<std::ptrdiff_t>(pos) + size);
        std::sort(fold.begin(), fold.end());
        pos += static_cast<std::size_t>(size);
    }
    return folds;
}

CvReport cross_validate(const Dataset& d, int k, const std::vector<double>& grid,
                        WeightScheme scheme, std::uint64_t seed, RuleSpec rule,
                        CvMethod method, double phi) {
    if (grid.empty()) throw InvalidArgument("lambda grid is empty");
    for (double lam : grid) {
        if (!(lam >= 0.0) || !std::isfinite(lam)) {
            throw InvalidArgument("lambda grid entries must be finite and nonnegative");
        }
    }
    CvReport rep;
    rep.lambdas = grid;
    std::sort(rep.lambdas.begin(), rep.lambdas.end(), std::greater<double>());
    rep.lambdas.erase(std::unique(rep.lambdas.begin(), rep.lambdas.end()), rep.lambdas.end());
    rep.rule = rule;
    rep.method = method;

    const auto folds = kfold_split(static_cast<int>(d.n()), k, seed);
    const Eigen::Index L = static_cast<Eigen::Index>(rep.lambdas.size());
    const Eigen::Index p = d.p();
    // err(f, l): held-out MSE of fold f's model at lambda l; NaN on failure.
    Eigen::MatrixXd err = Eigen::MatrixXd::Constant(k, L, kNaN);
    Eigen::MatrixXd nnz = Eigen::MatrixXd::Constant(k, L, kNaN);
    rep.fold_betas.assign(static_cast<std::size_t>(k),
                          Eigen::MatrixXd::Constant(p, L, kNaN));
    rep.fold_intercepts.assign(static_cast<std::size_t>(k),
                               Eigen::VectorXd::Constant(L, kNaN));

    std::vector<char> held(static_cast<std::size_t>(d.n()), 0);
    for (int f = 0; f < k; ++f) {
        std::fill(held.begin(), held.end(), 0);
        for (int i : folds[static_cast<std::size_t>(f)]) held[static_cast<std::size_t>(i)] = 1;
        std::vector<int> train_rows;
        train_rows.reserve(d.n() - folds[static_cast<std::size_t>(f)].size());
        for (int i = 0; i < static_cast<int>(d.n()); ++i) {
            if (!held[static_cast<std::size_t>(i)]) train_rows.push_back(i);
        }
        const Dataset train = subset_rows(d, train_rows);
        const Dataset test = subset_rows(d, folds[static_cast<std::size_t>(f)]);

        StandardizedDesign s;
        GramCache g;
        WeightVector w;
        try {
            s = standardize(train);
            g = gram(s);
            if (method == CvMethod::Lags) w = weights_for(scheme, s, g, phi);
        } catch (const Error& e) {
            rep.failed_fits += static_cast<int>(L);
            rep.failure_messages.push_back(e.what());
            continue;
        }

        Basis warm;
        for (Eigen::Index l = 0; l < L; ++l) {
            const double lam = rep.lambdas[static_cast<std::size_t>(l)];
            try {
                Eigen::VectorXd beta_s;
                if (method == CvMethod::Lags) {
                    LagsFit fit_l = fit(g, lam, w, warm.empty() ? nullptr : &warm);
                    warm = fit_l.basis;
                    beta_s = fit_l.beta;
                } else {
                    beta_s = lasso_cd(g, lam).beta;
                }
                const RescaledFit r = destandardize(beta_s, s);
                const Eigen::VectorXd pred =
                    (test.X * r.beta).array() + r.intercept;
                err(f, l) = (test.y - pred).squaredNorm() /
                            static_cast<double>(test.y.size());
                int count = 0;
                for (Eigen::Index j = 0; j < p; ++j) {
                    if (std::abs(beta_s(j)) > kActiveTol) ++count;
                }
                nnz(f, l) = count;
                rep.fold_betas[static_cast<std::size_t>(f)].col(l) = r.beta;
                rep.fold_intercepts[static_cast<std::size_t>(f)](l) = r.intercept;
            } catch (const Error& e) {
                ++rep.failed_fits;
                rep.failure_messages.push_back(e.what());
            }
        }
    }

    rep.mean_err = Eigen::VectorXd::Constant(L, kNaN);
    rep.se_err = Eigen::VectorXd::Constant(L, kNaN);
    rep.nonzeros.assign(static_cast<std::size_t>(L), kNaN);
    for (Eigen::Index l = 0; l < L; ++l) {
        double sum = 0.0, sum_nnz = 0.0;
        int m = 0;
        for (int f = 0; f < k; ++f) {
            if (std::isfinite(err(f, l))) {
                sum += err(f, l);
                sum_nnz += nnz(f, l);
                ++m;
            }
        }
        if (m == 0) continue;
        const double mean = sum / m;
        rep.mean_err(l) = mean;
        rep.nonzeros[static_cast<std::size_t>(l)] = sum_nnz / m;
        if (m >= 2) {
            double ss = 0.0;
            for (int f = 0; f < k; ++f) {
                if (std::isfinite(err(f, l))) ss += (err(f, l) - mean) * (err(f, l) - mean);
            }
            rep.se_err(l) = std::sqrt(ss / (m - 1)) / std::sqrt(static_cast<double>(m));
        } else {
            rep.se_err(l) = 0.0;
        }
    }

    rep.chosen_lambda = select_lambda(rep, rule);
    return rep;
}

double select_lambda(const CvReport& r, RuleSpec rule) {
    if (r.lambdas.empty()) throw InvalidArgument("empty report");
    double frac = 0.0;
    switch (rule.rule) {
        case SelectionRule::MinError:
            frac = 0.0;
            break;
        case SelectionRule::OneSe:
            frac = 1.0;
            break;
        case SelectionRule::FractionSe:
            frac = rule.fraction;
            break;
    }
    if (!(frac >= 0.0) || !std::isfinite(frac)) {
        throw InvalidArgument("SE fraction must be finite and nonnegative");
    }

    // Locate the minimum mean error; on exact ties prefer the larger lambda
    // (the grid is stored descending, so the first index encountered wins).
    Eigen::Index best = -1;
    for (Eigen::Index l = 0; l < r.mean_err.size(); ++l) {
        if (!std::isfinite(r.mean_err(l))) continue;
        if (best < 0 || r.mean_err(l) < r.mean_err(best)) best = l;
    }
    if (best < 0) throw InvalidArgument("no lambda produced a successful fit");
    const double threshold = r.mean_err(best) + frac * r.se_err(best);
    for (Eigen::Index l = 0; l < r.mean_err.size(); ++l) {
        if (std::isfinite(r.mean_err(l)) && r.mean_err(l) <= threshold) {
            return r.lambdas[static_cast<std::size_t>(l)];
        }
    }
    return r.lambdas[static_cast<std::size_t>(best)];
}

}  // namespace lags
