#include "lags/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "lags/weights.hpp"

namespace lags {

namespace {

void check_lambda_nonneg(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidArgument("lambda must be finite and nonnegative");
    }
}

double soft(double z, double t) {
    if (z > t) return z - t;
    if (z < -t) return z + t;
    return 0.0;
}

}  // namespace

Eigen::VectorXd hard_threshold_ortho(const Eigen::VectorXd& beta_o, double lambda) {
    check_lambda_nonneg(lambda);
    Eigen::VectorXd out = beta_o;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (std::abs(out(i)) < lambda) out(i) = 0.0;
    }
    return out;
}

Eigen::VectorXd soft_threshold_ortho(const Eigen::VectorXd& beta_o, double lambda) {
    check_lambda_nonneg(lambda);
    Eigen::VectorXd out(beta_o.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = soft(beta_o(i), lambda);
    return out;
}

BaselineFit lasso_cd(const GramCache& g, double lambda) {
    check_lambda_nonneg(lambda);
    const Eigen::Index p = g.p();
    const double n = static_cast<double>(g.n);
    if (g.n < 1) throw InvalidArgument("Gram cache has no sample count");
    for (Eigen::Index j = 0; j < p; ++j) {
        if (!(g.C(j, j) > 0.0)) throw InvalidArgument("Gram diagonal must be positive");
    }
    constexpr int kMaxSweeps = 100000;
    constexpr double kConvTol = 1e-8;
    const double lam_n = lambda / n;  // penalty on the (1/n)-scaled quadratic

    BaselineFit fit;
    fit.method = BaselineMethod::LassoCd;
    fit.lambda = lambda;
    fit.beta = Eigen::VectorXd::Zero(p);
    // grad tracks Xty - C beta (the (1/n)-scaled least-squares gradient).
    Eigen::VectorXd grad = g.xty;
    int sweep = 0;
    bool converged = false;
    for (; sweep < kMaxSweeps; ++sweep) {
        double max_change = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            const double old = fit.beta(j);
            const double zj = grad(j) + g.C(j, j) * old;  // partial residual target
            const double neu = soft(zj, lam_n) / g.C(j, j);
            if (neu != old) {
                grad -= g.C.col(j) * (neu - old);
                fit.beta(j) = neu;
                max_change = std::max(max_change, std::abs(neu - old));
            }
        }
        // Objective up to the constant |y|^2/2: n*(b'Cb/2 - Xty'b) + lambda|b|_1.
        fit.sweep_objectives.push_back(
            n * (0.5 * fit.beta.dot(g.C * fit.beta) - g.xty.dot(fit.beta)) +
            lambda * fit.beta.lpNorm<1>());
        if (max_change <= kConvTol) {
            ++sweep;
            converged = true;
            break;
        }
    }
    if (!converged) throw MaxIterations("coordinate descent did not converge");
    fit.sweeps = sweep;

    grad = g.xty - g.C * fit.beta;  // recompute to clear accumulated drift
    fit.kkt_active = 0.0;
    fit.kkt_inactive = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) {
        const double raw = n * std::abs(grad(j));
        if (fit.beta(j) != 0.0) {
            fit.kkt_active = std::max(fit.kkt_active, std::abs(raw - lambda));
        } else {
            fit.kkt_inactive = std::max(fit.kkt_inactive, raw - lambda);
        }
    }
    fit.kkt_inactive = std::max(fit.kkt_inactive, 0.0);
    return fit;
}

namespace {

// One or two refinement passes keep the normal-equation residual at roundoff
// level; `solve` must apply the same matrix the residual is measured with.
template <typename Solve>
Eigen::VectorXd refine(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, Solve&& solve) {
    Eigen::VectorXd x = solve(b);
    for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd r = b - A * x;
        if (r.lpNorm<Eigen::Infinity>() <= 1e-14 * (1.0 + b.lpNorm<Eigen::Infinity>())) break;
        x += solve(r);
    }
    return x;
}

}  // namespace

BaselineFit ols_fit(const GramCache& g) {
    BaselineFit fit;
    fit.method = BaselineMethod::Ols;
    // ols_solution performs the rank/conditioning checks and throws
    // SingularGram; reuse it for the factorization, then refine.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.C);
    (void)ols_solution(g);
    fit.beta = refine(g.C, g.xty, [&](const Eigen::VectorXd& b) {
        return (eig.eigenvectors() *
                (eig.eigenvectors().transpose() * b).cwiseQuotient(eig.eigenvalues()))
            .eval();
    });
    return fit;
}

BaselineFit ridge_fit(const GramCache& g, double phi) {
    if (!(phi > 0.0)) throw InvalidArgument("ridge level must be positive");
    BaselineFit fit;
    fit.method = BaselineMethod::Ridge;
    fit.phi = phi;
    const Eigen::MatrixXd A =
        g.C + phi * Eigen::MatrixXd::Identity(g.p(), g.p());
    Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
    fit.beta = refine(A, g.xty, [&](const Eigen::VectorXd& b) { return ldlt.solve(b).eval(); });
    return fit;
}

}  // namespace lags
