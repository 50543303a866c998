#include "lags/lags_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lags/rng.hpp"

namespace lags {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kActiveTol = 1e-9;  // |beta| above this counts as active

std::vector<Eigen::Index> finite_coords(const WeightVector& w) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < w.p(); ++i) {
        if (w.is_finite(i)) keep.push_back(i);
    }
    if (keep.empty()) throw AllExcluded();
    return keep;
}

// Restricts a square Gram system to its finite-weight coordinates: excluded
// coordinates lose both their column (the coefficient is pinned to zero) and
// their row (their gradient entry leaves the objective), which is exactly
// the sub-model fit on the remaining predictors.
struct ReducedProblem {
    GradientSystem sys;
    WeightVector w;
    std::vector<Eigen::Index> keep;  // reduced index -> original coordinate
};

ReducedProblem reduce_gram(const GramCache& g, const WeightVector& w) {
    if (w.p() != g.p()) throw InvalidArgument("weight vector length does not match p");
    ReducedProblem r;
    r.keep = finite_coords(w);
    const Eigen::Index q = static_cast<Eigen::Index>(r.keep.size());
    r.sys.M.resize(q, q);
    r.sys.rhs.resize(q);
    r.w.scheme = w.scheme;
    r.w.phi = w.phi;
    r.w.w.resize(q);
    for (Eigen::Index a = 0; a < q; ++a) {
        r.sys.rhs(a) = g.xty(r.keep[static_cast<std::size_t>(a)]);
        r.w.w(a) = w.w(r.keep[static_cast<std::size_t>(a)]);
        for (Eigen::Index b = 0; b < q; ++b) {
            r.sys.M(a, b) = g.C(r.keep[static_cast<std::size_t>(a)],
                                r.keep[static_cast<std::size_t>(b)]);
        }
    }
    return r;
}

// Restricts a general (possibly rectangular) system: only the columns of
// excluded coordinates are dropped, every residual row stays.
ReducedProblem reduce_system(const GradientSystem& sys, const WeightVector& w) {
    if (w.p() != sys.p()) throw InvalidArgument("weight vector length does not match p");
    ReducedProblem r;
    r.keep = finite_coords(w);
    const Eigen::Index q = static_cast<Eigen::Index>(r.keep.size());
    r.sys.rhs = sys.rhs;
    r.sys.M.resize(sys.k(), q);
    r.w.scheme = w.scheme;
    r.w.phi = w.phi;
    r.w.w.resize(q);
    for (Eigen::Index a = 0; a < q; ++a) {
        r.sys.M.col(a) = sys.M.col(r.keep[static_cast<std::size_t>(a)]);
        r.w.w(a) = w.w(r.keep[static_cast<std::size_t>(a)]);
    }
    return r;
}

void check_lambda(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidArgument("lambda must be finite and nonnegative");
    }
}

// All weights in a reduced problem are finite and positive.
void check_weights_positive(const WeightVector& w) {
    for (Eigen::Index i = 0; i < w.p(); ++i) {
        if (!(w.w(i) > 0.0)) throw InvalidArgument("penalty weights must be positive");
    }
}

// Builds the fit LP for an already-reduced system.  Variable order is
// [u_0..u_{k-1}, v_0..v_{q-1}, beta_0..beta_{q-1}].
LpProblem build_fit_lp(const GradientSystem& sys, double lambda, const WeightVector& w) {
    const Eigen::Index k = sys.k();
    const Eigen::Index q = sys.p();
    const Eigen::Index m = k + 2 * q;
    LpProblem lp;
    lp.c = Eigen::VectorXd::Zero(m);
    lp.c.head(k).setOnes();
    lp.c.segment(k, q) = lambda * w.w;
    lp.A = Eigen::MatrixXd::Zero(2 * k + 2 * q, m);
    lp.b.resize(2 * k + 2 * q);
    for (Eigen::Index i = 0; i < k; ++i) {
        // rhs_i - (M beta)_i <= u_i  and  -u_i <= rhs_i - (M beta)_i
        lp.A(2 * i, i) = -1.0;
        lp.A.block(2 * i, k + q, 1, q) = -sys.M.row(i);
        lp.b(2 * i) = -sys.rhs(i);
        lp.A(2 * i + 1, i) = -1.0;
        lp.A.block(2 * i + 1, k + q, 1, q) = sys.M.row(i);
        lp.b(2 * i + 1) = sys.rhs(i);
    }
    for (Eigen::Index j = 0; j < q; ++j) {
        const Eigen::Index row = 2 * k + 2 * j;
        lp.A(row, k + q + j) = 1.0;   //  beta_j - v_j <= 0
        lp.A(row, k + j) = -1.0;
        lp.A(row + 1, k + q + j) = -1.0;  // -beta_j - v_j <= 0
        lp.A(row + 1, k + j) = -1.0;
        lp.b(row) = 0.0;
        lp.b(row + 1) = 0.0;
    }
    lp.var_lower = Eigen::VectorXd::Zero(m);
    lp.var_upper = Eigen::VectorXd::Constant(m, kInf);
    lp.var_lower.tail(q).setConstant(-kInf);  // beta is free
    return lp;
}

// Builds the Dantzig-variant LP: variables [t, v_0..v_{q-1}, beta_0..beta_{q-1}],
// a single scalar t bounding every residual entry.
LpProblem build_dantzig_lp(const GradientSystem& sys, double lambda, const WeightVector& w) {
    const Eigen::Index k = sys.k();
    const Eigen::Index q = sys.p();
    const Eigen::Index m = 1 + 2 * q;
    LpProblem lp;
    lp.c = Eigen::VectorXd::Zero(m);
    lp.c(0) = 1.0;
    lp.c.segment(1, q) = lambda * w.w;
    lp.A = Eigen::MatrixXd::Zero(2 * k + 2 * q, m);
    lp.b.resize(2 * k + 2 * q);
    for (Eigen::Index i = 0; i < k; ++i) {
        lp.A(2 * i, 0) = -1.0;
        lp.A.block(2 * i, 1 + q, 1, q) = -sys.M.row(i);
        lp.b(2 * i) = -sys.rhs(i);
        lp.A(2 * i + 1, 0) = -1.0;
        lp.A.block(2 * i + 1, 1 + q, 1, q) = sys.M.row(i);
        lp.b(2 * i + 1) = sys.rhs(i);
    }
    for (Eigen::Index j = 0; j < q; ++j) {
        const Eigen::Index row = 2 * k + 2 * j;
        lp.A(row, 1 + q + j) = 1.0;
        lp.A(row, 1 + j) = -1.0;
        lp.A(row + 1, 1 + q + j) = -1.0;
        lp.A(row + 1, 1 + j) = -1.0;
        lp.b(row) = 0.0;
        lp.b(row + 1) = 0.0;
    }
    lp.var_lower = Eigen::VectorXd::Zero(m);
    lp.var_upper = Eigen::VectorXd::Constant(m, kInf);
    lp.var_lower.tail(q).setConstant(-kInf);
    return lp;
}

// Post-solve verification shared by both estimators.  A vertex that fails
// these residual checks is a solver defect, not a data property, so it
// surfaces as NumericalBreakdown.
void verify_lp_solution(const LpProblem& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::Optimal) {
        throw NumericalBreakdown("estimator LP did not reach an optimal vertex");
    }
    const double bscale = 1.0 + lp.b.cwiseAbs().maxCoeff();
    const double cscale = 1.0 + lp.c.cwiseAbs().maxCoeff();
    if (sol.primal_residual > 1e-8 * bscale) {
        throw NumericalBreakdown("LP primal residual out of tolerance");
    }
    if (sol.dual_residual > 1e-9 * cscale) {
        throw NumericalBreakdown("LP dual residual out of tolerance");
    }
    if (sol.complementarity > 1e-8 * bscale * cscale) {
        throw NumericalBreakdown("LP complementarity out of tolerance");
    }
}

std::vector<int> active_from(const Eigen::VectorXd& beta) {
    std::vector<int> act;
    for (Eigen::Index i = 0; i < beta.size(); ++i) {
        if (std::abs(beta(i)) > kActiveTol) act.push_back(static_cast<int>(i));
    }
    return act;
}

// Scatters a reduced fit back onto the full coordinate set.
LagsFit expand_fit(LagsFit reduced, const std::vector<Eigen::Index>& keep,
                   const WeightVector& full_w) {
    LagsFit out = std::move(reduced);
    if (static_cast<Eigen::Index>(keep.size()) == full_w.p()) {
        out.weights = full_w.w;
        return out;
    }
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(full_w.p());
    for (std::size_t a = 0; a < keep.size(); ++a) beta(keep[a]) = out.beta(static_cast<Eigen::Index>(a));
    out.beta = std::move(beta);
    out.weights = full_w.w;
    std::vector<int> act;
    for (int a : out.active_set) act.push_back(static_cast<int>(keep[static_cast<std::size_t>(a)]));
    out.active_set = std::move(act);
    return out;
}

// Core solve on a reduced problem; `objective` is recomputed from beta so the
// stored value always reproduces the reported objective formula exactly.
LagsFit solve_reduced(const ReducedProblem& r, double lambda, const Basis* warm, bool dantzig) {
    check_weights_positive(r.w);
    const LpProblem lp = dantzig ? build_dantzig_lp(r.sys, lambda, r.w)
                                 : build_fit_lp(r.sys, lambda, r.w);
    const LpSolution sol = (warm != nullptr && !warm->empty()) ? solve_warm(lp, *warm) : solve(lp);
    verify_lp_solution(lp, sol);

    const Eigen::Index q = r.sys.p();
    LagsFit fit;
    fit.lambda = lambda;
    fit.beta = sol.x.tail(q);
    // Nonbasic free coordinates rest at exactly zero; flush the near-zero
    // basic ones the same way so sparsity patterns are exact.
    for (Eigen::Index i = 0; i < q; ++i) {
        if (fit.beta(i) != 0.0 && std::abs(fit.beta(i)) <= kActiveTol) fit.beta(i) = 0.0;
    }
    fit.gradient = r.sys.rhs - r.sys.M * fit.beta;
    const double penalty = lambda * r.w.w.dot(fit.beta.cwiseAbs());
    fit.objective = (dantzig ? fit.gradient.lpNorm<Eigen::Infinity>()
                             : fit.gradient.lpNorm<1>()) +
                    penalty;
    fit.weights = r.w.w;
    fit.active_set = active_from(fit.beta);
    fit.basis = sol.basis;
    fit.degenerate_optimum = sol.degenerate_optimum;
    fit.lp_iterations = sol.iterations;
    return fit;
}

}  // namespace

GradientSystem gradient_system(const GramCache& g) {
    GradientSystem sys;
    sys.M = g.C;
    sys.rhs = g.xty;
    return sys;
}

double lags_objective(const Eigen::VectorXd& beta, const GradientSystem& sys, double lambda,
                      const WeightVector& w) {
    check_lambda(lambda);
    if (beta.size() != sys.p() || w.p() != sys.p()) {
        throw InvalidArgument("beta/weight length does not match the system");
    }
    double penalty = 0.0;
    for (Eigen::Index i = 0; i < w.p(); ++i) {
        if (!w.is_finite(i)) {
            if (beta(i) != 0.0) throw InfinitePenalty();
            continue;
        }
        penalty += w.w(i) * std::abs(beta(i));
    }
    return (sys.rhs - sys.M * beta).lpNorm<1>() + lambda * penalty;
}

double lags_objective(const Eigen::VectorXd& beta, const GramCache& g, double lambda,
                      const WeightVector& w) {
    check_lambda(lambda);
    if (beta.size() != g.p() || w.p() != g.p()) {
        throw InvalidArgument("beta/weight length does not match p");
    }
    // Coordinates under an infinite weight leave both terms of the
    // objective: the fit is the sub-model on the remaining predictors.
    double resid = 0.0;
    double penalty = 0.0;
    for (Eigen::Index i = 0; i < g.p(); ++i) {
        if (!w.is_finite(i)) {
            if (beta(i) != 0.0) throw InfinitePenalty();
            continue;
        }
        resid += std::abs(g.xty(i) - g.C.row(i).dot(beta));
        penalty += w.w(i) * std::abs(beta(i));
    }
    return resid + lambda * penalty;
}

LpProblem assemble_lp(const GradientSystem& sys, double lambda, const WeightVector& w) {
    check_lambda(lambda);
    const ReducedProblem r = reduce_system(sys, w);
    check_weights_positive(r.w);
    return build_fit_lp(r.sys, lambda, r.w);
}

LpProblem assemble_lp(const GramCache& g, double lambda, const WeightVector& w) {
    check_lambda(lambda);
    const ReducedProblem r = reduce_gram(g, w);
    check_weights_positive(r.w);
    return build_fit_lp(r.sys, lambda, r.w);
}

LpProblem assemble_dantzig_lp(const GradientSystem& sys, double lambda, const WeightVector& w) {
    check_lambda(lambda);
    const ReducedProblem r = reduce_system(sys, w);
    check_weights_positive(r.w);
    return build_dantzig_lp(r.sys, lambda, r.w);
}

LagsFit fit(const GradientSystem& sys, double lambda, const WeightVector& w, const Basis* warm) {
    check_lambda(lambda);
    if (lambda == 0.0) {
        // Only the Gram overload has the normal equations needed for an
        // exact unpenalized solution.
        throw InvalidArgument("lambda = 0 requires a full-rank square Gram system");
    }
    if (sys.k() == 0 || sys.p() == 0) throw InvalidArgument("empty gradient system");
    const ReducedProblem r = reduce_system(sys, w);
    LagsFit f = expand_fit(solve_reduced(r, lambda, warm, false), r.keep, w);
    f.objective = lags_objective(f.beta, sys, lambda, w);
    return f;
}

LagsFit fit(const GramCache& g, double lambda, const WeightVector& w, const Basis* warm) {
    check_lambda(lambda);
    if (g.p() == 0) throw InvalidArgument("empty Gram system");
    const ReducedProblem r = reduce_gram(g, w);
    if (lambda == 0.0) {
        // Exact normal-equation solution; requires an invertible sub-Gram.
        GramCache sub;
        sub.C = r.sys.M;
        sub.xty = r.sys.rhs;
        sub.n = g.n;
        sub.inf_norm = sub.C.cwiseAbs().rowwise().sum().maxCoeff();
        LagsFit f;
        f.lambda = 0.0;
        f.beta = ols_solution(sub);
        f.gradient = sub.xty - sub.C * f.beta;
        f.weights = r.w.w;
        f.active_set = active_from(f.beta);
        f.lp_iterations = 0;
        LagsFit full = expand_fit(std::move(f), r.keep, w);
        full.objective = lags_objective(full.beta, g, 0.0, w);
        return full;
    }
    LagsFit f = expand_fit(solve_reduced(r, lambda, warm, false), r.keep, w);
    f.objective = lags_objective(f.beta, g, lambda, w);
    return f;
}

LagsFit weighted_dantzig(const GradientSystem& sys, double lambda, const WeightVector& w,
                         const Basis* warm) {
    check_lambda(lambda);
    if (sys.k() == 0 || sys.p() == 0) throw InvalidArgument("empty gradient system");
    const ReducedProblem r = reduce_system(sys, w);
    return expand_fit(solve_reduced(r, lambda, warm, true), r.keep, w);
}

LagsFit weighted_dantzig(const GramCache& g, double lambda, const WeightVector& w,
                         const Basis* warm) {
    check_lambda(lambda);
    if (g.p() == 0) throw InvalidArgument("empty Gram system");
    const ReducedProblem r = reduce_gram(g, w);
    return expand_fit(solve_reduced(r, lambda, warm, true), r.keep, w);
}

namespace {

template <typename FitFn>
PathResult path_impl(std::vector<double> lambdas, FitFn&& do_fit) {
    if (lambdas.empty()) throw InvalidArgument("lambda grid must be nonempty");
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        if (!(lambdas[i] < lambdas[i - 1])) {
            throw InvalidArgument("lambda grid must be strictly descending");
        }
    }
    PathResult out;
    out.points.reserve(lambdas.size());
    Basis warm;
    for (double lam : lambdas) {
        PathPoint pt;
        pt.lambda = lam;
        try {
            LagsFit f = do_fit(lam, warm.empty() ? nullptr : &warm);
            warm = f.basis;
            pt.fit = std::move(f);
        } catch (const SolverError& e) {
            pt.error = e.what();
        }
        out.points.push_back(std::move(pt));
    }

    // Group consecutive points whose coefficients agree within 1e-9 into
    // maximal segments; failed points are singleton segments.
    const auto& pts = out.points;
    std::size_t start = 0;
    while (start < pts.size()) {
        std::size_t end = start;
        if (pts[start].fit.has_value()) {
            while (end + 1 < pts.size() && pts[end + 1].fit.has_value() &&
                   (pts[end + 1].fit->beta - pts[start].fit->beta)
                           .lpNorm<Eigen::Infinity>() <= 1e-9) {
                ++end;
            }
        }
        PathSegment seg;
        seg.lambda_high = pts[start].lambda;
        seg.lambda_low = pts[end].lambda;
        seg.first_index = static_cast<int>(start);
        seg.last_index = static_cast<int>(end);
        if (pts[start].fit.has_value()) seg.beta = pts[start].fit->beta;
        out.segments.push_back(std::move(seg));
        start = end + 1;
    }
    return out;
}

}  // namespace

PathResult fit_path(const GramCache& g, std::vector<double> lambdas, const WeightVector& w) {
    return path_impl(std::move(lambdas),
                     [&](double lam, const Basis* warm) { return fit(g, lam, w, warm); });
}

PathResult fit_path(const GradientSystem& sys, std::vector<double> lambdas,
                    const WeightVector& w) {
    return path_impl(std::move(lambdas),
                     [&](double lam, const Basis* warm) { return fit(sys, lam, w, warm); });
}

namespace {

template <typename FitFn>
double lambda_max_impl(const GradientSystem& reduced_sys, const WeightVector& reduced_w,
                       double rel_tol, FitFn&& do_fit) {
    // If lambda*w_j >= |column_j|_1 for every j, moving any single
    // coordinate cannot pay for its penalty, so beta = 0 is optimal; that
    // gives a safe bracket top.
    double hi = 0.0;
    for (Eigen::Index j = 0; j < reduced_sys.p(); ++j) {
        hi = std::max(hi, reduced_sys.M.col(j).lpNorm<1>() / reduced_w.w(j));
    }
    if (hi <= 0.0) return 0.0;
    hi *= 1.0 + 1e-12;
    // Every probe is solved cold: near the breakpoint the zero vertex and a
    // nonzero vertex tie within solver tolerance, and a warm basis parked at
    // the zero vertex would declare "all zero" at a lambda where a cold
    // solve — the path any caller takes to verify the result — pivots to
    // the nonzero one.
    const auto all_zero = [&](double lam) { return do_fit(lam, nullptr).active_set.empty(); };
    if (!all_zero(hi)) {
        // The bound above is tight only up to roundoff; widen once.
        hi *= 2.0;
        if (!all_zero(hi)) throw NumericalBreakdown("no all-zero lambda found");
    }
    double lo = 0.0;
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (hi + lo);
        if (all_zero(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace

double lambda_max(const GradientSystem& sys, const WeightVector& w, double rel_tol) {
    const ReducedProblem r = reduce_system(sys, w);
    check_weights_positive(r.w);
    return lambda_max_impl(r.sys, r.w, rel_tol, [&](double lam, const Basis* warm) {
        return solve_reduced(r, lam, warm, false);
    });
}

double lambda_max(const GramCache& g, const WeightVector& w, double rel_tol) {
    const ReducedProblem r = reduce_gram(g, w);
    check_weights_positive(r.w);
    return lambda_max_impl(r.sys, r.w, rel_tol, [&](double lam, const Basis* warm) {
        return solve_reduced(r, lam, warm, false);
    });
}

namespace {

std::vector<double> log_grid(double top, int count) {
    if (count < 1) throw InvalidArgument("grid size must be at least 1");
    if (top <= 0.0) throw InvalidArgument("lambda_max is zero; no grid to build");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        grid.push_back(top);
        return grid;
    }
    for (int i = 0; i < count; ++i) {
        grid.push_back(top * std::pow(10.0, -4.0 * i / (count - 1)));
    }
    return grid;
}

}  // namespace

std::vector<double> default_lambda_grid(const GramCache& g, const WeightVector& w, int count) {
    return log_grid(lambda_max(g, w), count);
}

std::vector<double> default_lambda_grid(const GradientSystem& sys, const WeightVector& w,
                                        int count) {
    return log_grid(lambda_max(sys, w), count);
}

DiagnosticsReport diagnostics(const GramCache& g, const WeightVector& w,
                              const std::vector<int>& support, int samples,
                              std::uint64_t seed) {
    const Eigen::Index p = g.p();
    if (w.p() != p) throw InvalidArgument("weight vector length does not match p");
    if (support.empty()) throw InvalidArgument("support must be nonempty");
    if (samples < 1) throw InvalidArgument("sample count must be at least 1");
    std::vector<char> in_support(static_cast<std::size_t>(p), 0);
    for (int i : support) {
        if (i < 0 || i >= p) throw InvalidArgument("support index out of range");
        if (in_support[static_cast<std::size_t>(i)]) throw InvalidArgument("duplicate support index");
        in_support[static_cast<std::size_t>(i)] = 1;
    }
    if (static_cast<Eigen::Index>(support.size()) == p) {
        // The exclusion constants are infima over the complement; with no
        // complement the report would be vacuous.
        throw InvalidArgument("support must be a proper subset of the coordinates");
    }

    DiagnosticsReport rep;
    rep.c_inf_norm = g.inf_norm;
    rep.a_n = 0.0;
    for (int i : support) rep.a_n = std::max(rep.a_n, w.w(i));
    rep.b_n = kInf;
    std::vector<int> complement;
    for (Eigen::Index i = 0; i < p; ++i) {
        if (!in_support[static_cast<std::size_t>(i)]) {
            complement.push_back(static_cast<int>(i));
            rep.b_n = std::min(rep.b_n, w.w(i));
        }
    }

    const Eigen::Index s = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd Cs(s, p);
    for (Eigen::Index a = 0; a < s; ++a) Cs.row(a) = g.C.row(support[static_cast<std::size_t>(a)]);

    // gamma is an infimum over sign-constrained vectors; sampling a finite
    // subset of them estimates it from above.
    Rng rng(seed);
    Eigen::VectorXd sv(p);
    double gamma = kInf;
    for (int it = 0; it < samples; ++it) {
        for (Eigen::Index i = 0; i < p; ++i) sv(i) = rng.uniform(-1.0, 1.0);
        const auto pick = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(s) - 1));
        sv(support[pick]) = (rng.uniform_int(0, 1) == 0) ? -1.0 : 1.0;
        gamma = std::min(gamma, (Cs * sv).lpNorm<Eigen::Infinity>());
    }
    rep.gamma_estimate = gamma;

    // eta = 1 - |C11^{-1} C12|_inf; with an empty complement the norm is 0.
    if (complement.empty()) {
        rep.eta_estimate = 1.0;
    } else {
        Eigen::MatrixXd C11(s, s);
        Eigen::MatrixXd C12(s, static_cast<Eigen::Index>(complement.size()));
        for (Eigen::Index a = 0; a < s; ++a) {
            for (Eigen::Index b = 0; b < s; ++b) {
                C11(a, b) = g.C(support[static_cast<std::size_t>(a)],
                                support[static_cast<std::size_t>(b)]);
            }
            for (std::size_t b = 0; b < complement.size(); ++b) {
                C12(a, static_cast<Eigen::Index>(b)) =
                    g.C(support[static_cast<std::size_t>(a)], complement[b]);
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(C11);
        if (!lu.isInvertible()) throw SingularC11();
        const Eigen::MatrixXd X = lu.solve(C12);
        rep.eta_estimate = 1.0 - X.cwiseAbs().rowwise().sum().maxCoeff();
    }
    return rep;
}

double inverse_sqrt_inf_norm(const Eigen::MatrixXd& C) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(C);
    if (eig.eigenvalues().minCoeff() <= 0.0) {
        throw SingularGram("matrix is not positive definite");
    }
    const Eigen::MatrixXd half =
        eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
        eig.eigenvectors().transpose();
    return half.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace lags
