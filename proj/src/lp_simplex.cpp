#include "lags/lp_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lags {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class St : unsigned char { Basic, AtLower, AtUpper, FreeZero, Fixed };

// Dense two-phase bounded-variable simplex over the slack-augmented system
// [A | I] x = b.  Nonbasic variables rest at a finite bound, or at zero when
// both bounds are infinite; free variables therefore never need splitting.
// The basis inverse is kept explicitly and rebuilt from scratch every
// `refactor_every` pivots (product-form row updates in between).
class Simplex {
  public:
    Simplex(const LpProblem& lp, const SimplexOptions& opts) : lp_(lp), opts_(opts) {
        lp.validate();
        k_ = lp.num_rows();
        m_ = lp.num_vars();
        nt_ = m_ + k_;
        cols_.resize(k_, nt_);
        if (m_ > 0) cols_.leftCols(m_) = lp.A;
        if (k_ > 0) cols_.rightCols(k_).setIdentity();
        lower_.resize(nt_);
        upper_.resize(nt_);
        lower_.head(m_) = lp.var_lower;
        upper_.head(m_) = lp.var_upper;
        lower_.tail(k_).setZero();
        upper_.tail(k_).setConstant(kInf);
        bscale_ = 1.0 + (k_ > 0 ? lp.b.cwiseAbs().maxCoeff() : 0.0);
        feas_abs_ = opts.feas_tol * bscale_;
        degen_tol_ = 1e-11 * bscale_;
        max_iter_ = opts.max_iterations > 0 ? opts.max_iterations : auto_cap();
    }

    LpSolution run(const Basis* warm) {
        if (warm != nullptr && try_warm_start(*warm)) {
            return run_phase2();
        }
        cold_start();
        if (needs_phase1()) {
            LpSolution infeasible;
            if (!run_phase1(&infeasible)) return infeasible;
        }
        return run_phase2();
    }

  private:
    // ----- setup -----------------------------------------------------------

    long auto_cap() const {
        // Number of bases bounds the Bland-rule pivot count; saturate the
        // binomial and keep a hard practical ceiling on top.
        double binom = 1.0;
        const double kk = static_cast<double>(std::min(k_, nt_ - k_));
        for (double i = 0; i < kk; ++i) {
            binom *= (static_cast<double>(nt_) - i) / (i + 1.0);
            if (binom > 1e15) {
                binom = 1e15;
                break;
            }
        }
        const double cap = std::min(binom + 1000.0 + 100.0 * static_cast<double>(nt_), 5e6);
        return static_cast<long>(cap);
    }

    St default_state(Eigen::Index j) const {
        if (lower_(j) == upper_(j)) return St::Fixed;
        if (lower_(j) > -kInf) return St::AtLower;
        if (upper_(j) < kInf) return St::AtUpper;
        return St::FreeZero;
    }

    double resting_value(Eigen::Index j, St s) const {
        switch (s) {
            case St::AtLower:
            case St::Fixed:
                return lower_(j);
            case St::AtUpper:
                return upper_(j);
            default:
                return 0.0;
        }
    }

    void cold_start() {
        state_.assign(static_cast<std::size_t>(nt_), St::AtLower);
        x_.setZero(nt_);
        for (Eigen::Index j = 0; j < nt_; ++j) {
            state_[static_cast<std::size_t>(j)] = default_state(j);
            x_(j) = resting_value(j, state_[static_cast<std::size_t>(j)]);
        }
        basis_.resize(static_cast<std::size_t>(k_));
        for (Eigen::Index i = 0; i < k_; ++i) {
            basis_[static_cast<std::size_t>(i)] = static_cast<int>(m_ + i);
            state_[static_cast<std::size_t>(m_ + i)] = St::Basic;
        }
        Binv_ = Eigen::MatrixXd::Identity(k_, k_);
        compute_xB();
    }

    bool try_warm_start(const Basis& start) {
        if (static_cast<Eigen::Index>(start.basic_indices.size()) != k_ || k_ == 0) return false;
        std::vector<char> seen(static_cast<std::size_t>(nt_), 0);
        for (int j : start.basic_indices) {
            if (j < 0 || j >= nt_ || seen[static_cast<std::size_t>(j)]) return false;
            seen[static_cast<std::size_t>(j)] = 1;
        }
        state_.assign(static_cast<std::size_t>(nt_), St::AtLower);
        x_.setZero(nt_);
        for (Eigen::Index j = 0; j < nt_; ++j) {
            state_[static_cast<std::size_t>(j)] = default_state(j);
        }
        for (int j : start.nonbasic_at_upper) {
            if (j >= 0 && j < nt_ && upper_(j) < kInf &&
                state_[static_cast<std::size_t>(j)] != St::Fixed &&
                !seen[static_cast<std::size_t>(j)]) {
                state_[static_cast<std::size_t>(j)] = St::AtUpper;
            }
        }
        for (Eigen::Index j = 0; j < nt_; ++j) {
            x_(j) = resting_value(j, state_[static_cast<std::size_t>(j)]);
        }
        basis_.assign(start.basic_indices.begin(), start.basic_indices.end());
        for (int j : basis_) state_[static_cast<std::size_t>(j)] = St::Basic;

        Eigen::MatrixXd B(k_, k_);
        for (Eigen::Index i = 0; i < k_; ++i) B.col(i) = cols_.col(basis_[static_cast<std::size_t>(i)]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
        if (!lu.isInvertible()) return false;
        Binv_ = lu.inverse();
        compute_xB();
        for (Eigen::Index i = 0; i < k_; ++i) {
            const int bj = basis_[static_cast<std::size_t>(i)];
            if (xB_(i) < lower_(bj) - feas_abs_ || xB_(i) > upper_(bj) + feas_abs_) return false;
        }
        return true;
    }

    void compute_xB() {
        Eigen::VectorXd rhs = lp_.b;
        const Eigen::Index total = cols_.cols();
        for (Eigen::Index j = 0; j < total; ++j) {
            if (state_[static_cast<std::size_t>(j)] == St::Basic) continue;
            const double v = x_(j);
            if (v != 0.0) rhs -= cols_.col(j) * v;
        }
        xB_ = Binv_ * rhs;
    }

    void refactor() {
        Eigen::MatrixXd B(k_, k_);
        for (Eigen::Index i = 0; i < k_; ++i) B.col(i) = cols_.col(basis_[static_cast<std::size_t>(i)]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
        if (!lu.isInvertible()) {
            throw NumericalBreakdown("simplex basis became singular during refactorization");
        }
        Binv_ = lu.inverse();
        compute_xB();
        since_refactor_ = 0;
    }

    // ----- phase 1 ----------------------------------------------------------

    bool needs_phase1() {
        for (Eigen::Index i = 0; i < k_; ++i) {
            if (xB_(i) < lower_(basis_[static_cast<std::size_t>(i)])) return true;
        }
        return false;
    }

    // Returns true when a feasible basis was reached; otherwise fills `out`
    // with the Infeasible certificate and returns false.
    bool run_phase1(LpSolution* out) {
        art_begin_ = cols_.cols();
        std::vector<Eigen::Index> art_rows;
        for (Eigen::Index i = 0; i < k_; ++i) {
            if (xB_(i) < lower_(basis_[static_cast<std::size_t>(i)])) art_rows.push_back(i);
        }
        const Eigen::Index na = static_cast<Eigen::Index>(art_rows.size());
        cols_.conservativeResize(Eigen::NoChange, art_begin_ + na);
        lower_.conservativeResize(art_begin_ + na);
        upper_.conservativeResize(art_begin_ + na);
        x_.conservativeResize(art_begin_ + na);
        for (Eigen::Index a = 0; a < na; ++a) {
            const Eigen::Index col = art_begin_ + a;
            const Eigen::Index row = art_rows[static_cast<std::size_t>(a)];
            cols_.col(col).setZero();
            cols_(row, col) = -1.0;
            lower_(col) = 0.0;
            upper_(col) = kInf;
            x_(col) = 0.0;
            state_.push_back(St::Basic);
            // The violated slack (or warm basic) leaves for its nearest bound;
            // the artificial absorbs the residual with a positive value.
            const int old = basis_[static_cast<std::size_t>(row)];
            state_[static_cast<std::size_t>(old)] = St::AtLower;
            x_(old) = lower_(old);
            basis_[static_cast<std::size_t>(row)] = static_cast<int>(col);
        }
        refactor();

        Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(cols_.cols());
        for (Eigen::Index a = 0; a < na; ++a) cost1(art_begin_ + a) = 1.0;
        const IterResult res = iterate(cost1);
        if (res == IterResult::Unbounded) {
            throw NumericalBreakdown("phase-1 objective reported unbounded");
        }

        double total_infeas = 0.0;
        double max_infeas = 0.0;
        for (Eigen::Index i = 0; i < k_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] >= art_begin_) {
                total_infeas += std::max(0.0, xB_(i));
                max_infeas = std::max(max_infeas, xB_(i));
            }
        }
        if (max_infeas > feas_abs_) {
            out->status = LpStatus::Infeasible;
            out->phase1_objective = total_infeas;
            out->iterations = iter_;
            return false;
        }
        drive_out_artificials();
        phase1_objective_ = total_infeas;
        return true;
    }

    void drive_out_artificials() {
        for (Eigen::Index r = 0; r < k_; ++r) {
            if (basis_[static_cast<std::size_t>(r)] < art_begin_) continue;
            int best = -1;
            double best_mag = opts_.pivot_tol;
            for (Eigen::Index j = 0; j < art_begin_; ++j) {
                const St s = state_[static_cast<std::size_t>(j)];
                if (s == St::Basic || s == St::Fixed) continue;
                const double alpha = Binv_.row(r).dot(cols_.col(j));
                if (std::abs(alpha) > best_mag) {
                    best_mag = std::abs(alpha);
                    best = static_cast<int>(j);
                }
            }
            if (best >= 0) {
                // Zero-length pivot: swap the at-zero artificial for a real
                // column without moving any variable.
                Eigen::VectorXd w = Binv_ * cols_.col(best);
                const int leaving = basis_[static_cast<std::size_t>(r)];
                state_[static_cast<std::size_t>(leaving)] = St::Fixed;
                lower_(leaving) = upper_(leaving) = 0.0;
                x_(leaving) = 0.0;
                basis_[static_cast<std::size_t>(r)] = best;
                state_[static_cast<std::size_t>(best)] = St::Basic;
                const double entering_value = x_(best);
                update_Binv(w, r);
                xB_(r) = entering_value;
            } else {
                // Redundant row: the artificial stays basic, pinned at zero.
                const int a = basis_[static_cast<std::size_t>(r)];
                lower_(a) = upper_(a) = 0.0;
                xB_(r) = 0.0;
            }
        }
        // Remaining nonbasic artificials can never re-enter.
        for (Eigen::Index j = art_begin_; j < cols_.cols(); ++j) {
            if (state_[static_cast<std::size_t>(j)] != St::Basic) {
                state_[static_cast<std::size_t>(j)] = St::Fixed;
                lower_(j) = upper_(j) = 0.0;
                x_(j) = 0.0;
            }
        }
    }

    // ----- phase 2 ----------------------------------------------------------

    LpSolution run_phase2() {
        Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(cols_.cols());
        cost2.head(m_) = lp_.c;
        const IterResult res = iterate(cost2);
        LpSolution sol;
        sol.iterations = iter_;
        sol.phase1_objective = phase1_objective_;
        if (res == IterResult::Unbounded) {
            sol.status = LpStatus::Unbounded;
            return sol;
        }
        sol.status = LpStatus::Optimal;
        sol.x.resize(m_);
        for (Eigen::Index j = 0; j < m_; ++j) sol.x(j) = x_(j);
        for (Eigen::Index i = 0; i < k_; ++i) {
            const int bj = basis_[static_cast<std::size_t>(i)];
            if (bj < m_) sol.x(bj) = xB_(i);
        }
        sol.objective = lp_.c.dot(sol.x);
        sol.basis.basic_indices = basis_;
        for (Eigen::Index j = 0; j < nt_; ++j) {
            if (state_[static_cast<std::size_t>(j)] == St::AtUpper) {
                sol.basis.nonbasic_at_upper.push_back(static_cast<int>(j));
            }
        }
        sol.degenerate_optimum = degenerate_optimum_;
        sol.dual_residual = final_dual_residual_;
        fill_residuals(&sol, cost2);
        return sol;
    }

    void fill_residuals(LpSolution* sol, const Eigen::VectorXd& cost) {
        double primal = 0.0;
        if (k_ > 0) {
            const Eigen::VectorXd row_vals = lp_.A * sol->x;
            primal = (row_vals - lp_.b).maxCoeff();
        }
        for (Eigen::Index j = 0; j < m_; ++j) {
            if (lp_.var_lower(j) > -kInf) primal = std::max(primal, lp_.var_lower(j) - sol->x(j));
            if (lp_.var_upper(j) < kInf) primal = std::max(primal, sol->x(j) - lp_.var_upper(j));
        }
        sol->primal_residual = std::max(0.0, primal);

        // Row duals come from the slack reduced costs: d_slack_i = -y_i.
        Eigen::VectorXd cB(k_);
        for (Eigen::Index i = 0; i < k_; ++i) cB(i) = cost(basis_[static_cast<std::size_t>(i)]);
        const Eigen::VectorXd y = Binv_.transpose() * cB;
        double compl_viol = 0.0;
        if (k_ > 0) {
            const Eigen::VectorXd slack = lp_.b - lp_.A * sol->x;
            for (Eigen::Index i = 0; i < k_; ++i) {
                compl_viol = std::max(compl_viol, std::abs(y(i) * slack(i)));
            }
        }
        sol->complementarity = compl_viol;
    }

    // ----- core iteration ---------------------------------------------------

    enum class IterResult { Optimal, Unbounded };

    IterResult iterate(const Eigen::VectorXd& cost) {
        const Eigen::Index total = cols_.cols();
        Eigen::VectorXd cB(k_);
        for (;;) {
            for (Eigen::Index i = 0; i < k_; ++i) cB(i) = cost(basis_[static_cast<std::size_t>(i)]);
            const Eigen::VectorXd y = Binv_.transpose() * cB;

            // Pricing.  Dantzig: most violating reduced cost, lowest index on
            // ties.  Bland (after too many degenerate pivots): lowest index
            // with any violation.
            int enter = -1;
            double enter_viol = opts_.dual_tol;
            double enter_d = 0.0;
            double max_zero_rc = 0.0;
            bool zero_rc_movable = false;
            for (Eigen::Index j = 0; j < total; ++j) {
                const St s = state_[static_cast<std::size_t>(j)];
                if (s == St::Basic || s == St::Fixed) continue;
                const double d = cost(j) - y.dot(cols_.col(j));
                double viol;
                switch (s) {
                    case St::AtLower:
                        viol = -d;
                        break;
                    case St::AtUpper:
                        viol = d;
                        break;
                    default:  // FreeZero
                        viol = std::abs(d);
                        break;
                }
                if (viol <= opts_.dual_tol) {
                    if (std::abs(d) <= opts_.dual_tol) zero_rc_movable = true;
                    max_zero_rc = std::max(max_zero_rc, viol);
                    continue;
                }
                if (enter < 0 || viol > enter_viol) {
                    enter = static_cast<int>(j);
                    enter_viol = viol;
                    enter_d = d;
                    if (bland_) break;  // first violating index wins
                }
            }
            if (enter < 0) {
                if (since_refactor_ > 0) {
                    // Confirm optimality against a freshly factorized basis.
                    refactor();
                    continue;
                }
                degenerate_optimum_ = zero_rc_movable;
                final_dual_residual_ = max_zero_rc;
                return IterResult::Optimal;
            }

            if (++iter_ > max_iter_) {
                throw MaxIterations("simplex iteration cap exceeded");
            }

            const St es = state_[static_cast<std::size_t>(enter)];
            const double t = (es == St::AtLower || (es == St::FreeZero && enter_d < 0.0)) ? 1.0 : -1.0;
            const Eigen::VectorXd w = Binv_ * cols_.col(enter);

            // Ratio test: the entering variable moves by delta >= 0 in
            // direction t; basic variable i changes at rate -t*w_i.
            const double span = upper_(enter) - lower_(enter);  // inf when either side is open
            double row_min = kInf;
            for (Eigen::Index i = 0; i < k_; ++i) {
                const double g = t * w(i);
                const int bj = basis_[static_cast<std::size_t>(i)];
                double lim;
                if (g > opts_.pivot_tol) {
                    if (lower_(bj) == -kInf) continue;
                    lim = (xB_(i) - lower_(bj)) / g;
                } else if (g < -opts_.pivot_tol) {
                    if (upper_(bj) == kInf) continue;
                    lim = (xB_(i) - upper_(bj)) / g;
                } else {
                    continue;
                }
                if (lim < 0.0) lim = 0.0;
                if (lim < row_min) row_min = lim;
            }

            if (span <= row_min) {
                // Bound flip: the entering variable crosses to its other
                // bound before any basic variable blocks.
                if (span == kInf) return IterResult::Unbounded;
                if (span <= degen_tol_) note_degenerate();
                xB_ -= (t * span) * w;
                state_[static_cast<std::size_t>(enter)] =
                    (es == St::AtLower) ? St::AtUpper : St::AtLower;
                x_(enter) = resting_value(enter, state_[static_cast<std::size_t>(enter)]);
                maybe_refactor();
                continue;
            }

            // Choose the leaving row among (near-)ties: largest pivot for
            // stability, or smallest column index under Bland's rule.
            const double tie = row_min + 1e-9 * (1.0 + row_min);
            int leave = -1;
            bool leave_upper = false;
            double best_key = -1.0;
            for (Eigen::Index i = 0; i < k_; ++i) {
                const double g = t * w(i);
                const int bj = basis_[static_cast<std::size_t>(i)];
                double lim;
                bool hits_upper;
                if (g > opts_.pivot_tol) {
                    if (lower_(bj) == -kInf) continue;
                    lim = (xB_(i) - lower_(bj)) / g;
                    hits_upper = false;
                } else if (g < -opts_.pivot_tol) {
                    if (upper_(bj) == kInf) continue;
                    lim = (xB_(i) - upper_(bj)) / g;
                    hits_upper = true;
                } else {
                    continue;
                }
                if (lim < 0.0) lim = 0.0;
                if (lim > tie) continue;
                const double key = bland_ ? -static_cast<double>(bj) : std::abs(w(i));
                if (leave < 0 || key > best_key) {
                    leave = static_cast<int>(i);
                    leave_upper = hits_upper;
                    best_key = key;
                }
            }
            if (leave < 0) {
                throw NumericalBreakdown("no acceptable pivot in ratio test");
            }

            const double delta = std::max(0.0, leave_upper
                    ? (xB_(leave) - upper_(basis_[static_cast<std::size_t>(leave)])) / (t * w(leave))
                    : (xB_(leave) - lower_(basis_[static_cast<std::size_t>(leave)])) / (t * w(leave)));
            if (delta <= degen_tol_) note_degenerate();

            const double entering_value = x_(enter) + t * delta;
            xB_ -= (t * delta) * w;
            const int leaving_col = basis_[static_cast<std::size_t>(leave)];
            if (leaving_col >= art_begin_ && art_begin_ >= 0) {
                state_[static_cast<std::size_t>(leaving_col)] = St::Fixed;
                lower_(leaving_col) = upper_(leaving_col) = 0.0;
                x_(leaving_col) = 0.0;
            } else {
                state_[static_cast<std::size_t>(leaving_col)] = leave_upper ? St::AtUpper : St::AtLower;
                x_(leaving_col) = resting_value(leaving_col, state_[static_cast<std::size_t>(leaving_col)]);
            }
            basis_[static_cast<std::size_t>(leave)] = enter;
            state_[static_cast<std::size_t>(enter)] = St::Basic;
            update_Binv(w, leave);
            xB_(leave) = entering_value;
            maybe_refactor();
        }
    }

    void note_degenerate() {
        if (!bland_ && ++degen_count_ > opts_.degenerate_switch) bland_ = true;
    }

    void maybe_refactor() {
        if (++since_refactor_ >= opts_.refactor_every) refactor();
    }

    // Product-form update: B_new differs from B in one column, so the new
    // inverse is an elementary row operation applied to the old one.
    void update_Binv(const Eigen::VectorXd& w, Eigen::Index r) {
        const double pivot = w(r);
        if (std::abs(pivot) < opts_.pivot_tol) {
            throw NumericalBreakdown("pivot below stability threshold");
        }
        Binv_.row(r) /= pivot;
        for (Eigen::Index i = 0; i < k_; ++i) {
            if (i == r) continue;
            const double f = w(i);
            if (f != 0.0) Binv_.row(i) -= f * Binv_.row(r);
        }
    }

    // ----- members ----------------------------------------------------------

    const LpProblem& lp_;
    SimplexOptions opts_;
    Eigen::Index k_ = 0, m_ = 0, nt_ = 0;
    Eigen::MatrixXd cols_;
    Eigen::VectorXd lower_, upper_, x_;
    std::vector<St> state_;
    std::vector<int> basis_;
    Eigen::MatrixXd Binv_;
    Eigen::VectorXd xB_;
    double bscale_ = 1.0, feas_abs_ = 0.0, degen_tol_ = 0.0;
    long max_iter_ = 0, iter_ = 0, degen_count_ = 0;
    bool bland_ = false;
    int since_refactor_ = 0;
    Eigen::Index art_begin_ = std::numeric_limits<Eigen::Index>::max();
    double phase1_objective_ = 0.0;
    double final_dual_residual_ = 0.0;
    bool degenerate_optimum_ = false;
};

}  // namespace

void LpProblem::validate() const {
    const Eigen::Index m = num_vars();
    const Eigen::Index k = num_rows();
    if (A.rows() != k || A.cols() != m || var_lower.size() != m || var_upper.size() != m) {
        throw InvalidArgument("inconsistent LP dimensions");
    }
    if (!c.allFinite() || !A.allFinite() || !b.allFinite()) {
        throw InvalidArgument("LP data contains non-finite entries");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        if (std::isnan(var_lower(j)) || std::isnan(var_upper(j)) || var_lower(j) > var_upper(j)) {
            throw InvalidArgument("inconsistent variable bounds");
        }
    }
}

LpSolution solve(const LpProblem& lp, const SimplexOptions& opts) {
    Simplex s(lp, opts);
    return s.run(nullptr);
}

LpSolution solve_warm(const LpProblem& lp, const Basis& start, const SimplexOptions& opts) {
    Simplex s(lp, opts);
    return s.run(start.empty() ? nullptr : &start);
}

double VertexList::best_objective() const {
    if (objectives.empty()) throw InvalidArgument("no vertices enumerated");
    return *std::min_element(objectives.begin(), objectives.end());
}

VertexList enumerate_vertices_bruteforce(const LpProblem& lp, std::uint64_t max_combinations) {
    lp.validate();
    const Eigen::Index m = lp.num_vars();
    const Eigen::Index k = lp.num_rows();

    // Constraint pool in the original variable space: every row plus every
    // finite bound, each as <a, x> <= rhs.
    std::vector<Eigen::VectorXd> normals;
    std::vector<double> rhs;
    for (Eigen::Index i = 0; i < k; ++i) {
        normals.push_back(lp.A.row(i).transpose());
        rhs.push_back(lp.b(i));
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        if (lp.var_lower(j) > -kInf) {
            Eigen::VectorXd a = Eigen::VectorXd::Zero(m);
            a(j) = -1.0;
            normals.push_back(a);
            rhs.push_back(-lp.var_lower(j));
        }
        if (lp.var_upper(j) < kInf) {
            Eigen::VectorXd a = Eigen::VectorXd::Zero(m);
            a(j) = 1.0;
            normals.push_back(a);
            rhs.push_back(lp.var_upper(j));
        }
    }
    const std::size_t pool = normals.size();
    VertexList out;
    if (m == 0 || pool < static_cast<std::size_t>(m)) return out;  // no vertex can exist

    double combos = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        combos *= static_cast<double>(pool - static_cast<std::size_t>(i)) / static_cast<double>(i + 1);
    }
    if (combos > static_cast<double>(max_combinations)) {
        throw TooLarge("vertex enumeration would visit " + std::to_string(combos) + " combinations");
    }

    double scale = 1.0;
    for (double r : rhs) scale = std::max(scale, std::abs(r));
    const double feas_tol = 1e-9 * scale;

    std::vector<std::size_t> idx(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    Eigen::MatrixXd M(m, m);
    Eigen::VectorXd r(m);
    for (;;) {
        for (Eigen::Index i = 0; i < m; ++i) {
            M.row(i) = normals[idx[static_cast<std::size_t>(i)]].transpose();
            r(i) = rhs[idx[static_cast<std::size_t>(i)]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        if (lu.isInvertible()) {
            const Eigen::VectorXd x = lu.solve(r);
            bool feasible = x.allFinite();
            for (std::size_t ci = 0; feasible && ci < pool; ++ci) {
                if (normals[ci].dot(x) > rhs[ci] + feas_tol) feasible = false;
            }
            if (feasible) {
                bool duplicate = false;
                for (const auto& v : out.points) {
                    if ((v - x).lpNorm<Eigen::Infinity>() <= 1e-7 * (1.0 + x.cwiseAbs().maxCoeff())) {
                        duplicate = true;
                        break;
                    }
                }
                if (!duplicate) {
                    out.points.push_back(x);
                    out.objectives.push_back(lp.c.dot(x));
                }
            }
        }
        // next m-combination of {0..pool-1}
        Eigen::Index pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                               pool - static_cast<std::size_t>(m - pos)) {
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (Eigen::Index q = pos + 1; q < m; ++q) {
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return out;
}

LpCheck check_solution(const LpProblem& lp, const LpSolution& sol) {
    LpCheck chk{0.0, 0.0, 0.0};
    const Eigen::Index m = lp.num_vars();
    const Eigen::Index k = lp.num_rows();
    if (sol.status != LpStatus::Optimal) return chk;

    Eigen::VectorXd slack;
    if (k > 0) {
        slack = lp.b - lp.A * sol.x;
        chk.primal_residual = std::max(0.0, (-slack).maxCoeff());
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        if (lp.var_lower(j) > -kInf) {
            chk.primal_residual = std::max(chk.primal_residual, lp.var_lower(j) - sol.x(j));
        }
        if (lp.var_upper(j) < kInf) {
            chk.primal_residual = std::max(chk.primal_residual, sol.x(j) - lp.var_upper(j));
        }
    }

    if (static_cast<Eigen::Index>(sol.basis.basic_indices.size()) != k) return chk;
    Eigen::MatrixXd B(k, k);
    Eigen::VectorXd cB(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const int bj = sol.basis.basic_indices[static_cast<std::size_t>(i)];
        if (bj < 0 || bj >= m + k) return chk;
        if (bj < m) {
            B.col(i) = lp.A.col(bj);
            cB(i) = lp.c(bj);
        } else {
            B.col(i).setZero();
            B(bj - m, i) = 1.0;
            cB(i) = 0.0;
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (!lu.isInvertible()) return chk;
    const Eigen::VectorXd y = lu.transpose().solve(cB);

    std::vector<char> basic(static_cast<std::size_t>(m + k), 0);
    for (int bj : sol.basis.basic_indices) basic[static_cast<std::size_t>(bj)] = 1;
    const double at_tol = 1e-7 * (1.0 + sol.x.cwiseAbs().maxCoeff());
    for (Eigen::Index j = 0; j < m + k; ++j) {
        if (basic[static_cast<std::size_t>(j)]) continue;
        double d, xj, lo, up;
        if (j < m) {
            d = lp.c(j) - y.dot(lp.A.col(j));
            xj = sol.x(j);
            lo = lp.var_lower(j);
            up = lp.var_upper(j);
        } else {
            d = -y(j - m);
            xj = slack(j - m);
            lo = 0.0;
            up = kInf;
        }
        if (lo == up) continue;
        double viol;
        const bool at_lo = (lo > -kInf) && std::abs(xj - lo) <= at_tol;
        const bool at_up = (up < kInf) && std::abs(xj - up) <= at_tol;
        if (at_lo && at_up) {
            viol = std::min(std::max(0.0, -d), std::max(0.0, d));
        } else if (at_lo) {
            viol = std::max(0.0, -d);
        } else if (at_up) {
            viol = std::max(0.0, d);
        } else {
            viol = std::abs(d);  // interior nonbasic: only optimal at zero reduced cost
        }
        chk.dual_residual = std::max(chk.dual_residual, viol);
    }
    for (Eigen::Index i = 0; i < k; ++i) {
        chk.complementarity = std::max(chk.complementarity, std::abs(y(i) * slack(i)));
    }
    return chk;
}

}  // namespace lags
