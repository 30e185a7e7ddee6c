#include "tnorm/lp.hpp"

#include <cmath>
#include <limits>

#include "tnorm/config.hpp"

namespace tnorm {
namespace {

constexpr double kCostEps = 1e-10;     // reduced-cost threshold for entering
constexpr double kPivotEps = 1e-9;     // smallest acceptable pivot magnitude
constexpr long kMaxPivots = 500000;
constexpr int kRefactorInterval = 50;  // pivots between rebuilds from original data

// Dense standard-form solver working on [structural | artificial | rhs]
// columns. The tableau is periodically recomputed from the original data via
// the current basis (B^{-1}A), which removes accumulated pivot drift; the
// final basis is certified against the original data before returning.
struct Simplex {
    Matrix a;             // m x n structural columns, rows flipped to b >= 0
    Vector b;             // m, nonnegative
    Vector cost;          // n structural costs (artificials cost 0 or 1)
    int m, n;
    Matrix t;             // (m + 2) x (n + m + 1); row m: phase-2, row m+1: phase-1
    std::vector<int> basis;

    Simplex(Matrix a_, Vector b_, Vector cost_)
        : a(std::move(a_)), b(std::move(b_)), cost(std::move(cost_)) {
        m = static_cast<int>(b.size());
        n = static_cast<int>(cost.size());
        t = Matrix::Zero(m + 2, n + m + 1);
        basis.resize(m);
        for (int i = 0; i < m; ++i) basis[i] = n + i;
        rebuild();
    }

    int rhs_col() const { return n + m; }

    // Recompute the whole tableau from the original data and current basis.
    void rebuild() {
        Matrix bmat = Matrix::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            if (basis[i] < n) bmat.col(i) = a.col(basis[i]);
            else bmat(basis[i] - n, i) = 1.0;
        }
        Matrix binv = bmat.partialPivLu().inverse();
        if (!binv.allFinite()) throw std::runtime_error("lp_solve: singular basis");
        t.block(0, 0, m, n) = binv * a;
        t.block(0, n, m, m) = binv;
        t.col(rhs_col()).head(m) = binv * b;

        // Phase-2 reduced costs: c_j - c_B . (B^{-1} A_j); artificials cost 0.
        Vector cb = Vector::Zero(m);
        for (int i = 0; i < m; ++i) cb(i) = basis[i] < n ? cost(basis[i]) : 0.0;
        for (int j = 0; j < n; ++j)
            t(m, j) = cost(j) - cb.dot(t.col(j).head(m));
        for (int j = 0; j < m; ++j)
            t(m, n + j) = -cb.dot(t.col(n + j).head(m));
        t(m, rhs_col()) = -cb.dot(t.col(rhs_col()).head(m));

        // Phase-1 reduced costs: artificials cost 1.
        Vector wb = Vector::Zero(m);
        for (int i = 0; i < m; ++i) wb(i) = basis[i] >= n ? 1.0 : 0.0;
        for (int j = 0; j < n; ++j) t(m + 1, j) = -wb.dot(t.col(j).head(m));
        for (int j = 0; j < m; ++j) t(m + 1, n + j) = 1.0 - wb.dot(t.col(n + j).head(m));
        t(m + 1, rhs_col()) = -wb.dot(t.col(rhs_col()).head(m));
    }

    void pivot(int row, int col) {
        const double p = t(row, col);
        t.row(row) /= p;
        for (int i = 0; i < m + 2; ++i) {
            if (i == row) continue;
            const double f = t(i, col);
            if (f != 0.0) t.row(i) -= f * t.row(row);
        }
        basis[row] = col;
    }

    enum class StepResult { Optimal, Unbounded, Pivoted };

    // One Bland step on the given cost row.
    StepResult step(int cost_row, bool allow_artificial) {
        const int limit = allow_artificial ? n + m : n;
        int enter = -1;
        for (int j = 0; j < limit; ++j) {
            if (t(cost_row, j) < -kCostEps) { enter = j; break; }
        }
        if (enter < 0) return StepResult::Optimal;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            const double aij = t(i, enter);
            if (aij > kPivotEps) {
                const double ratio = t(i, rhs_col()) / aij;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) return StepResult::Unbounded;
        pivot(leave, enter);
        return StepResult::Pivoted;
    }

    // Runs a phase to certified optimality: pivots in chunks, rebuilding from
    // the original data between chunks, and only accepts Optimal/Unbounded
    // verdicts reached on a freshly rebuilt tableau.
    StepResult run_phase(int cost_row, bool allow_artificial) {
        long total = 0;
        while (true) {
            bool fresh = true;
            for (int k = 0; k < kRefactorInterval; ++k) {
                StepResult r = step(cost_row, allow_artificial);
                if (r == StepResult::Pivoted) {
                    fresh = false;
                    if (++total > kMaxPivots)
                        throw std::runtime_error("lp_solve: pivot limit exceeded");
                    continue;
                }
                if (fresh) return r;  // verdict on rebuilt data: trust it
                break;
            }
            rebuild();
        }
    }
};

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
    require_finite(problem.objective, "lp objective");
    require_finite(problem.eq_lhs, "lp constraint matrix");
    require_finite(problem.eq_rhs, "lp constraint rhs");
    const int n_orig = static_cast<int>(problem.objective.size());
    const int m = static_cast<int>(problem.eq_rhs.size());
    if (problem.eq_lhs.rows() != m || (m > 0 && problem.eq_lhs.cols() != n_orig))
        throw dimension_mismatch("lp_solve: constraint matrix shape");
    if (!problem.lower_bounds.empty() &&
        static_cast<int>(problem.lower_bounds.size()) != n_orig)
        throw dimension_mismatch("lp_solve: lower_bounds length");

    // Shift bounded variables to zero lower bound and split free ones into
    // positive/negative parts. cols records how to reassemble x.
    struct ColRef { int var; double sign; };
    std::vector<ColRef> cols;
    std::vector<double> shift(n_orig, 0.0);
    for (int j = 0; j < n_orig; ++j) {
        std::optional<double> lb =
            problem.lower_bounds.empty() ? std::optional<double>(0.0) : problem.lower_bounds[j];
        if (lb.has_value()) {
            shift[j] = *lb;
            cols.push_back({j, 1.0});
        } else {
            cols.push_back({j, 1.0});
            cols.push_back({j, -1.0});
        }
    }
    const int n = static_cast<int>(cols.size());

    Vector b0 = problem.eq_rhs;
    if (m > 0 && n_orig > 0) {
        Vector s(n_orig);
        for (int j = 0; j < n_orig; ++j) s(j) = shift[j];
        b0 -= problem.eq_lhs * s;
    }

    std::vector<double> row_sign(m, 1.0);
    Matrix a(m, n);
    Vector b(m);
    for (int i = 0; i < m; ++i) {
        row_sign[i] = b0(i) < 0.0 ? -1.0 : 1.0;
        for (int k = 0; k < n; ++k)
            a(i, k) = row_sign[i] * problem.eq_lhs(i, cols[k].var) * cols[k].sign;
        b(i) = row_sign[i] * b0(i);
    }
    Vector c(n);
    for (int k = 0; k < n; ++k) c(k) = problem.objective(cols[k].var) * cols[k].sign;

    Simplex sx(std::move(a), std::move(b), std::move(c));

    LpSolution sol;
    if (m > 0) {
        if (sx.run_phase(m + 1, /*allow_artificial=*/true) == Simplex::StepResult::Unbounded)
            throw std::runtime_error("lp_solve: phase 1 unbounded (internal error)");
        const double phase1 = -sx.t(m + 1, sx.rhs_col());
        if (phase1 > tol().feas) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Pivot leftover artificials out on any usable structural entry;
        // rows that stay artificial are redundant and numerically zero on the
        // structural columns.
        for (int i = 0; i < m; ++i) {
            if (sx.basis[i] < n) continue;
            for (int j = 0; j < n; ++j) {
                if (std::abs(sx.t(i, j)) > 1e-7) { sx.pivot(i, j); break; }
            }
        }
        sx.rebuild();
    }

    if (sx.run_phase(m, /*allow_artificial=*/false) == Simplex::StepResult::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    Vector xs = Vector::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (sx.basis[i] < n) xs(sx.basis[i]) = std::max(0.0, sx.t(i, sx.rhs_col()));
    }
    sol.x = Vector::Zero(n_orig);
    for (int j = 0; j < n_orig; ++j) sol.x(j) = shift[j];
    for (int k = 0; k < n; ++k) sol.x(cols[k].var) += cols[k].sign * xs(k);
    sol.value = n_orig > 0 ? problem.objective.dot(sol.x) : 0.0;

    // Duals: reduced cost of artificial column i equals -y_i with respect to
    // the sign-flipped rows.
    sol.dual = Vector::Zero(m);
    for (int i = 0; i < m; ++i) sol.dual(i) = -sx.t(m, n + i) * row_sign[i];
    return sol;
}

}  // namespace tnorm
