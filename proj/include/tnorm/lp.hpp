#pragma once

#include <optional>
#include <vector>

#include "tnorm/linalg.hpp"

namespace tnorm {

/// Linear program in equality form:
///
///   minimize   objective . x
///   subject to eq_lhs * x = eq_rhs
///              x_j >= lower_bounds[j]   (nullopt marks a free variable)
///
/// An empty lower_bounds vector means every variable is bounded below by 0.
struct LpProblem {
    Vector objective;
    Matrix eq_lhs;
    Vector eq_rhs;
    std::vector<std::optional<double>> lower_bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    Vector x;     // optimal point (original variables), valid when Optimal
    Vector dual;  // equality-constraint multipliers y with c - A^T y >= 0
};

/// Dense two-phase simplex with Bland's anti-cycling rule. Deterministic:
/// identical input bytes give identical pivots and identical output.
LpSolution lp_solve(const LpProblem& problem);

}  // namespace tnorm
