#pragma once

#include <cstdint>
#include <utility>

#include "tnorm/certified.hpp"
#include "tnorm/spaces.hpp"

namespace tnorm {

/// Element of X (x) Y, stored as the real coefficient matrix of the pairing:
/// evaluating x* (x) y* on the tensor gives x*^T coeffs y*. Rows run over the
/// ambient coordinates of X, columns over those of Y.
struct Tensor {
    SpaceDescriptor x_space;
    SpaceDescriptor y_space;
    Matrix coeffs;

    Tensor(SpaceDescriptor xs, SpaceDescriptor ys, Matrix c);
};

/// Swap the two factors (transpose of the coefficient matrix).
Tensor flip(const Tensor& z);

/// Injective norm: maximum of (x* (x) y*)(z) over the two dual unit balls.
/// Exact whenever at least one dual ball is a polytope with enumerable
/// vertices or both factors are Euclidean; trace-class pairs come back as a
/// certified interval (see-saw lower bound, relaxation upper bound).
NormValue injective_norm(const Tensor& z);

/// Projective norm: minimum of sum ||x_i|| ||y_i|| over decompositions.
/// Exact routes: l1 factor (row closed form), both factors with enumerable
/// ball vertices (LP over vertex pairs), Euclidean pair (nuclear norm).
/// Trace-class pairs come back as a certified interval.
NormValue projective_norm(const Tensor& z);

/// projective / injective; a lower bound on rho(X, Y). Interval inputs give
/// [pi_lower/eps_upper, pi_upper/eps_lower]. Throws ZeroTensor on z = 0.
NormValue ratio_witness(const Tensor& z);

/// Exact projective norm together with the optimal dual functional w
/// (eps norm at most 1 on X* (x) Y*, pairing w(z) equal to the norm).
/// Only for pairs where the LP or closed-form route applies.
std::pair<double, Matrix> projective_norm_with_witness(const Tensor& z);

/// tr(v u) for contractions u: X -> Y* and v: Y* -> X; a certified lower
/// bound on rho(X, Y). Operator norms are evaluated by vertex enumeration or
/// the spectral norm, depending on the ball shapes; NotContraction reports
/// the offending norm if either exceeds one.
double trace_ratio_bound(const Matrix& u, const Matrix& v, const SpaceDescriptor& x_space,
                         const SpaceDescriptor& y_space);

struct RhoSearchResult {
    double best_ratio = 0.0;
    Tensor witness;
};

/// Heuristic lower-bound search for rho(X, Y): seeded multi-start hill
/// climbing on the exact pi/eps ratio. Deterministic for a fixed seed, and
/// the best value is nondecreasing in `iterations`. Never an upper bound.
RhoSearchResult rho_search(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space,
                           uint64_t seed, int iterations);

/// sup a^T M b over the two unit balls; exact for vertex/Euclidean shapes.
double bilinear_sup_primal(const SpaceDescriptor& a_space, const SpaceDescriptor& b_space,
                           const Matrix& m);
double bilinear_sup_dual(const SpaceDescriptor& a_space, const SpaceDescriptor& b_space,
                         const Matrix& m);

/// True when both the injective and the projective norm of tensors over this
/// pair are computed exactly (no certified intervals).
bool exact_pair(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space);

}  // namespace tnorm
