#pragma once

#include <vector>

#include "tnorm/cone.hpp"
#include "tnorm/spaces.hpp"
#include "tnorm/tensor.hpp"

namespace tnorm {

/// General probabilistic theory (V, C, u): a salient generating polyhedral
/// cone of unnormalised states and a unit effect strictly positive on it.
/// Generators are rescaled to u(g) = 1 on construction, so they are exactly
/// the extreme candidates of the state space.
class Gpt {
public:
    Gpt(int dim, std::vector<Vector> cone_generators, Vector unit);

    int dim() const { return dim_; }
    const PolyhedralConeRep& cone() const { return cone_; }
    const std::vector<Vector>& generators() const { return cone_.generators; }
    const Vector& unit() const { return unit_; }

private:
    int dim_;
    PolyhedralConeRep cone_;
    Vector unit_;
};

/// Classical probability theory on d outcomes: the nonnegative orthant with
/// the all-ones unit effect. Its base norm is the l1 norm.
Gpt classical(int d);

/// Order-unit norm of a functional: the least t with f in t[-u, u], which for
/// unit-normalised generators is max_g |f(g)|.
double order_unit_norm(const Gpt& g, const Vector& f);

/// Base norm via the primal LP over generator coefficients
/// (min u(x+ + x-) over x = x+ - x-, both in the cone), with the LP dual
/// checked against the order-interval formulation (strong duality, 1e-8).
double base_norm(const Gpt& g, const Vector& x);

/// Extreme points of the order interval [-u, u] in V* (the dual unit ball of
/// the base norm), enumerated by double description.
std::vector<Vector> order_interval_vertices(const Gpt& g);

/// The base-norm Banach space of the GPT as a polytope descriptor: unit ball
/// conv(Omega u -Omega) with Omega the unit-normalised generators.
SpaceDescriptor base_norm_space(const Gpt& g);

/// GPT on X + R whose cone is {(x, a) : a >= ||x||_X}, built from the ball
/// vertices of x_space ((v, 1) generators). Its base norm is
/// max{||x||_X, |a|}. Requires an enumerable-vertex kind.
Gpt centrally_symmetric(const SpaceDescriptor& x_space);

struct TwoIsomorphicResult {
    Gpt gpt;
    Vector x;       // unit vector chosen in X
    Vector x_star;  // norming functional, x*(x) = 1
};

/// Base-norm space 2-isomorphic to X: cone R+ . F with F the slice of the
/// unit ball at x* = 1/2 and unit effect 2x*. The containment
/// B subset of B_X subset of 2B is verified vertex by vertex. Polytopal
/// kinds (or l1/linf) of dimension <= 6.
TwoIsomorphicResult two_isomorphic_base_norm(const SpaceDescriptor& x_space);

enum class ComposeRule { Min, Max };

/// Admissible bipartite composite. The min rule stores the state-cone
/// generators (pairwise products); the max rule stores only the generators of
/// the dual cone (products of factor dual generators) and never enumerates
/// its primal rays.
struct Composite {
    Gpt factor_a;
    Gpt factor_b;
    ComposeRule rule;
    std::vector<Vector> cone_generators;  // min rule
    std::vector<Vector> dual_generators;  // max rule
    Vector unit;                          // u_A (x) u_B, flattened row-major
};

Composite compose(const Gpt& a, const Gpt& b, ComposeRule rule);

/// Membership of a flattened bipartite vector in the composite cone: an LP
/// certificate for the min rule, positivity against every product dual
/// generator for the max rule.
bool composite_member(const Composite& c, const Vector& omega);

/// Flattened Kronecker product, index i * dim(b) + j.
Vector kron_vec(const Vector& a, const Vector& b);

/// XOR game over a composite: question states (unit effect value 1, members
/// of the composite cone), a probability distribution and parity bits.
struct XorGame {
    Composite model;
    std::vector<Vector> questions;
    Vector probs;
    std::vector<int> bits;

    XorGame(Composite model_, std::vector<Vector> questions_, Vector probs_,
            std::vector<int> bits_);
};

/// z_G = sum_i p_i (-1)^{c_i} omega_i, reshaped over the factor base-norm
/// spaces.
Tensor game_vector(const XorGame& g);

/// Bias under product strategies: the injective norm of z_G evaluated by
/// enumerating the order intervals [-u, u] of both factors.
double bias_local(const XorGame& g);

/// Bias under global strategies: the base norm of z_G in the composite. Min
/// rule solves the primal LP over product generators (and cross-checks the
/// projective norm of z_G); max rule solves the dual LP over the order
/// interval cut out by the product dual generators.
double bias_global(const XorGame& g);

}  // namespace tnorm
