#pragma once

#include "tnorm/spaces.hpp"
#include "tnorm/tensor.hpp"

namespace tnorm {

/// Normalised biorthogonal pair with the additional bound
/// ||e1 + e2|| <= 3/2: unit vectors e1, e2, unit functionals e1*, e2* with
/// e_j*(e_i) = delta_ij.
struct AuerbachPair {
    Vector e1, e2;
    Vector e1s, e2s;
    SpaceDescriptor space;
};

/// Constructs an AuerbachPair for a two-dimensional space with enumerable
/// dual ball: maximise |det(f, g)| over dual-vertex pairs, change basis by
/// the inverse of [f; g], and negate e2 if that leaves ||e1 + e2|| above 3/2.
/// All AuerbachPair invariants are verified before returning.
AuerbachPair hexagon_auerbach(const SpaceDescriptor& space);

struct Chsh19Witness {
    Tensor z;                 // 5 e1(x)e1 + 5 e1(x)e2 + 5 e2(x)e1 - 4 e2(x)e2
    Matrix dual_functional;   // e1*(x)e1* + e1*(x)e2* + e2*(x)e1* - e2*(x)e2*
    double pairing;           // w*(z), equal to 19 by biorthogonality
    double eps_z;             // exact injective norm of z
    double eps_w;             // exact injective norm of w* on the dual pair
    double ratio_lower_bound; // pairing / (eps_w * eps_z) >= 19/18
};

/// The universal-gap witness built from Auerbach pairs of the two factors.
Chsh19Witness chsh19_witness(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space);

struct ConvexityWitness {
    Vector y1, y2;
    double ratio;  // (||y1+y2|| + ||y1-y2||) / (2 max(||y1||, ||y2||))
};

/// Searches unit vectors (ball vertices and normalised pair midpoints) for a
/// pair with ||y1+y2|| + ||y1-y2|| >= 2 sqrt(2) max norms, witnessing the
/// uniform-convexity lower bound; the returned ratio is at least
/// sqrt(2) - 1e-6.
ConvexityWitness linf2_convexity_witness(const SpaceDescriptor& y_space);

/// pi_1(Id) on the n-dimensional l1 space: n / E|sum of n random signs|,
/// evaluated with exact integer binomial sums (n <= 30).
double projection_constant_l1(int n);

/// The identity matrix as a tensor over the requested pair of spaces with
/// equal ambient dimension n.
Tensor identity_witness(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space);

}  // namespace tnorm
