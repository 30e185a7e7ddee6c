#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tnorm/certified.hpp"
#include "tnorm/spaces.hpp"

namespace tnorm {

/// Element of Herm(n) (x) Herm(m), stored as the real n^2 x m^2 coefficient
/// matrix in the product of the fixed orthonormal Hermitian bases
/// (hermitian_basis(n) on the left, hermitian_basis(m) on the right):
/// z = sum_{a,b} coeffs(a,b) x_a (x) y_b.
struct QuantumTensor {
    int n = 0;
    int m = 0;
    Matrix coeffs;

    QuantumTensor(int n_, int m_, Matrix c);
};

/// zhat(x): the linear map Herm(n) -> Herm(m) associated with z, evaluated on
/// a Hermitian argument via contraction of the coefficient matrix.
HermitianMatrix zhat_apply(const QuantumTensor& z, const HermitianMatrix& x);
/// Contraction on the right factor: Herm(m) -> Herm(n).
HermitianMatrix zhat_apply_right(const QuantumTensor& z, const HermitianMatrix& y);

/// z viewed as a Hermitian operator on the nm-dimensional product space.
HermitianMatrix product_space_embedding(const QuantumTensor& z);

/// GUE-distributed Hermitian matrix: independent standard Gaussian
/// coordinates in hermitian_basis(k) (so E Tr[H^2] = k^2). Deterministic for
/// a fixed seed; samples with distinct seeds are independent streams.
HermitianMatrix gue_sample(int k, uint64_t seed);

/// Random tensor with iid standard Gaussian coefficients, the two-factor
/// analogue of gue_sample.
QuantumTensor gue_tensor(int n, int m, uint64_t seed);

/// Certified two-sided bounds on the injective norm of z in
/// S1^{n,sa} (x) S1^{m,sa}. Lower: alternating maximisation over the two
/// operator-norm unit balls (fixing one factor, the optimum over the other is
/// the matrix sign of the partial contraction, with value its trace norm),
/// restarted `restarts` times from seeded random points. Upper: the smaller
/// of the trace norm of the product-space embedding (product functionals are
/// a subset of the full S-infinity ball on nm dimensions) and the
/// Hilbert-Schmidt factorisation bound sqrt(nm) * ||coeffs||_{2->2}; the
/// certificate tag records which one fired. Requires n, m <= 8.
CertifiedInterval seesaw_epsilon_s1(const QuantumTensor& z, uint64_t seed, int restarts = 16);

/// Certified upper bound on the injective norm of z in
/// S-infinity (x)_eps S-infinity: the operator norm of the product-space
/// embedding. Requires n, m <= 8.
double epsilon_inf_upper(const QuantumTensor& z);

/// Deterministic lower bound on the projective norm of z in
/// S1 (x)_pi S1: Tr[z^2] / epsilon_inf_upper(z), via the duality pairing of
/// z with itself. Requires n, m <= 8.
double pi_lower_bound_trace(const QuantumTensor& z);

struct PiUpperDecomposition {
    double value = 0.0;  // valid upper bound on the projective norm
    // Terms (left, right, weight) with z = sum weight * left (x) right.
    struct Term {
        HermitianMatrix left;
        HermitianMatrix right;
        double weight;
    };
    std::vector<Term> terms;
    double reconstruction_error = 0.0;  // Frobenius distance, coefficient side
    Vector lambda;                      // the probability weights supplied
};

/// Projective upper bound from the Hermitian rank-one decomposition over an
/// orthonormal basis of R^n (columns of `basis`, default the computational
/// basis): value = sum_j ||zhat(E_jj)||_1 + sum_{j<k} (||zhat(F_jk)||_1 +
/// ||zhat(H_jk)||_1). `lambda` must be a probability vector over the basis;
/// it selects the state this decomposition is built around and is recorded in
/// the output (the bound value depends only on the basis).
PiUpperDecomposition pi_upper_decomposition(const QuantumTensor& z, const Vector& lambda,
                                            const std::optional<Matrix>& basis = std::nullopt);

PiUpperDecomposition pi_upper_decomposition_uniform(const QuantumTensor& z);

}  // namespace tnorm
