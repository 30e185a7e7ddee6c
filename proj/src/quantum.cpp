#include "tnorm/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "tnorm/config.hpp"
#include "tnorm/rng.hpp"

namespace tnorm {
namespace {

constexpr int kMaxLocalDim = 8;

void check_dims(const QuantumTensor& z, const char* op) {
    if (z.n > kMaxLocalDim || z.m > kMaxLocalDim)
        throw dimension_too_large(std::string(op) + ": local dimensions capped at 8");
}

}  // namespace

QuantumTensor::QuantumTensor(int n_, int m_, Matrix c) : n(n_), m(m_), coeffs(std::move(c)) {
    if (n < 1 || m < 1) throw invalid_input("QuantumTensor: dimensions must be >= 1");
    if (coeffs.rows() != static_cast<Eigen::Index>(n) * n ||
        coeffs.cols() != static_cast<Eigen::Index>(m) * m)
        throw dimension_mismatch("QuantumTensor: coefficient matrix must be n^2 x m^2");
    require_finite(coeffs, "quantum tensor coefficients");
}

HermitianMatrix zhat_apply(const QuantumTensor& z, const HermitianMatrix& x) {
    if (x.k() != z.n) throw dimension_mismatch("zhat_apply: argument size");
    return HermitianMatrix::from_coords(z.m, z.coeffs.transpose() * x.to_coords());
}

HermitianMatrix zhat_apply_right(const QuantumTensor& z, const HermitianMatrix& y) {
    if (y.k() != z.m) throw dimension_mismatch("zhat_apply_right: argument size");
    return HermitianMatrix::from_coords(z.n, z.coeffs * y.to_coords());
}

HermitianMatrix product_space_embedding(const QuantumTensor& z) {
    const std::vector<HermitianMatrix> bx = hermitian_basis(z.n);
    const std::vector<HermitianMatrix> by = hermitian_basis(z.m);
    HermitianMatrix out = HermitianMatrix::zero(z.n * z.m);
    for (int a = 0; a < z.n * z.n; ++a) {
        for (int b = 0; b < z.m * z.m; ++b) {
            const double c = z.coeffs(a, b);
            if (c != 0.0) out = out + HermitianMatrix::kron(bx[a], by[b]) * c;
        }
    }
    return out;
}

HermitianMatrix gue_sample(int k, uint64_t seed) {
    if (k < 1) throw invalid_input("gue_sample: k >= 1 required");
    CounterRng rng(seed);
    Vector coords(static_cast<Eigen::Index>(k) * k);
    for (Eigen::Index i = 0; i < coords.size(); ++i) coords(i) = rng.next_gaussian();
    return HermitianMatrix::from_coords(k, coords);
}

QuantumTensor gue_tensor(int n, int m, uint64_t seed) {
    CounterRng rng(seed, /*stream=*/1);
    Matrix c(n * n, m * m);
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j) c(i, j) = rng.next_gaussian();
    return QuantumTensor(n, m, std::move(c));
}

CertifiedInterval seesaw_epsilon_s1(const QuantumTensor& z, uint64_t seed, int restarts) {
    check_dims(z, "seesaw_epsilon_s1");
    if (restarts < 1) throw invalid_input("seesaw_epsilon_s1: restarts >= 1");

    if (max_abs(z.coeffs) == 0.0) {
        Certificate c{"zero-tensor", {}};
        return CertifiedInterval(0.0, 0.0, c, c);
    }

    double best = 0.0;
    Vector best_x = Vector::Zero(z.n * z.n);
    Vector best_y = Vector::Zero(z.m * z.m);
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng(seed, static_cast<uint64_t>(r));
        Vector ycoords(static_cast<Eigen::Index>(z.m) * z.m);
        for (Eigen::Index i = 0; i < ycoords.size(); ++i) ycoords(i) = rng.next_gaussian();
        HermitianMatrix y = HermitianMatrix::from_coords(z.m, ycoords).sign();
        HermitianMatrix x = HermitianMatrix::zero(z.n);

        // Fixing y, the optimal x is the matrix sign of the partial
        // contraction and the objective is its trace norm; alternate sides.
        double value = 0.0;
        int stable = 0;
        for (int it = 0; it < 300; ++it) {
            x = zhat_apply_right(z, y).sign();
            const HermitianMatrix wy = zhat_apply(z, x);
            y = wy.sign();
            const double next = wy.trace_norm();
            if (next <= value * (1.0 + 1e-10)) {
                value = std::max(value, next);
                if (++stable >= 3) break;
            } else {
                value = next;
                stable = 0;
            }
        }
        if (value > best) {
            best = value;
            best_x = x.to_coords();
            best_y = y.to_coords();
        }
    }

    const double trace_bound = product_space_embedding(z).trace_norm();
    const double hs_bound =
        std::sqrt(static_cast<double>(z.n) * z.m) * svd(z.coeffs).singular_values(0);
    Certificate lower_cert{"seesaw-witness", {best_x, best_y}};
    Certificate upper_cert;
    double upper;
    if (trace_bound <= hs_bound) {
        upper = trace_bound;
        upper_cert.tag = "product-relaxation-trace-norm";
    } else {
        upper = hs_bound;
        upper_cert.tag = "hs-factorization";
    }
    // Rounding can put the see-saw value a hair above the bound; clamp.
    best = std::min(best, upper);
    return CertifiedInterval(best, upper, lower_cert, upper_cert);
}

double epsilon_inf_upper(const QuantumTensor& z) {
    check_dims(z, "epsilon_inf_upper");
    return product_space_embedding(z).operator_norm();
}

double pi_lower_bound_trace(const QuantumTensor& z) {
    check_dims(z, "pi_lower_bound_trace");
    const double hs2 = z.coeffs.squaredNorm();  // Tr[z^2] in orthonormal coordinates
    if (hs2 == 0.0) return 0.0;
    return hs2 / epsilon_inf_upper(z);
}

PiUpperDecomposition pi_upper_decomposition(const QuantumTensor& z, const Vector& lambda,
                                            const std::optional<Matrix>& basis) {
    check_dims(z, "pi_upper_decomposition");
    if (lambda.size() != z.n)
        throw bad_probability_vector("pi_upper_decomposition: lambda must have length n");
    if ((lambda.array() < -1e-12).any() || std::abs(lambda.sum() - 1.0) > 1e-9)
        throw bad_probability_vector("pi_upper_decomposition: lambda is not a probability vector");

    Matrix u = basis.value_or(Matrix::Identity(z.n, z.n));
    if (u.rows() != z.n || u.cols() != z.n)
        throw dimension_mismatch("pi_upper_decomposition: basis must be n x n");
    if (max_abs(u.transpose() * u - Matrix::Identity(z.n, z.n)) > 1e-9)
        throw invalid_input("pi_upper_decomposition: basis columns must be orthonormal");

    PiUpperDecomposition out;
    out.lambda = lambda;
    const Matrix zero = Matrix::Zero(z.n, z.n);

    auto add_term = [&](HermitianMatrix left, double weight) {
        HermitianMatrix right = zhat_apply(z, left);
        out.value += weight * left.trace_norm() * right.trace_norm();
        out.terms.push_back({std::move(left), std::move(right), weight});
    };

    // Diagonal units E_jj, then for j < k the symmetric pair element F_jk
    // (trace norm 2, weight 1/2) and the antisymmetric one H_jk = i(E_jk -
    // E_kj) (same weights).
    for (int j = 0; j < z.n; ++j) {
        Matrix s = u.col(j) * u.col(j).transpose();
        add_term(HermitianMatrix(std::move(s), zero), 1.0);
    }
    for (int j = 0; j < z.n; ++j) {
        for (int k = j + 1; k < z.n; ++k) {
            Matrix s = u.col(j) * u.col(k).transpose() + u.col(k) * u.col(j).transpose();
            add_term(HermitianMatrix(std::move(s), zero), 0.5);
            Matrix a = u.col(j) * u.col(k).transpose() - u.col(k) * u.col(j).transpose();
            add_term(HermitianMatrix(zero, std::move(a)), 0.5);
        }
    }

    // The terms reconstruct z exactly; verify on the coefficient matrix.
    Matrix rec = Matrix::Zero(z.coeffs.rows(), z.coeffs.cols());
    for (const auto& t : out.terms)
        rec += t.weight * t.left.to_coords() * t.right.to_coords().transpose();
    out.reconstruction_error = (rec - z.coeffs).norm();
    const double scale = std::max(1.0, z.coeffs.norm());
    if (out.reconstruction_error > 1e-9 * scale)
        throw invalid_input("pi_upper_decomposition: reconstruction failed");
    return out;
}

PiUpperDecomposition pi_upper_decomposition_uniform(const QuantumTensor& z) {
    return pi_upper_decomposition(z, Vector::Constant(z.n, 1.0 / z.n));
}

}  // namespace tnorm
