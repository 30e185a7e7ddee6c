#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "tnorm/quantum.hpp"
#include "tnorm/rng.hpp"

using namespace tnorm;

namespace {

QuantumTensor product_tensor(const HermitianMatrix& x, const HermitianMatrix& y) {
    Vector xc = x.to_coords();
    Vector yc = y.to_coords();
    return QuantumTensor(x.k(), y.k(), Matrix(xc * yc.transpose()));
}

}  // namespace

TEST_CASE("hermitian_basis: k=1 and k=2") {
    auto b1 = hermitian_basis(1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].sym()(0, 0) == doctest::Approx(1.0));

    auto b2 = hermitian_basis(2);
    REQUIRE(b2.size() == 4);
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b)
            CHECK(HermitianMatrix::hs_inner(b2[a], b2[b]) ==
                  doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
}

TEST_CASE("gue_sample: deterministic, centered, correct second moment") {
    HermitianMatrix a = gue_sample(3, 42);
    HermitianMatrix b = gue_sample(3, 42);
    CHECK(max_abs(a.sym() - b.sym()) == 0.0);
    CHECK(max_abs(a.antisym() - b.antisym()) == 0.0);

    const int samples = 10000;
    double mean_tr = 0.0, mean_tr2 = 0.0;
    for (int s = 0; s < samples; ++s) {
        HermitianMatrix h = gue_sample(2, 1000 + s);
        mean_tr += h.trace();
        mean_tr2 += h.frobenius() * h.frobenius();
    }
    mean_tr /= samples;
    mean_tr2 /= samples;
    // E tr = 0 within 3 sigma (var(tr) = k = 2).
    CHECK(std::abs(mean_tr) <= 3.0 * std::sqrt(2.0 / samples));
    // E tr(H^2) = k^2 = 4 within 5%.
    CHECK(std::abs(mean_tr2 - 4.0) <= 0.2);
}

TEST_CASE("seesaw: cross norm on products") {
    // x, y trace-norm one: the interval pins 1 on both sides.
    Matrix s = Matrix::Zero(2, 2);
    s(0, 0) = 0.5;
    s(1, 1) = -0.5;
    HermitianMatrix x(s, Matrix::Zero(2, 2));
    CHECK(x.trace_norm() == doctest::Approx(1.0));
    QuantumTensor z = product_tensor(x, x);
    CertifiedInterval eps = seesaw_epsilon_s1(z, 7);
    CHECK(eps.lower == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(eps.upper == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("seesaw: swap tensor value 2, witness re-verifies") {
    // Identity coefficients over the orthonormal product basis embed as the
    // swap operator; by hand, x = y = I achieves Tr[(I (x) I) swap] = 2.
    QuantumTensor z(2, 2, Matrix(Matrix::Identity(4, 4)));
    CertifiedInterval eps = seesaw_epsilon_s1(z, 3);
    CHECK(eps.lower >= 2.0 - 1e-8);
    CHECK(eps.upper == doctest::Approx(2.0).epsilon(1e-9));

    // Re-verify the lower certificate: witness coordinates reproduce the
    // bound through the bilinear pairing.
    REQUIRE(eps.lower_cert.witness.size() == 2);
    const Vector& xc = eps.lower_cert.witness[0];
    const Vector& yc = eps.lower_cert.witness[1];
    CHECK(HermitianMatrix::from_coords(2, xc).operator_norm() <= 1.0 + 1e-9);
    CHECK(HermitianMatrix::from_coords(2, yc).operator_norm() <= 1.0 + 1e-9);
    CHECK(xc.dot(z.coeffs * yc) == doctest::Approx(eps.lower).epsilon(1e-9));
}

TEST_CASE("seesaw: zero tensor") {
    QuantumTensor z(2, 3, Matrix(Matrix::Zero(4, 9)));
    CertifiedInterval eps = seesaw_epsilon_s1(z, 5);
    CHECK(eps.lower == 0.0);
    CHECK(eps.upper == 0.0);
    CHECK(pi_lower_bound_trace(z) == 0.0);
}

TEST_CASE("seesaw: alternating objective is nondecreasing") {
    CounterRng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        QuantumTensor z = gue_tensor(2, 3, 100 + trial);
        Vector yc(9);
        for (int i = 0; i < 9; ++i) yc(i) = rng.next_gaussian();
        HermitianMatrix y = HermitianMatrix::from_coords(3, yc).sign();
        double prev = -1.0;
        for (int it = 0; it < 20; ++it) {
            HermitianMatrix x = zhat_apply_right(z, y).sign();
            HermitianMatrix wy = zhat_apply(z, x);
            y = wy.sign();
            const double value = wy.trace_norm();
            CHECK(value >= prev - 1e-9);
            prev = value;
        }
    }
}

TEST_CASE("pi_lower_bound_trace: identity embedding at n=m=2 gives 4") {
    // The Hermitian tensor whose embedding is the 4x4 identity: coefficients
    // of I_4 = sum_j E_jj (x) E_jj-type diagonal products. Identity on the
    // product space factors as I_2 (x) I_2, a single product term.
    HermitianMatrix id2(Matrix::Identity(2, 2), Matrix::Zero(2, 2));
    QuantumTensor z = product_tensor(id2, id2);
    CHECK(max_abs(product_space_embedding(z).sym() - Matrix::Identity(4, 4)) <= 1e-12);
    CHECK(z.coeffs.squaredNorm() == doctest::Approx(4.0));
    CHECK(epsilon_inf_upper(z) == doctest::Approx(1.0));
    CHECK(pi_lower_bound_trace(z) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("pi_lower_bound_trace: single HS-normalised product term stays below 1") {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 0) = 1.0;  // rank-one projector, HS norm 1
    HermitianMatrix x(s, Matrix::Zero(2, 2));
    QuantumTensor z = product_tensor(x, x);
    CHECK(z.coeffs.squaredNorm() == doctest::Approx(1.0));
    CHECK(pi_lower_bound_trace(z) <= 1.0 + 1e-9);
}

TEST_CASE("pi_upper_decomposition: single-row tensor gives the row trace norm") {
    // z = E_11 (x) y. Expected bound: ||y||_1 (only the j=0 diagonal term
    // survives).
    Matrix sy(2, 2);
    sy << 1.5, 0.25, 0.25, -0.5;
    HermitianMatrix y(sy, Matrix::Zero(2, 2));
    Matrix sx = Matrix::Zero(2, 2);
    sx(0, 0) = 1.0;
    HermitianMatrix e11(sx, Matrix::Zero(2, 2));
    QuantumTensor z = product_tensor(e11, y);
    PiUpperDecomposition dec = pi_upper_decomposition_uniform(z);
    CHECK(dec.value == doctest::Approx(y.trace_norm()).epsilon(1e-9));
}

TEST_CASE("pi_upper_decomposition: reconstruction and ordering on random tensors") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 2;
        const int m = 2 + (trial / 2) % 2;
        QuantumTensor z = gue_tensor(n, m, 500 + trial);
        PiUpperDecomposition dec = pi_upper_decomposition_uniform(z);
        CHECK(dec.reconstruction_error <= 1e-9 * std::max(1.0, z.coeffs.norm()));
        // Upper bound dominates the trace-duality lower bound.
        CHECK(dec.value >= pi_lower_bound_trace(z) - 1e-9);
        // And the eps interval is consistent: eps_upper <= pi_upper.
        CertifiedInterval eps = seesaw_epsilon_s1(z, 11, 8);
        CHECK(eps.lower <= eps.upper + 1e-9);
        CHECK(eps.upper <= dec.value + 1e-9);
    }
}

TEST_CASE("pi_upper_decomposition: bad probability vectors are rejected") {
    QuantumTensor z = gue_tensor(2, 2, 9);
    Vector bad(2);
    bad << 0.7, 0.7;
    CHECK_THROWS_AS(pi_upper_decomposition(z, bad), Error);
    bad << -0.1, 1.1;
    CHECK_THROWS_AS(pi_upper_decomposition(z, bad), Error);
    Vector short_vec(1);
    short_vec << 1.0;
    CHECK_THROWS_AS(pi_upper_decomposition(z, short_vec), Error);
}

TEST_CASE("pi_upper_decomposition: basis choice keeps the bound valid") {
    QuantumTensor z = gue_tensor(3, 2, 77);
    // Random rotation as the basis.
    CounterRng rng(78);
    Matrix g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = rng.next_gaussian();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Vector lambda(3);
    lambda << 0.5, 0.3, 0.2;
    PiUpperDecomposition dec = pi_upper_decomposition(z, lambda, q);
    CHECK(dec.reconstruction_error <= 1e-9 * std::max(1.0, z.coeffs.norm()));
    CHECK(dec.value >= pi_lower_bound_trace(z) - 1e-9);
}

TEST_CASE("quantum ratio: median growth precheck at small n") {
    // Pilot version of the scaling experiment: medians of pi_lower/eps_upper
    // over a few seeds grow with n.
    auto median_ratio = [](int n, int seeds) {
        std::vector<double> r;
        for (int s = 0; s < seeds; ++s) {
            QuantumTensor z = gue_tensor(n, n, 2000 + s);
            CertifiedInterval eps = seesaw_epsilon_s1(z, 3000 + s, 4);
            r.push_back(pi_lower_bound_trace(z) / eps.upper);
        }
        std::sort(r.begin(), r.end());
        return r[r.size() / 2];
    };
    const double m2 = median_ratio(2, 15);
    const double m3 = median_ratio(3, 15);
    CHECK(m3 > m2);
}

TEST_CASE("dimension caps") {
    CHECK_THROWS_AS(seesaw_epsilon_s1(gue_tensor(9, 2, 1), 0), Error);
    CHECK_THROWS_AS(pi_lower_bound_trace(gue_tensor(2, 9, 1)), Error);
}
