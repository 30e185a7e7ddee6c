#include "tnorm/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "tnorm/config.hpp"

namespace tnorm {
namespace {

double det2(const Vector& f, const Vector& g) { return f(0) * g(1) - f(1) * g(0); }

// Polytope norms in hot loops: the polar-vertex maximum avoids the gauge LP.
double fast_norm(const SpaceDescriptor& s, const Vector& x) {
    if (s.kind() == SpaceKind::Polytope && s.cached_polar().has_value()) {
        double best = 0.0;
        for (const auto& w : *s.cached_polar()) best = std::max(best, std::abs(w.dot(x)));
        return best;
    }
    return norm(s, x);
}

void verify_auerbach(const AuerbachPair& p) {
    const SpaceDescriptor& s = p.space;
    auto close_to = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
    if (!close_to(norm(s, p.e1), 1.0) || !close_to(norm(s, p.e2), 1.0) ||
        !close_to(dual_norm(s, p.e1s), 1.0) || !close_to(dual_norm(s, p.e2s), 1.0) ||
        !close_to(p.e1s.dot(p.e1), 1.0) || !close_to(p.e2s.dot(p.e2), 1.0) ||
        std::abs(p.e1s.dot(p.e2)) > 1e-9 || std::abs(p.e2s.dot(p.e1)) > 1e-9 ||
        norm(s, Vector(p.e1 + p.e2)) > 1.5 + 1e-9)
        throw std::runtime_error("hexagon_auerbach: postcondition check failed");
}

}  // namespace

AuerbachPair hexagon_auerbach(const SpaceDescriptor& space) {
    if (space.ambient_dim() != 2)
        throw not_two_dimensional("hexagon_auerbach: space must be two-dimensional");
    if (dual_shape(space) != BallShape::Vertices)
        throw unsupported_kind("hexagon_auerbach: dual ball must have enumerable vertices");

    const std::vector<Vector> duals = dual_vertices(space);
    double best = 0.0;
    int bi = -1, bj = -1;
    for (size_t i = 0; i < duals.size(); ++i) {
        for (size_t j = i + 1; j < duals.size(); ++j) {
            const double d = std::abs(det2(duals[i], duals[j]));
            if (d > best + 1e-12) {
                best = d;
                bi = static_cast<int>(i);
                bj = static_cast<int>(j);
            }
        }
    }
    if (bi < 0 || best < 1e-12)
        throw not_full_dimensional("hexagon_auerbach: degenerate dual ball");

    // Basis change by the inverse of [f; g]: the chosen dual pair becomes the
    // canonical dual basis and e_i are the matching primal vectors.
    Matrix m(2, 2);
    m.row(0) = duals[bi].transpose();
    m.row(1) = duals[bj].transpose();
    Matrix inv = m.inverse();

    AuerbachPair pair{inv.col(0), inv.col(1), duals[bi], duals[bj], space};
    if (norm(space, Vector(pair.e1 + pair.e2)) > 1.5 + 1e-12) {
        pair.e2 = -pair.e2;
        pair.e2s = -pair.e2s;
    }
    verify_auerbach(pair);
    return pair;
}

Chsh19Witness chsh19_witness(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space) {
    const AuerbachPair a = hexagon_auerbach(x_space);
    const AuerbachPair b = hexagon_auerbach(y_space);

    Matrix zc = 5.0 * a.e1 * b.e1.transpose() + 5.0 * a.e1 * b.e2.transpose() +
                5.0 * a.e2 * b.e1.transpose() - 4.0 * a.e2 * b.e2.transpose();
    Matrix wc = a.e1s * b.e1s.transpose() + a.e1s * b.e2s.transpose() +
                a.e2s * b.e1s.transpose() - a.e2s * b.e2s.transpose();

    Chsh19Witness out{Tensor(x_space, y_space, zc), wc, 0.0, 0.0, 0.0, 0.0};
    out.pairing = wc.cwiseProduct(zc).sum();
    out.eps_z = exact_value(injective_norm(out.z));
    out.eps_w = exact_value(injective_norm(Tensor(dual_space(x_space), dual_space(y_space), wc)));
    out.ratio_lower_bound = out.pairing / (out.eps_w * out.eps_z);
    if (out.ratio_lower_bound < 19.0 / 18.0 - 1e-9)
        throw std::runtime_error("chsh19_witness: ratio bound fell below 19/18");
    return out;
}

ConvexityWitness linf2_convexity_witness(const SpaceDescriptor& y_space) {
    if (y_space.ambient_dim() < 2)
        throw unsupported_kind("linf2_convexity_witness: dimension >= 2 required");
    std::vector<Vector> cands = ball_vertex_list(y_space);  // UnsupportedKind otherwise
    const size_t vertex_count = cands.size();
    // Normalised pair midpoints refine the vertex search.
    for (size_t i = 0; i < vertex_count; ++i) {
        for (size_t j = i + 1; j < vertex_count; ++j) {
            Vector mid = cands[i] + cands[j];
            const double nm = fast_norm(y_space, mid);
            if (nm > 1e-9) cands.push_back(mid / nm);
        }
    }

    ConvexityWitness bestw{Vector(), Vector(), 0.0};
    for (size_t i = 0; i < cands.size(); ++i) {
        for (size_t j = i; j < cands.size(); ++j) {
            const double value = fast_norm(y_space, Vector(cands[i] + cands[j])) +
                                 fast_norm(y_space, Vector(cands[i] - cands[j]));
            if (value > 2.0 * bestw.ratio) {
                bestw = {cands[i], cands[j], value / 2.0};
            }
        }
    }
    if (bestw.ratio < std::sqrt(2.0) - 1e-6)
        throw std::runtime_error("linf2_convexity_witness: search fell below sqrt(2)");
    return bestw;
}

double projection_constant_l1(int n) {
    if (n < 1) throw invalid_input("projection_constant_l1: n >= 1 required");
    if (n > 30) throw budget_exceeded("projection_constant_l1: exact evaluation capped at n = 30");
    // E|sum of signs| = 2^{-n} sum_k binom(n, k) |n - 2k|, exact in integers.
    unsigned long long binom = 1;  // binom(n, 0)
    unsigned long long s = 0;
    for (int k = 0; k <= n; ++k) {
        s += binom * static_cast<unsigned long long>(std::abs(n - 2 * k));
        if (k < n) binom = binom * static_cast<unsigned long long>(n - k) /
                           static_cast<unsigned long long>(k + 1);
    }
    const double two_n = std::ldexp(1.0, n);
    return n * two_n / static_cast<double>(s);
}

Tensor identity_witness(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space) {
    if (x_space.ambient_dim() != y_space.ambient_dim())
        throw dimension_mismatch("identity_witness: ambient dimensions must match");
    const int n = x_space.ambient_dim();
    return Tensor(x_space, y_space, Matrix(Matrix::Identity(n, n)));
}

}  // namespace tnorm
