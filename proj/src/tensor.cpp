#include "tnorm/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tnorm/config.hpp"
#include "tnorm/lp.hpp"
#include "tnorm/quantum.hpp"
#include "tnorm/rng.hpp"

namespace tnorm {
namespace {

constexpr long kPairBudget = 4'000'000;  // enumerated vertex pairs

bool schatten1_pair(const SpaceDescriptor& x, const SpaceDescriptor& y) {
    return x.kind() == SpaceKind::Schatten1Sa && y.kind() == SpaceKind::Schatten1Sa;
}

QuantumTensor to_quantum(const Tensor& z) {
    return QuantumTensor(z.x_space.dim(), z.y_space.dim(), z.coeffs);
}

// sup over a in ballA, b in ballB of a^T m b, where each ball is described by
// a shape plus (for polytopes) a vertex list.
struct BallDesc {
    BallShape shape;
    std::vector<Vector> vertices;  // only for BallShape::Vertices
};

BallDesc primal_desc(const SpaceDescriptor& s) {
    BallDesc d;
    d.shape = primal_shape(s);
    if (d.shape == BallShape::Vertices) d.vertices = primal_vertices(s);
    return d;
}

BallDesc dual_desc(const SpaceDescriptor& s) {
    BallDesc d;
    d.shape = dual_shape(s);
    if (d.shape == BallShape::Vertices) d.vertices = dual_vertices(s);
    return d;
}

double bilinear_sup(const BallDesc& a, const BallDesc& b, const Matrix& m) {
    if (a.shape == BallShape::Spectral || b.shape == BallShape::Spectral)
        throw unsupported_pair("bilinear supremum over a spectral ball is not enumerable");
    if (a.shape == BallShape::Vertices && b.shape == BallShape::Vertices) {
        const long pairs = static_cast<long>(a.vertices.size()) * b.vertices.size();
        if (pairs > kPairBudget) throw vertex_budget_exceeded("too many vertex pairs");
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& va : a.vertices) {
            const Vector row = m.transpose() * va;
            for (const auto& vb : b.vertices) best = std::max(best, row.dot(vb));
        }
        return best;
    }
    if (a.shape == BallShape::Vertices) {  // b Euclidean
        double best = 0.0;
        for (const auto& va : a.vertices) best = std::max(best, (m.transpose() * va).norm());
        return best;
    }
    if (b.shape == BallShape::Vertices) {  // a Euclidean
        double best = 0.0;
        for (const auto& vb : b.vertices) best = std::max(best, (m * vb).norm());
        return best;
    }
    return svd(m).singular_values(0);
}

}  // namespace

Tensor::Tensor(SpaceDescriptor xs, SpaceDescriptor ys, Matrix c)
    : x_space(std::move(xs)), y_space(std::move(ys)), coeffs(std::move(c)) {
    if (coeffs.rows() != x_space.ambient_dim() || coeffs.cols() != y_space.ambient_dim())
        throw dimension_mismatch("Tensor: coefficient matrix must be ambient(X) x ambient(Y)");
    require_finite(coeffs, "tensor coefficients");
}

Tensor flip(const Tensor& z) { return Tensor(z.y_space, z.x_space, z.coeffs.transpose()); }

double bilinear_sup_primal(const SpaceDescriptor& a_space, const SpaceDescriptor& b_space,
                           const Matrix& m) {
    return bilinear_sup(primal_desc(a_space), primal_desc(b_space), m);
}

double bilinear_sup_dual(const SpaceDescriptor& a_space, const SpaceDescriptor& b_space,
                         const Matrix& m) {
    return bilinear_sup(dual_desc(a_space), dual_desc(b_space), m);
}

NormValue injective_norm(const Tensor& z) {
    const SpaceDescriptor& xs = z.x_space;
    const SpaceDescriptor& ys = z.y_space;

    if (schatten1_pair(xs, ys)) return seesaw_epsilon_s1(to_quantum(z), /*seed=*/0);

    // With one enumerable dual ball, the inner supremum over the other dual
    // ball is exactly the Y-norm (respectively X-norm) of the contraction.
    if (dual_shape(xs) == BallShape::Vertices) {
        double best = 0.0;
        for (const auto& f : dual_vertices(xs))
            best = std::max(best, norm(ys, Vector(z.coeffs.transpose() * f)));
        return best;
    }
    if (dual_shape(ys) == BallShape::Vertices) {
        double best = 0.0;
        for (const auto& g : dual_vertices(ys))
            best = std::max(best, norm(xs, Vector(z.coeffs * g)));
        return best;
    }
    if (dual_shape(xs) == BallShape::Euclidean && dual_shape(ys) == BallShape::Euclidean)
        return svd(z.coeffs).singular_values(0);

    throw unsupported_pair(std::string("injective_norm: ") + kind_name(xs.kind()) + " x " +
                           kind_name(ys.kind()));
}

std::pair<double, Matrix> projective_norm_with_witness(const Tensor& z) {
    const SpaceDescriptor& xs = z.x_space;
    const SpaceDescriptor& ys = z.y_space;
    const int n = xs.ambient_dim();
    const int m = ys.ambient_dim();

    // l1 factor: pi is the sum of the Y-norms of the rows (z = sum_i e_i (x)
    // row_i). The dual functional pairs each row with its norming functional.
    if (xs.kind() == SpaceKind::L1 || ys.kind() == SpaceKind::L1) {
        const bool flipped = xs.kind() != SpaceKind::L1;
        const Tensor& w = z;  // work on a row view either way
        double value = 0.0;
        Matrix witness = Matrix::Zero(n, m);
        const int rows = flipped ? m : n;
        for (int i = 0; i < rows; ++i) {
            const Vector row = flipped ? Vector(w.coeffs.col(i)) : Vector(w.coeffs.row(i));
            const SpaceDescriptor& other = flipped ? xs : ys;
            const double r = norm(other, row);
            value += r;
            if (r > 1e-14) {
                // Norming functional of the row: for enumerable dual balls take
                // the maximising vertex; for L2 the normalised row itself.
                Vector f;
                if (dual_shape(other) == BallShape::Vertices) {
                    double best = -std::numeric_limits<double>::infinity();
                    for (const auto& cand : dual_vertices(other)) {
                        const double v = cand.dot(row);
                        if (v > best) { best = v; f = cand; }
                    }
                } else if (other.kind() == SpaceKind::L2) {
                    f = row / r;
                } else {
                    f = Vector();  // no witness for spectral factors
                }
                if (f.size() > 0) {
                    if (flipped) witness.col(i) = f; else witness.row(i) = f.transpose();
                }
            }
        }
        return {value, witness};
    }

    if (primal_shape(xs) == BallShape::Vertices && primal_shape(ys) == BallShape::Vertices) {
        const std::vector<Vector> vx = primal_vertices(xs);
        const std::vector<Vector> vy = primal_vertices(ys);
        const long pairs = static_cast<long>(vx.size()) * vy.size();
        if (pairs > 20000) throw vertex_budget_exceeded("projective LP: too many vertex pairs");

        // min sum lambda_{ij} with sum lambda_{ij} v_i (x) w_j = z. Extreme
        // points of the projective ball are products of ball vertices, so the
        // LP over vertex pairs is exact.
        LpProblem lp;
        lp.objective = Vector::Ones(pairs);
        lp.eq_lhs = Matrix(n * m, pairs);
        long col = 0;
        for (const auto& vi : vx) {
            for (const auto& wj : vy) {
                Matrix prod = vi * wj.transpose();
                lp.eq_lhs.col(col++) = Eigen::Map<Vector>(prod.data(), n * m);
            }
        }
        lp.eq_rhs = Eigen::Map<const Vector>(z.coeffs.data(), n * m);
        LpSolution sol = lp_solve(lp);
        if (sol.status != LpStatus::Optimal)
            throw invalid_input("projective LP unexpectedly infeasible");
        Matrix witness = Eigen::Map<Vector>(sol.dual.data(), n * m)
                             .reshaped(n, m)
                             .eval();
        return {sol.value, witness};
    }

    if (xs.kind() == SpaceKind::L2 && ys.kind() == SpaceKind::L2) {
        SvdResult s = svd(z.coeffs);
        // Dual witness: sum of u_i v_i^T pairs each of spectral norm 1.
        Matrix witness = s.u * s.v.transpose();
        return {s.singular_values.sum(), witness};
    }

    throw unsupported_pair(std::string("projective_norm: ") + kind_name(xs.kind()) + " x " +
                           kind_name(ys.kind()));
}

NormValue projective_norm(const Tensor& z) {
    if (schatten1_pair(z.x_space, z.y_space)) {
        const QuantumTensor q = to_quantum(z);
        const double lower = pi_lower_bound_trace(q);
        if (max_abs(z.coeffs) == 0.0) {
            Certificate c{"zero-tensor", {}};
            return CertifiedInterval(0.0, 0.0, c, c);
        }
        const PiUpperDecomposition dec = pi_upper_decomposition_uniform(q);
        Certificate lc{"trace-duality", {}};
        Certificate uc{"hermitian-basis-decomposition", {}};
        return CertifiedInterval(lower, dec.value, lc, uc);
    }
    return projective_norm_with_witness(z).first;
}

NormValue ratio_witness(const Tensor& z) {
    if (max_abs(z.coeffs) == 0.0) throw zero_tensor("ratio_witness: z = 0");
    const NormValue eps = injective_norm(z);
    const NormValue pi = projective_norm(z);
    if (is_exact(eps) && is_exact(pi)) return exact_value(pi) / exact_value(eps);

    const double el = lower_of(eps), eu = upper_of(eps);
    const double pl = lower_of(pi), pu = upper_of(pi);
    Certificate lc{"pi_lower/eps_upper", {}};
    Certificate uc{"pi_upper/eps_lower", {}};
    const double lo = eu > 0 ? pl / eu : 0.0;
    const double hi = el > 0 ? pu / el : std::numeric_limits<double>::infinity();
    return CertifiedInterval(lo, hi, lc, uc);
}

double trace_ratio_bound(const Matrix& u, const Matrix& v, const SpaceDescriptor& x_space,
                         const SpaceDescriptor& y_space) {
    const int n = x_space.ambient_dim();
    const int m = y_space.ambient_dim();
    if (u.rows() != m || u.cols() != n)
        throw dimension_mismatch("trace_ratio_bound: u must map X coordinates to Y* coordinates");
    if (v.rows() != n || v.cols() != m)
        throw dimension_mismatch("trace_ratio_bound: v must map Y* coordinates to X coordinates");

    // ||u: X -> Y*|| = sup over the primal balls of (u x) . y.
    const double norm_u = bilinear_sup(primal_desc(x_space), primal_desc(y_space), u.transpose());
    if (norm_u > 1.0 + 1e-9)
        throw not_contraction("||u: X -> Y*|| = " + std::to_string(norm_u));
    // ||v: Y* -> X|| = sup over the dual balls of (v w) . f.
    const double norm_v = bilinear_sup(dual_desc(y_space), dual_desc(x_space), v.transpose());
    if (norm_v > 1.0 + 1e-9)
        throw not_contraction("||v: Y* -> X|| = " + std::to_string(norm_v));

    return (v * u).trace();
}

bool exact_pair(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space) {
    const bool eps_ok = dual_shape(x_space) == BallShape::Vertices ||
                        dual_shape(y_space) == BallShape::Vertices ||
                        (dual_shape(x_space) == BallShape::Euclidean &&
                         dual_shape(y_space) == BallShape::Euclidean);
    const bool pi_ok = x_space.kind() == SpaceKind::L1 || y_space.kind() == SpaceKind::L1 ||
                       (primal_shape(x_space) == BallShape::Vertices &&
                        primal_shape(y_space) == BallShape::Vertices) ||
                       (x_space.kind() == SpaceKind::L2 && y_space.kind() == SpaceKind::L2);
    return eps_ok && pi_ok;
}

RhoSearchResult rho_search(const SpaceDescriptor& x_space, const SpaceDescriptor& y_space,
                           uint64_t seed, int iterations) {
    if (!exact_pair(x_space, y_space))
        throw unsupported_pair("rho_search requires a pair with exact norms");
    if (iterations < 1) throw invalid_input("rho_search: iterations >= 1");
    const int n = x_space.ambient_dim();
    const int m = y_space.ambient_dim();

    CounterRng rng(seed, /*stream=*/77);
    auto ratio_of = [&](const Matrix& c) -> double {
        if (max_abs(c) < 1e-12) return 0.0;
        Tensor t(x_space, y_space, c);
        const double e = exact_value(injective_norm(t));
        if (e < 1e-12) return 0.0;
        return exact_value(projective_norm(t)) / e;
    };
    auto start_matrix = [&](int index) -> Matrix {
        if (index == 0) {  // identity pattern
            Matrix c = Matrix::Zero(n, m);
            for (int i = 0; i < std::min(n, m); ++i) c(i, i) = 1.0;
            return c;
        }
        if (index == 1 && n >= 2 && m >= 2) {  // CHSH-like corner pattern
            Matrix c = Matrix::Zero(n, m);
            c(0, 0) = 5.0; c(0, 1) = 5.0; c(1, 0) = 5.0; c(1, 1) = -4.0;
            return c;
        }
        Matrix c(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) c(i, j) = rng.next_gaussian();
        if (index % 2 == 1) c = c.unaryExpr([](double v) { return v >= 0.0 ? 1.0 : -1.0; });
        return c;
    };

    int start_index = 0;
    Matrix current = start_matrix(start_index);
    double current_ratio = ratio_of(current);
    double step = 0.5;

    double best = current_ratio;
    Matrix best_mat = current;

    for (int it = 0; it < iterations; ++it) {
        // Fixed per-iteration randomness so longer runs extend the same
        // deterministic trajectory.
        Matrix g(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) g(i, j) = rng.next_gaussian();
        Matrix proposal = current + step * g;
        const double r = ratio_of(proposal);
        if (r > current_ratio) {
            current = proposal;
            current_ratio = r;
        } else {
            step *= 0.7;
        }
        if (current_ratio > best) {
            best = current_ratio;
            best_mat = current;
        }
        if (step < 1e-4) {
            ++start_index;
            current = start_matrix(start_index);
            current_ratio = ratio_of(current);
            step = 0.5;
            if (current_ratio > best) {
                best = current_ratio;
                best_mat = current;
            }
        }
    }

    RhoSearchResult out{best, Tensor(x_space, y_space, best_mat)};
    return out;
}

}  // namespace tnorm
