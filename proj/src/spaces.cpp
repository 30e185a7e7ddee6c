#include "tnorm/spaces.hpp"

#include <algorithm>
#include <cmath>

#include "tnorm/config.hpp"
#include "tnorm/lp.hpp"

namespace tnorm {

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(Matrix symmetric, Matrix antisymmetric)
    : sym_(std::move(symmetric)), antisym_(std::move(antisymmetric)) {
    if (sym_.rows() != sym_.cols() || antisym_.rows() != antisym_.cols() ||
        sym_.rows() != antisym_.rows())
        throw dimension_mismatch("HermitianMatrix: parts must be square of equal size");
    require_finite(sym_, "hermitian symmetric part");
    require_finite(antisym_, "hermitian antisymmetric part");
    // Symmetrise exactly so invariants hold by construction.
    sym_ = 0.5 * (sym_ + sym_.transpose()).eval();
    antisym_ = 0.5 * (antisym_ - antisym_.transpose()).eval();
}

HermitianMatrix HermitianMatrix::zero(int k) {
    return HermitianMatrix(Matrix::Zero(k, k), Matrix::Zero(k, k));
}

HermitianMatrix HermitianMatrix::from_coords(int k, const Vector& coords) {
    if (coords.size() != static_cast<Eigen::Index>(k) * k)
        throw dimension_mismatch("HermitianMatrix::from_coords: expected k^2 coordinates");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix s = Matrix::Zero(k, k);
    Matrix a = Matrix::Zero(k, k);
    int idx = 0;
    for (int j = 0; j < k; ++j) s(j, j) = coords(idx++);
    for (int j = 0; j < k; ++j) {
        for (int l = j + 1; l < k; ++l) {
            const double cf = coords(idx++);
            const double ch = coords(idx++);
            s(j, l) = s(l, j) = cf * inv_sqrt2;
            a(j, l) = ch * inv_sqrt2;
            a(l, j) = -ch * inv_sqrt2;
        }
    }
    return HermitianMatrix(std::move(s), std::move(a));
}

Vector HermitianMatrix::to_coords() const {
    const int n = k();
    const double sqrt2 = std::sqrt(2.0);
    Vector c(static_cast<Eigen::Index>(n) * n);
    int idx = 0;
    for (int j = 0; j < n; ++j) c(idx++) = sym_(j, j);
    for (int j = 0; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) {
            c(idx++) = sym_(j, l) * sqrt2;
            c(idx++) = antisym_(j, l) * sqrt2;
        }
    }
    return c;
}

Vector HermitianMatrix::eigenvalues() const {
    const int n = k();
    Matrix embed(2 * n, 2 * n);
    embed << sym_, -antisym_, antisym_, sym_;
    const Vector all = sym_eig(embed).eigenvalues;
    Vector out(n);
    for (int i = 0; i < n; ++i) out(i) = all(2 * i);
    return out;
}

double HermitianMatrix::trace_norm() const { return eigenvalues().cwiseAbs().sum(); }

double HermitianMatrix::operator_norm() const {
    const Vector ev = eigenvalues();
    return ev.size() == 0 ? 0.0 : ev.cwiseAbs().maxCoeff();
}

double HermitianMatrix::frobenius() const {
    return std::sqrt(sym_.squaredNorm() + antisym_.squaredNorm());
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
    return HermitianMatrix(sym_ + o.sym_, antisym_ + o.antisym_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
    return HermitianMatrix(sym_ - o.sym_, antisym_ - o.antisym_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
    return HermitianMatrix(sym_ * s, antisym_ * s);
}

namespace {
Matrix kron_real(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}
}  // namespace

HermitianMatrix HermitianMatrix::kron(const HermitianMatrix& a, const HermitianMatrix& b) {
    // (S1 + iA1) (x) (S2 + iA2) = (S1(x)S2 - A1(x)A2) + i (S1(x)A2 + A1(x)S2)
    return HermitianMatrix(kron_real(a.sym_, b.sym_) - kron_real(a.antisym_, b.antisym_),
                           kron_real(a.sym_, b.antisym_) + kron_real(a.antisym_, b.sym_));
}

double HermitianMatrix::hs_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
    return a.sym_.cwiseProduct(b.sym_).sum() + a.antisym_.cwiseProduct(b.antisym_).sum();
}

HermitianMatrix HermitianMatrix::sign() const {
    const int n = k();
    Matrix embed(2 * n, 2 * n);
    embed << sym_, -antisym_, antisym_, sym_;
    const EigResult eig = sym_eig(embed);
    Matrix signed_embed = Matrix::Zero(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        const double s = eig.eigenvalues(i) >= 0.0 ? 1.0 : -1.0;
        signed_embed += s * eig.eigenvectors.col(i) * eig.eigenvectors.col(i).transpose();
    }
    // Read S and A back from the embedding blocks.
    Matrix s = 0.5 * (signed_embed.topLeftCorner(n, n) + signed_embed.bottomRightCorner(n, n));
    Matrix a = 0.5 * (signed_embed.bottomLeftCorner(n, n) - signed_embed.topRightCorner(n, n));
    return HermitianMatrix(std::move(s), std::move(a));
}

std::vector<HermitianMatrix> hermitian_basis(int k) {
    if (k < 1) throw invalid_input("hermitian_basis: k must be >= 1");
    std::vector<HermitianMatrix> basis;
    basis.reserve(static_cast<size_t>(k) * k);
    const int total = k * k;
    for (int idx = 0; idx < total; ++idx) {
        Vector coords = Vector::Zero(total);
        coords(idx) = 1.0;
        basis.push_back(HermitianMatrix::from_coords(k, coords));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// SpaceDescriptor

const char* kind_name(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::L1: return "l1";
        case SpaceKind::L2: return "l2";
        case SpaceKind::Linf: return "linf";
        case SpaceKind::Polytope: return "polytope";
        case SpaceKind::Schatten1Sa: return "schatten1";
        case SpaceKind::SchattenInfSa: return "schatteninf";
    }
    return "?";
}

SpaceDescriptor SpaceDescriptor::l1(int dim) {
    if (dim < 1) throw invalid_input("l1: dim >= 1 required");
    return SpaceDescriptor(SpaceKind::L1, dim);
}

SpaceDescriptor SpaceDescriptor::l2(int dim) {
    if (dim < 1) throw invalid_input("l2: dim >= 1 required");
    return SpaceDescriptor(SpaceKind::L2, dim);
}

SpaceDescriptor SpaceDescriptor::linf(int dim) {
    if (dim < 1) throw invalid_input("linf: dim >= 1 required");
    return SpaceDescriptor(SpaceKind::Linf, dim);
}

SpaceDescriptor SpaceDescriptor::polytope(std::vector<Vector> ball_vertices) {
    if (ball_vertices.empty()) throw not_full_dimensional("polytope: empty vertex set");
    const int dim = static_cast<int>(ball_vertices[0].size());
    SpaceDescriptor s(SpaceKind::Polytope, dim);
    std::vector<Vector> verts = extreme_points(ball_vertices);

    for (const auto& v : verts) {
        if (static_cast<int>(v.size()) != dim)
            throw dimension_mismatch("polytope: inconsistent vertex lengths");
        bool has_neg = false;
        for (const auto& w : verts)
            if ((v + w).cwiseAbs().maxCoeff() <= 1e-9) { has_neg = true; break; }
        if (!has_neg) throw not_symmetric("polytope: vertex set is not centrally symmetric");
    }
    Matrix vm(verts.size(), dim);
    for (size_t i = 0; i < verts.size(); ++i) vm.row(i) = verts[i].transpose();
    Eigen::ColPivHouseholderQR<Matrix> qr(vm);
    qr.setThreshold(1e-10);
    if (qr.rank() < dim) throw not_full_dimensional("polytope: vertices do not span");

    // Canonical lexicographic vertex order makes enumeration-based maxima
    // (and their tie-breaking by index) reproducible across constructions.
    std::sort(verts.begin(), verts.end(), [](const Vector& a, const Vector& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) < b(i) - 1e-12) return true;
            if (a(i) > b(i) + 1e-12) return false;
        }
        return false;
    });
    s.ball_vertices_ = std::move(verts);
    if (dim <= 8) s.ball_facets_ = polytope_dual_ball(s.ball_vertices_);
    return s;
}

SpaceDescriptor SpaceDescriptor::schatten1(int k) {
    if (k < 1) throw invalid_input("schatten1: k >= 1 required");
    return SpaceDescriptor(SpaceKind::Schatten1Sa, k);
}

SpaceDescriptor SpaceDescriptor::schatten_inf(int k) {
    if (k < 1) throw invalid_input("schatteninf: k >= 1 required");
    return SpaceDescriptor(SpaceKind::SchattenInfSa, k);
}

int SpaceDescriptor::ambient_dim() const {
    return is_schatten() ? dim_ * dim_ : dim_;
}

bool SpaceDescriptor::operator==(const SpaceDescriptor& o) const {
    if (kind_ != o.kind_ || dim_ != o.dim_) return false;
    if (kind_ != SpaceKind::Polytope) return true;
    if (ball_vertices_.size() != o.ball_vertices_.size()) return false;
    for (size_t i = 0; i < ball_vertices_.size(); ++i)
        if ((ball_vertices_[i] - o.ball_vertices_[i]).cwiseAbs().maxCoeff() > 1e-12) return false;
    return true;
}

namespace {

void check_ambient(const SpaceDescriptor& space, const Vector& x, const char* op) {
    if (static_cast<int>(x.size()) != space.ambient_dim())
        throw dimension_mismatch(std::string(op) + ": vector length " +
                                 std::to_string(x.size()) + " vs ambient dimension " +
                                 std::to_string(space.ambient_dim()));
}

double polytope_gauge_lp(const std::vector<Vector>& verts, const Vector& x) {
    // Minimal t with x in t conv(verts): minimize sum(lambda) subject to
    // V lambda = x, lambda >= 0 (valid because the ball contains 0).
    const int dim = static_cast<int>(x.size());
    const int k = static_cast<int>(verts.size());
    LpProblem lp;
    lp.objective = Vector::Ones(k);
    lp.eq_lhs = Matrix(dim, k);
    for (int j = 0; j < k; ++j) lp.eq_lhs.col(j) = verts[j];
    lp.eq_rhs = x;
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw invalid_input("polytope norm: gauge LP infeasible (vertex set does not span?)");
    return sol.value;
}

}  // namespace

double norm(const SpaceDescriptor& space, const Vector& x) {
    check_ambient(space, x, "norm");
    require_finite(x, "norm argument");
    switch (space.kind()) {
        case SpaceKind::L1: return x.lpNorm<1>();
        case SpaceKind::L2: return x.norm();
        case SpaceKind::Linf: return x.lpNorm<Eigen::Infinity>();
        case SpaceKind::Polytope: return polytope_gauge_lp(space.stored_vertices(), x);
        case SpaceKind::Schatten1Sa:
            return HermitianMatrix::from_coords(space.dim(), x).trace_norm();
        case SpaceKind::SchattenInfSa:
            return HermitianMatrix::from_coords(space.dim(), x).operator_norm();
    }
    throw invalid_input("norm: unknown kind");
}

double norm(const SpaceDescriptor& space, const HermitianMatrix& x) {
    if (!space.is_schatten()) throw unsupported_kind("matrix argument requires a Schatten space");
    if (x.k() != space.dim()) throw dimension_mismatch("norm: matrix size vs space dim");
    return space.kind() == SpaceKind::Schatten1Sa ? x.trace_norm() : x.operator_norm();
}

double dual_norm(const SpaceDescriptor& space, const Vector& f) {
    check_ambient(space, f, "dual_norm");
    require_finite(f, "dual_norm argument");
    switch (space.kind()) {
        case SpaceKind::L1: return f.lpNorm<Eigen::Infinity>();
        case SpaceKind::L2: return f.norm();
        case SpaceKind::Linf: return f.lpNorm<1>();
        case SpaceKind::Polytope: {
            double best = 0.0;
            for (const auto& v : space.stored_vertices()) best = std::max(best, std::abs(f.dot(v)));
            return best;
        }
        case SpaceKind::Schatten1Sa:
            return HermitianMatrix::from_coords(space.dim(), f).operator_norm();
        case SpaceKind::SchattenInfSa:
            return HermitianMatrix::from_coords(space.dim(), f).trace_norm();
    }
    throw invalid_input("dual_norm: unknown kind");
}

SpaceDescriptor dual_space(const SpaceDescriptor& space) {
    switch (space.kind()) {
        case SpaceKind::L1: return SpaceDescriptor::linf(space.dim());
        case SpaceKind::Linf: return SpaceDescriptor::l1(space.dim());
        case SpaceKind::L2: return SpaceDescriptor::l2(space.dim());
        case SpaceKind::Schatten1Sa: return SpaceDescriptor::schatten_inf(space.dim());
        case SpaceKind::SchattenInfSa: return SpaceDescriptor::schatten1(space.dim());
        case SpaceKind::Polytope: {
            if (space.dim() > 8)
                throw dimension_too_large("dual_space: polytope dimension > 8");
            return SpaceDescriptor::polytope(*space.cached_polar());
        }
    }
    throw invalid_input("dual_space: unknown kind");
}

std::vector<Vector> sign_vectors(int dim) {
    if (dim > 20) throw dimension_too_large("sign vector enumeration capped at dimension 20");
    std::vector<Vector> out;
    out.reserve(1u << dim);
    for (uint32_t mask = 0; mask < (1u << dim); ++mask) {
        Vector v(dim);
        for (int j = 0; j < dim; ++j) v(j) = (mask >> j) & 1u ? -1.0 : 1.0;
        out.push_back(std::move(v));
    }
    return out;
}

namespace {
std::vector<Vector> unit_vectors_pm(int dim) {
    std::vector<Vector> out;
    out.reserve(2 * dim);
    for (int j = 0; j < dim; ++j) {
        Vector v = Vector::Zero(dim);
        v(j) = 1.0;
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}
}  // namespace

std::vector<Vector> ball_vertex_list(const SpaceDescriptor& space) {
    switch (space.kind()) {
        case SpaceKind::L1: return unit_vectors_pm(space.dim());
        case SpaceKind::Linf: return sign_vectors(space.dim());
        case SpaceKind::Polytope: return space.stored_vertices();
        default:
            throw unsupported_kind("ball_vertex_list: the unit ball of kind " +
                                   std::string(kind_name(space.kind())) + " is not a polytope");
    }
}

BallShape primal_shape(const SpaceDescriptor& space) {
    switch (space.kind()) {
        case SpaceKind::L2: return BallShape::Euclidean;
        case SpaceKind::Schatten1Sa:
        case SpaceKind::SchattenInfSa: return BallShape::Spectral;
        default: return BallShape::Vertices;
    }
}

BallShape dual_shape(const SpaceDescriptor& space) { return primal_shape(space); }

std::vector<Vector> primal_vertices(const SpaceDescriptor& space) {
    return ball_vertex_list(space);
}

std::vector<Vector> dual_vertices(const SpaceDescriptor& space) {
    switch (space.kind()) {
        case SpaceKind::L1: return sign_vectors(space.dim());
        case SpaceKind::Linf: return unit_vectors_pm(space.dim());
        case SpaceKind::Polytope: {
            if (!space.cached_polar().has_value())
                throw dimension_too_large("dual vertices of a polytope require dim <= 8");
            return *space.cached_polar();
        }
        default:
            throw unsupported_kind("dual_vertices: dual ball of kind " +
                                   std::string(kind_name(space.kind())) + " is not a polytope");
    }
}

}  // namespace tnorm
