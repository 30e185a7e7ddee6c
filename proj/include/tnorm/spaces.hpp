#pragma once

#include <optional>
#include <vector>

#include "tnorm/cone.hpp"
#include "tnorm/linalg.hpp"

namespace tnorm {

/// k x k Hermitian matrix stored as a (symmetric, antisymmetric) pair of real
/// matrices: H = S + i A. Hermiticity is exact by construction.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    HermitianMatrix(Matrix symmetric, Matrix antisymmetric);

    static HermitianMatrix zero(int k);

    /// Coordinates in the fixed orthonormal Hermitian basis; see
    /// hermitian_basis() for the ordering convention.
    static HermitianMatrix from_coords(int k, const Vector& coords);
    Vector to_coords() const;

    int k() const { return static_cast<int>(sym_.rows()); }
    const Matrix& sym() const { return sym_; }
    const Matrix& antisym() const { return antisym_; }

    /// Eigenvalues in descending order, computed on the 2k x 2k real
    /// symmetric embedding [[S, -A], [A, S]] (each eigenvalue of H shows up
    /// twice there).
    Vector eigenvalues() const;

    double trace_norm() const;     // sum |eigenvalue|
    double operator_norm() const;  // max |eigenvalue|
    double frobenius() const;
    double trace() const { return sym_.trace(); }

    HermitianMatrix operator+(const HermitianMatrix& o) const;
    HermitianMatrix operator-(const HermitianMatrix& o) const;
    HermitianMatrix operator*(double s) const;

    static HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);
    static double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b);

    /// Matrix sign: same eigenvectors, eigenvalues replaced by their signs.
    HermitianMatrix sign() const;

private:
    Matrix sym_;
    Matrix antisym_;
};

/// Hilbert-Schmidt orthonormal basis of Herm(k), k^2 elements. Ordering:
/// diagonal units E_jj for j = 0..k-1, then for each index pair j < l (in
/// lexicographic order) the symmetric element (E_jl + E_lj)/sqrt(2) followed
/// by the antisymmetric element i(E_jl - E_lj)/sqrt(2).
std::vector<HermitianMatrix> hermitian_basis(int k);

enum class SpaceKind { L1, L2, Linf, Polytope, Schatten1Sa, SchattenInfSa };

const char* kind_name(SpaceKind kind);

/// A finite-dimensional normed space. Polytope spaces are validated on
/// construction (central symmetry, full dimension, extreme vertices only) and
/// cache their polar vertices eagerly when dim <= 8. Schatten spaces live on
/// Herm(k) with ambient dimension k^2, coordinatised in hermitian_basis(k).
class SpaceDescriptor {
public:
    static SpaceDescriptor l1(int dim);
    static SpaceDescriptor l2(int dim);
    static SpaceDescriptor linf(int dim);
    static SpaceDescriptor polytope(std::vector<Vector> ball_vertices);
    static SpaceDescriptor schatten1(int k);
    static SpaceDescriptor schatten_inf(int k);

    SpaceKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int ambient_dim() const;
    bool is_schatten() const {
        return kind_ == SpaceKind::Schatten1Sa || kind_ == SpaceKind::SchattenInfSa;
    }

    const std::vector<Vector>& stored_vertices() const { return ball_vertices_; }
    const std::optional<std::vector<Vector>>& cached_polar() const { return ball_facets_; }

    bool operator==(const SpaceDescriptor& o) const;

private:
    SpaceDescriptor(SpaceKind kind, int dim) : kind_(kind), dim_(dim) {}
    SpaceKind kind_;
    int dim_;
    std::vector<Vector> ball_vertices_;                 // Polytope only
    std::optional<std::vector<Vector>> ball_facets_;    // cached polar vertices
};

double norm(const SpaceDescriptor& space, const Vector& x);
double norm(const SpaceDescriptor& space, const HermitianMatrix& x);
double dual_norm(const SpaceDescriptor& space, const Vector& f);
SpaceDescriptor dual_space(const SpaceDescriptor& space);

/// Extreme points of the unit ball. Supported for L1, Linf (dim <= 20) and
/// Polytope kinds; L2 and Schatten balls are not polytopes.
std::vector<Vector> ball_vertex_list(const SpaceDescriptor& space);

// --- Ball descriptions used by the tensor-norm enumerations ---

/// How the unit ball of a space (or of its dual) can be handled.
enum class BallShape { Vertices, Euclidean, Spectral };

BallShape primal_shape(const SpaceDescriptor& space);
BallShape dual_shape(const SpaceDescriptor& space);

/// Vertices of the primal unit ball (same caps as ball_vertex_list).
std::vector<Vector> primal_vertices(const SpaceDescriptor& space);
/// Vertices of the dual unit ball: sign vectors for L1, +-e_i for Linf,
/// cached polar vertices for Polytope (dim <= 8).
std::vector<Vector> dual_vertices(const SpaceDescriptor& space);

/// All sign vectors {-1,+1}^dim in deterministic order; dim <= 20.
std::vector<Vector> sign_vectors(int dim);

}  // namespace tnorm
