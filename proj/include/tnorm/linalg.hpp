#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tnorm/errors.hpp"

namespace tnorm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

bool is_finite(const Matrix& m);
bool is_finite(const Vector& v);

/// Throws InvalidInput if the data contains NaN or Inf.
void require_finite(const Matrix& m, const char* what);
void require_finite(const Vector& v, const char* what);

struct EigResult {
    Vector eigenvalues;   // descending
    Matrix eigenvectors;  // columns, matching order, orthonormal
};

/// Spectral decomposition of a symmetric matrix. The input must be square and
/// symmetric within 1e-12 (relative to its largest entry), otherwise
/// NotSymmetric is thrown. Eigenvalues are returned in descending order.
EigResult sym_eig(const Matrix& m);

struct SvdResult {
    Vector singular_values;  // descending, nonnegative
    Matrix u;                // thin factors: m = u * diag(s) * v^T
    Matrix v;
};

SvdResult svd(const Matrix& m);

/// max |entry|
double max_abs(const Matrix& m);

}  // namespace tnorm
