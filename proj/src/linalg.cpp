#include "tnorm/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace tnorm {

bool is_finite(const Matrix& m) { return m.allFinite(); }
bool is_finite(const Vector& v) { return v.allFinite(); }

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw invalid_input(std::string(what) + " contains NaN or Inf");
}

void require_finite(const Vector& v, const char* what) {
    if (!v.allFinite()) throw invalid_input(std::string(what) + " contains NaN or Inf");
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

EigResult sym_eig(const Matrix& m) {
    require_finite(m, "sym_eig input");
    if (m.rows() != m.cols()) throw invalid_input("sym_eig: matrix not square");
    const double scale = std::max(1.0, max_abs(m));
    const double asym = max_abs(m - m.transpose());
    if (asym > 1e-12 * scale)
        throw not_symmetric("sym_eig: asymmetry " + std::to_string(asym));

    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.transpose()));
    if (solver.info() != Eigen::Success) throw invalid_input("sym_eig: solver failed");

    // Eigen returns ascending order; flip to descending.
    const Eigen::Index n = m.rows();
    EigResult out;
    out.eigenvalues = Vector(n);
    out.eigenvectors = Matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

SvdResult svd(const Matrix& m) {
    require_finite(m, "svd input");
    Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult out;
    out.singular_values = solver.singularValues();
    out.u = solver.matrixU();
    out.v = solver.matrixV();
    return out;
}

}  // namespace tnorm
