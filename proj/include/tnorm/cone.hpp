#pragma once

#include <optional>
#include <vector>

#include "tnorm/linalg.hpp"

namespace tnorm {

/// Polyhedral cone, primarily in V-representation. `facets`, when present,
/// caches the inner normals of the H-representation.
struct PolyhedralConeRep {
    int dimension = 0;
    std::vector<Vector> generators;
    std::optional<std::vector<Vector>> facets;
};

/// Extreme rays of the pointed cone {x : halfspaces[i] . x >= 0 for all i}.
/// The halfspace normals must span the space (otherwise the region contains a
/// line and has no ray representation). Rays come back unit-length and
/// lexicographically sorted.
std::vector<Vector> dd_extreme_rays(const std::vector<Vector>& halfspaces, int dim);

/// Dual cone C* = {f : f(g) >= 0 for all generators g of c}, returned by its
/// extreme rays (the facet normals of c). Requires dimension <= 12 and
/// spanning generators.
PolyhedralConeRep cone_dualize(const PolyhedralConeRep& c);

/// Vertices of the polytope {x : lhs[i] . x <= rhs[i]}; the polytope must be
/// bounded and full-dimensional. Computed by homogenising to a cone in
/// dimension d+1 and running double description.
std::vector<Vector> vertices_from_halfspaces(const std::vector<Vector>& lhs,
                                             const std::vector<double>& rhs, int dim);

/// Vertices of the polar body {w : <w,v> <= 1 for all v}. The input vertex
/// set must be centrally symmetric, span the space, and have dimension <= 8.
/// Duplicates are merged and non-extreme input points dropped first.
std::vector<Vector> polytope_dual_ball(const std::vector<Vector>& vertices);

/// Utility used by polytope handling: removes duplicates (within tol) and
/// points expressible as convex combinations of the others (LP test).
std::vector<Vector> extreme_points(const std::vector<Vector>& points);

/// True when x is a nonnegative combination of the generators (LP test).
bool cone_member(const std::vector<Vector>& generators, const Vector& x);

}  // namespace tnorm
