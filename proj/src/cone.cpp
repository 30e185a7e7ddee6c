#include "tnorm/cone.hpp"

#include <algorithm>
#include <cmath>

#include "tnorm/config.hpp"
#include "tnorm/lp.hpp"

namespace tnorm {
namespace {

constexpr double kRayEps = 1e-9;

bool lex_less(const Vector& a, const Vector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i) - 1e-12) return true;
        if (a(i) > b(i) + 1e-12) return false;
    }
    return false;
}

void sort_and_dedup(std::vector<Vector>& rays) {
    std::sort(rays.begin(), rays.end(), lex_less);
    std::vector<Vector> out;
    for (const auto& r : rays) {
        if (out.empty() || (out.back() - r).cwiseAbs().maxCoeff() > 1e-8) out.push_back(r);
    }
    rays.swap(out);
}

// Active-set intersection for the combinatorial adjacency test.
std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains_all(const std::vector<int>& super, const std::vector<int>& sub) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

struct Ray {
    Vector dir;                // unit length
    std::vector<int> active;   // sorted indices of halfspaces tight at this ray
};

}  // namespace

std::vector<Vector> dd_extreme_rays(const std::vector<Vector>& halfspaces, int dim) {
    const int h = static_cast<int>(halfspaces.size());
    for (const auto& a : halfspaces) {
        require_finite(a, "halfspace normal");
        if (a.size() != dim) throw dimension_mismatch("dd_extreme_rays: normal length");
    }

    // Pick dim independent normals for the initial simplicial cone.
    Matrix basis(dim, dim);
    std::vector<int> chosen;
    {
        Matrix acc(0, dim);
        for (int i = 0; i < h && static_cast<int>(chosen.size()) < dim; ++i) {
            Matrix trial(acc.rows() + 1, dim);
            trial << acc, halfspaces[i].transpose();
            Eigen::ColPivHouseholderQR<Matrix> qr(trial);
            qr.setThreshold(1e-10);
            if (qr.rank() == trial.rows()) {
                acc = trial;
                chosen.push_back(i);
            }
        }
        if (static_cast<int>(chosen.size()) < dim)
            throw degenerate_cone("halfspace normals do not span the space");
        for (int r = 0; r < dim; ++r) basis.row(r) = halfspaces[chosen[r]].transpose();
    }

    // Initial rays: columns of basis^{-1}; ray j is tight on every chosen row
    // except j.
    Matrix inv = basis.inverse();
    std::vector<Ray> rays;
    for (int j = 0; j < dim; ++j) {
        Ray r;
        r.dir = inv.col(j).normalized();
        for (int k = 0; k < dim; ++k)
            if (k != j) r.active.push_back(chosen[k]);
        std::sort(r.active.begin(), r.active.end());
        rays.push_back(std::move(r));
    }

    // Insert the remaining halfspaces one at a time.
    for (int i = 0; i < h; ++i) {
        if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
        const Vector& a = halfspaces[i];
        std::vector<int> pos, neg, zero;
        std::vector<double> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) {
            val[r] = a.dot(rays[r].dir);
            if (val[r] > kRayEps) pos.push_back(static_cast<int>(r));
            else if (val[r] < -kRayEps) neg.push_back(static_cast<int>(r));
            else zero.push_back(static_cast<int>(r));
        }
        if (neg.empty()) {
            for (int r : zero) rays[r].active.insert(
                std::lower_bound(rays[r].active.begin(), rays[r].active.end(), i), i);
            continue;
        }

        std::vector<Ray> next;
        for (int r : pos) next.push_back(rays[r]);
        for (int r : zero) {
            Ray nr = rays[r];
            nr.active.insert(std::lower_bound(nr.active.begin(), nr.active.end(), i), i);
            next.push_back(std::move(nr));
        }
        // New rays from adjacent positive/negative pairs.
        for (int p : pos) {
            for (int q : neg) {
                std::vector<int> common = intersect_sorted(rays[p].active, rays[q].active);
                bool adjacent = true;
                for (size_t r = 0; r < rays.size(); ++r) {
                    if (static_cast<int>(r) == p || static_cast<int>(r) == q) continue;
                    if (contains_all(rays[r].active, common)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Ray nr;
                nr.dir = (val[p] * rays[q].dir - val[q] * rays[p].dir).normalized();
                nr.active = std::move(common);
                nr.active.insert(std::lower_bound(nr.active.begin(), nr.active.end(), i), i);
                next.push_back(std::move(nr));
            }
        }
        rays.swap(next);
    }

    std::vector<Vector> dirs;
    dirs.reserve(rays.size());
    for (auto& r : rays) dirs.push_back(std::move(r.dir));
    sort_and_dedup(dirs);
    return dirs;
}

PolyhedralConeRep cone_dualize(const PolyhedralConeRep& c) {
    if (c.dimension > 12)
        throw dimension_too_large("cone_dualize: dimension " + std::to_string(c.dimension) + " > 12");
    if (c.generators.empty()) throw degenerate_cone("cone_dualize: no generators");
    for (const auto& g : c.generators) {
        if (g.size() != c.dimension) throw dimension_mismatch("cone_dualize: generator length");
        if (g.norm() < kRayEps) throw degenerate_cone("cone_dualize: zero generator");
    }
    PolyhedralConeRep dual;
    dual.dimension = c.dimension;
    dual.generators = dd_extreme_rays(c.generators, c.dimension);
    if (dual.generators.empty())
        throw degenerate_cone("cone_dualize: dual cone is trivial");
    return dual;
}

std::vector<Vector> vertices_from_halfspaces(const std::vector<Vector>& lhs,
                                             const std::vector<double>& rhs, int dim) {
    if (lhs.size() != rhs.size()) throw dimension_mismatch("vertices_from_halfspaces: sizes");
    // Homogenise: {x : a.x <= b}  ->  rays of {(x,t) : b t - a.x >= 0}.
    std::vector<Vector> normals;
    normals.reserve(lhs.size());
    for (size_t i = 0; i < lhs.size(); ++i) {
        Vector n(dim + 1);
        n.head(dim) = -lhs[i];
        n(dim) = rhs[i];
        normals.push_back(std::move(n));
    }
    std::vector<Vector> rays = dd_extreme_rays(normals, dim + 1);
    std::vector<Vector> verts;
    for (const auto& r : rays) {
        if (r(dim) <= kRayEps)
            throw not_full_dimensional("halfspace polytope is unbounded or degenerate");
        verts.push_back(r.head(dim) / r(dim));
    }
    sort_and_dedup(verts);
    return verts;
}

std::vector<Vector> extreme_points(const std::vector<Vector>& points) {
    std::vector<Vector> uniq;
    for (const auto& p : points) {
        bool dup = false;
        for (const auto& q : uniq) {
            if ((p - q).cwiseAbs().maxCoeff() <= 1e-9) { dup = true; break; }
        }
        if (!dup) uniq.push_back(p);
    }
    if (uniq.size() <= 1) return uniq;
    const int dim = static_cast<int>(uniq[0].size());

    std::vector<Vector> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
        // Is uniq[i] a convex combination of the others?
        const int k = static_cast<int>(uniq.size()) - 1;
        LpProblem lp;
        lp.objective = Vector::Zero(k);
        lp.eq_lhs = Matrix::Zero(dim + 1, k);
        lp.eq_rhs = Vector::Zero(dim + 1);
        int col = 0;
        for (size_t j = 0; j < uniq.size(); ++j) {
            if (j == i) continue;
            lp.eq_lhs.block(0, col, dim, 1) = uniq[j];
            lp.eq_lhs(dim, col) = 1.0;
            ++col;
        }
        lp.eq_rhs.head(dim) = uniq[i];
        lp.eq_rhs(dim) = 1.0;
        if (lp_solve(lp).status != LpStatus::Optimal) out.push_back(uniq[i]);
    }
    return out;
}

bool cone_member(const std::vector<Vector>& generators, const Vector& x) {
    if (generators.empty()) return x.norm() <= tol().feas;
    const int dim = static_cast<int>(x.size());
    const int k = static_cast<int>(generators.size());
    LpProblem lp;
    lp.objective = Vector::Zero(k);
    lp.eq_lhs = Matrix::Zero(dim, k);
    for (int j = 0; j < k; ++j) lp.eq_lhs.col(j) = generators[j];
    lp.eq_rhs = x;
    return lp_solve(lp).status == LpStatus::Optimal;
}

std::vector<Vector> polytope_dual_ball(const std::vector<Vector>& vertices) {
    if (vertices.empty()) throw not_full_dimensional("polytope_dual_ball: empty vertex set");
    const int dim = static_cast<int>(vertices[0].size());
    if (dim > 8)
        throw dimension_too_large("polytope_dual_ball: dimension " + std::to_string(dim) + " > 8");
    for (const auto& v : vertices) {
        require_finite(v, "polytope vertex");
        if (v.size() != dim) throw dimension_mismatch("polytope_dual_ball: vertex length");
    }

    std::vector<Vector> verts = extreme_points(vertices);

    // Central symmetry: -v must be present for every v.
    for (const auto& v : verts) {
        bool found = false;
        for (const auto& w : verts) {
            if ((v + w).cwiseAbs().maxCoeff() <= 1e-9) { found = true; break; }
        }
        if (!found) throw not_symmetric("polytope_dual_ball: vertex set is not centrally symmetric");
    }

    Matrix vm(verts.size(), dim);
    for (size_t i = 0; i < verts.size(); ++i) vm.row(i) = verts[i].transpose();
    Eigen::ColPivHouseholderQR<Matrix> qr(vm);
    qr.setThreshold(1e-10);
    if (qr.rank() < dim)
        throw not_full_dimensional("polytope_dual_ball: vertices do not span the space");

    std::vector<double> ones(verts.size(), 1.0);
    return vertices_from_halfspaces(verts, ones, dim);
}

}  // namespace tnorm
