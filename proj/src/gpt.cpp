#include "tnorm/gpt.hpp"

#include <algorithm>
#include <cmath>

#include "tnorm/config.hpp"
#include "tnorm/lp.hpp"

namespace tnorm {
namespace {

constexpr long kMinRuleBudget = 10000;

Matrix unflatten(const Vector& v, int n, int m) {
    Matrix out(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out(i, j) = v(static_cast<Eigen::Index>(i) * m + j);
    return out;
}

// Base-norm LP over a generator list: min sum(lp + lm) subject to
// G (lp - lm) = x. Returns the value and the optimal dual functional.
std::pair<double, Vector> base_norm_lp(const std::vector<Vector>& gens, const Vector& x) {
    const int dim = static_cast<int>(x.size());
    const int k = static_cast<int>(gens.size());
    LpProblem lp;
    lp.objective = Vector::Ones(2 * k);
    lp.eq_lhs = Matrix(dim, 2 * k);
    for (int j = 0; j < k; ++j) {
        lp.eq_lhs.col(j) = gens[j];
        lp.eq_lhs.col(k + j) = -gens[j];
    }
    lp.eq_rhs = x;
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw invalid_input("base norm LP infeasible: generators do not span");
    return {sol.value, sol.dual};
}

}  // namespace

Vector kron_vec(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
    return out;
}

Gpt::Gpt(int dim, std::vector<Vector> cone_generators, Vector unit)
    : dim_(dim), unit_(std::move(unit)) {
    if (dim < 1) throw invalid_input("Gpt: dimension >= 1 required");
    if (unit_.size() != dim) throw dimension_mismatch("Gpt: unit length vs dimension");
    require_finite(unit_, "gpt unit");
    if (cone_generators.empty()) throw degenerate_cone("Gpt: no cone generators");

    cone_.dimension = dim;
    for (auto& g : cone_generators) {
        require_finite(g, "gpt generator");
        if (g.size() != dim) throw dimension_mismatch("Gpt: generator length");
        const double ug = unit_.dot(g);
        if (ug <= tol().feas)
            throw validation_error("UnitNotStrictlyPositive",
                                   "unit effect must be strictly positive on every generator");
        cone_.generators.push_back(g / ug);
    }

    Matrix gm(cone_.generators.size(), dim);
    for (size_t i = 0; i < cone_.generators.size(); ++i) gm.row(i) = cone_.generators[i].transpose();
    Eigen::ColPivHouseholderQR<Matrix> qr(gm);
    qr.setThreshold(1e-10);
    if (qr.rank() < dim) throw degenerate_cone("Gpt: cone is not generating");

    // Salience: no generator may have its negative inside the cone.
    for (const auto& g : cone_.generators) {
        if (cone_member(cone_.generators, Vector(-g)))
            throw validation_error("ConeNotSalient", "cone contains a line");
    }
}

Gpt classical(int d) {
    if (d < 1) throw invalid_input("classical: d >= 1 required");
    std::vector<Vector> gens;
    for (int j = 0; j < d; ++j) {
        Vector e = Vector::Zero(d);
        e(j) = 1.0;
        gens.push_back(e);
    }
    return Gpt(d, std::move(gens), Vector::Ones(d));
}

double order_unit_norm(const Gpt& g, const Vector& f) {
    if (f.size() != g.dim()) throw dimension_mismatch("order_unit_norm: functional length");
    require_finite(f, "order_unit_norm argument");
    double t = 0.0;
    for (const auto& gen : g.generators()) t = std::max(t, std::abs(f.dot(gen)));
    return t;
}

double base_norm(const Gpt& g, const Vector& x) {
    if (x.size() != g.dim()) throw dimension_mismatch("base_norm: vector length");
    require_finite(x, "base_norm argument");
    auto [value, dual] = base_norm_lp(g.generators(), x);
    // Strong duality check: the LP multiplier is a functional in [-u, u]
    // reproducing the value.
    if (order_unit_norm(g, dual) > 1.0 + 1e-8 || std::abs(dual.dot(x) - value) > 1e-8 * std::max(1.0, value))
        throw std::runtime_error("base_norm: strong duality check failed");
    return value;
}

std::vector<Vector> order_interval_vertices(const Gpt& g) {
    std::vector<Vector> lhs;
    std::vector<double> rhs;
    for (const auto& gen : g.generators()) {
        lhs.push_back(gen);
        rhs.push_back(1.0);
        lhs.push_back(-gen);
        rhs.push_back(1.0);
    }
    return vertices_from_halfspaces(lhs, rhs, g.dim());
}

SpaceDescriptor base_norm_space(const Gpt& g) {
    std::vector<Vector> verts;
    for (const auto& gen : g.generators()) {
        verts.push_back(gen);
        verts.push_back(-gen);
    }
    return SpaceDescriptor::polytope(std::move(verts));
}

Gpt centrally_symmetric(const SpaceDescriptor& x_space) {
    std::vector<Vector> ball = ball_vertex_list(x_space);  // UnsupportedKind otherwise
    const int d = x_space.ambient_dim();
    std::vector<Vector> gens;
    for (const auto& v : ball) {
        Vector g(d + 1);
        g.head(d) = v;
        g(d) = 1.0;
        gens.push_back(std::move(g));
    }
    Vector unit = Vector::Zero(d + 1);
    unit(d) = 1.0;
    return Gpt(d + 1, std::move(gens), std::move(unit));
}

TwoIsomorphicResult two_isomorphic_base_norm(const SpaceDescriptor& x_space) {
    if (x_space.ambient_dim() > 6)
        throw dimension_too_large("two_isomorphic_base_norm: dimension capped at 6");
    SpaceDescriptor poly = x_space.kind() == SpaceKind::Polytope
                               ? x_space
                               : SpaceDescriptor::polytope(ball_vertex_list(x_space));
    const int d = poly.ambient_dim();
    const std::vector<Vector>& verts = poly.stored_vertices();
    const std::vector<Vector>& polar = *poly.cached_polar();

    // x: first ball vertex; x*: the first polar vertex norming it.
    const Vector x = verts.front();
    Vector x_star;
    double best = -1e300;
    for (const auto& w : polar) {
        const double v = w.dot(x);
        if (v > best + 1e-12) {
            best = v;
            x_star = w;
        }
    }

    // Cone {y : x*(y) >= ||y||/2} = {y : <2x* - w, y> >= 0 for all polar w}.
    std::vector<Vector> halfspaces;
    for (const auto& w : polar) halfspaces.push_back(2.0 * x_star - w);
    std::vector<Vector> rays = dd_extreme_rays(halfspaces, d);
    if (rays.empty()) throw degenerate_cone("two_isomorphic_base_norm: empty slice cone");

    Gpt gpt(d, std::move(rays), Vector(2.0 * x_star));

    // Verified postcondition: B subset of B_X subset of 2B.
    for (const auto& gen : gpt.generators()) {
        if (norm(poly, gen) > 1.0 + 1e-9)
            throw std::runtime_error("two_isomorphic_base_norm: B exceeds the unit ball");
    }
    for (const auto& v : verts) {
        if (base_norm(gpt, v) > 2.0 + 1e-9)
            throw std::runtime_error("two_isomorphic_base_norm: unit ball exceeds 2B");
    }
    return {std::move(gpt), x, x_star};
}

Composite compose(const Gpt& a, const Gpt& b, ComposeRule rule) {
    Composite c{a, b, rule, {}, {}, kron_vec(a.unit(), b.unit())};
    if (rule == ComposeRule::Min) {
        const long count =
            static_cast<long>(a.generators().size()) * static_cast<long>(b.generators().size());
        if (count > kMinRuleBudget)
            throw budget_exceeded("compose(min): generator product count exceeds 10^4");
        for (const auto& ga : a.generators())
            for (const auto& gb : b.generators()) c.cone_generators.push_back(kron_vec(ga, gb));
    } else {
        const std::vector<Vector> da = cone_dualize(a.cone()).generators;
        const std::vector<Vector> db = cone_dualize(b.cone()).generators;
        const long count = static_cast<long>(da.size()) * static_cast<long>(db.size());
        if (count > kMinRuleBudget)
            throw budget_exceeded("compose(max): dual generator product count exceeds 10^4");
        for (const auto& fa : da)
            for (const auto& fb : db) c.dual_generators.push_back(kron_vec(fa, fb));
    }
    return c;
}

bool composite_member(const Composite& c, const Vector& omega) {
    if (omega.size() != c.unit.size()) throw dimension_mismatch("composite_member: vector length");
    if (c.rule == ComposeRule::Min) return cone_member(c.cone_generators, omega);
    for (const auto& d : c.dual_generators)
        if (d.dot(omega) < -tol().feas) return false;
    return true;
}

XorGame::XorGame(Composite model_, std::vector<Vector> questions_, Vector probs_,
                 std::vector<int> bits_)
    : model(std::move(model_)),
      questions(std::move(questions_)),
      probs(std::move(probs_)),
      bits(std::move(bits_)) {
    const size_t q = questions.size();
    if (q == 0) throw invalid_input("XorGame: at least one question required");
    if (static_cast<size_t>(probs.size()) != q || bits.size() != q)
        throw dimension_mismatch("XorGame: questions, probs and bits must have equal length");
    require_finite(probs, "game probabilities");
    if ((probs.array() < -1e-15).any() || std::abs(probs.sum() - 1.0) > 1e-12)
        throw bad_probability_vector("XorGame: probs must be a probability distribution");
    for (int b : bits)
        if (b != 0 && b != 1) throw invalid_input("XorGame: bits must be 0 or 1");
    for (const auto& w : questions) {
        if (w.size() != model.unit.size())
            throw dimension_mismatch("XorGame: question length vs composite dimension");
        require_finite(w, "game question");
        if (std::abs(model.unit.dot(w) - 1.0) > 1e-9)
            throw validation_error("QuestionNotNormalised",
                                   "question states must have unit effect value 1");
        if (!composite_member(model, w))
            throw validation_error("QuestionNotInCone",
                                   "question states must lie in the composite cone");
    }
}

Tensor game_vector(const XorGame& g) {
    const int n = g.model.factor_a.dim();
    const int m = g.model.factor_b.dim();
    Vector z = Vector::Zero(static_cast<Eigen::Index>(n) * m);
    for (size_t i = 0; i < g.questions.size(); ++i)
        z += g.probs(i) * (g.bits[i] ? -1.0 : 1.0) * g.questions[i];
    return Tensor(base_norm_space(g.model.factor_a), base_norm_space(g.model.factor_b),
                  unflatten(z, n, m));
}

double bias_local(const XorGame& g) {
    // Independent of the composition rule: only the factor order intervals
    // enter.
    const Matrix z = game_vector(g).coeffs;
    const std::vector<Vector> fa = order_interval_vertices(g.model.factor_a);
    const std::vector<Vector> fb = order_interval_vertices(g.model.factor_b);
    double best = 0.0;
    for (const auto& f : fa) {
        const Vector row = z.transpose() * f;
        for (const auto& h : fb) best = std::max(best, row.dot(h));
    }
    return best;
}

double bias_global(const XorGame& g) {
    const int n = g.model.factor_a.dim();
    const int m = g.model.factor_b.dim();
    Vector zvec = Vector::Zero(static_cast<Eigen::Index>(n) * m);
    for (size_t i = 0; i < g.questions.size(); ++i)
        zvec += g.probs(i) * (g.bits[i] ? -1.0 : 1.0) * g.questions[i];

    if (g.model.rule == ComposeRule::Min) {
        auto [value, dual] = base_norm_lp(g.model.cone_generators, zvec);
        // Cross-check: base norm of the min composite equals the projective
        // norm of z_G in the factor base-norm spaces.
        const double pi = exact_value(projective_norm(game_vector(g)));
        if (std::abs(value - pi) > 1e-8 * std::max(1.0, value))
            throw std::runtime_error("bias_global: projective cross-check failed");
        return value;
    }

    // Max rule: maximise F(z) over F in [-u, u] ordered by the dual cone,
    // which is generated by the product dual generators D_j. Writing
    // u - F = sum mu^P D and u + F = sum mu^Q D gives an LP in (mu^P, mu^Q).
    const auto& duals = g.model.dual_generators;
    const int k = static_cast<int>(duals.size());
    const int dim = static_cast<int>(zvec.size());
    LpProblem lp;
    lp.objective = Vector(2 * k);
    lp.eq_lhs = Matrix(dim, 2 * k);
    for (int j = 0; j < k; ++j) {
        const double dz = duals[j].dot(zvec);
        lp.objective(j) = 0.5 * dz;        // minimise; mu^P contributes -F
        lp.objective(k + j) = -0.5 * dz;   // mu^Q contributes +F
        lp.eq_lhs.col(j) = duals[j];
        lp.eq_lhs.col(k + j) = duals[j];
    }
    lp.eq_rhs = 2.0 * g.model.unit;
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw std::runtime_error("bias_global: order-interval LP infeasible");
    return -sol.value;
}

}  // namespace tnorm
