#pragma once

namespace tnorm {

/// Central numeric tolerances. Every module reads these instead of scattering
/// magic epsilons, so the golden-value tests pin one set of constants.
struct Tolerances {
    double feas = 1e-9;    // LP feasibility / cone membership slack
    double eq = 1e-9;      // equality of recomputed quantities
    double report = 1e-7;  // tolerance used when comparing reported values
};

inline const Tolerances& tol() {
    static const Tolerances t{};
    return t;
}

}  // namespace tnorm
