#pragma once

#include <cmath>
#include <vector>

#include "tnorm/rng.hpp"
#include "tnorm/spaces.hpp"

namespace tnorm::testutil {

inline Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

inline SpaceDescriptor hexagon() {
    return SpaceDescriptor::polytope({vec2(1, 0), vec2(-1, 0), vec2(0, 1), vec2(0, -1),
                                      vec2(2.0 / 3, 2.0 / 3), vec2(-2.0 / 3, -2.0 / 3)});
}

/// Regular 2k-gon with unit circumradius.
inline SpaceDescriptor regular_polygon(int k) {
    std::vector<Vector> verts;
    for (int i = 0; i < k; ++i) {
        const double th = M_PI * i / k;
        Vector v = vec2(std::cos(th), std::sin(th));
        verts.push_back(v);
        verts.push_back(-v);
    }
    return SpaceDescriptor::polytope(verts);
}

/// Random centrally symmetric polygon with `pairs` +-v vertex pairs drawn on
/// radii in [0.6, 1.4]. Degenerate draws are retried.
inline SpaceDescriptor random_polygon(CounterRng& rng, int pairs) {
    while (true) {
        std::vector<Vector> verts;
        for (int i = 0; i < pairs; ++i) {
            const double th = M_PI * rng.next_uniform();
            const double r = 0.6 + 0.8 * rng.next_uniform();
            Vector v = vec2(r * std::cos(th), r * std::sin(th));
            verts.push_back(v);
            verts.push_back(-v);
        }
        try {
            return SpaceDescriptor::polytope(verts);
        } catch (const Error&) {
            // nearly collinear draw; try again
        }
    }
}

}  // namespace tnorm::testutil
