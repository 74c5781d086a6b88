/*
   Copyright 2026 The p3d7 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "cubic.hpp"

namespace p3d7::asymptotics {

/// |Y| of the four branch points, 2^{1/3}/3^{1/2}.
inline double corner_radius() { return std::cbrt(2.0) / std::sqrt(3.0); }

/// r e^{i pi/6}, r e^{5 i pi/6}, r e^{-5 i pi/6}, r e^{-i pi/6}, counter-clockwise from the first quadrant.
inline std::array<cplx, 4> corner_points() {
    const double r = corner_radius(), pi = std::numbers::pi;
    return {std::polar(r, pi / 6), std::polar(r, 5 * pi / 6), std::polar(r, -5 * pi / 6), std::polar(r, -pi / 6)};
}

inline double distance_to_segment(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    double t = std::clamp(((p - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

/// Distance from Y to the union of the two crossing cut segments.
inline double distance_to_cuts(cplx Y) {
    const auto c = corner_points();
    return std::min(distance_to_segment(Y, c[0], c[2]), distance_to_segment(Y, c[1], c[3]));
}

struct BranchValue {
    cplx s;  // root of s(s-1)^2 = -Y^6 with s = -Y^2 + O(1) at infinity
    cplx U;  // (1/2)(-s)^{1/2} with U = Y/2 (1 + o(1)) at infinity
};

struct TrackingOptions {
    double start_radius = 50.0;
    int steps = 240;
    double cut_exclusion = 1e-6;
    int max_halvings = 12;
};

namespace detail {

inline std::array<cplx, 3> s_roots(cplx Y) {
    cplx Y2 = Y * Y;
    return cubic_roots(1.0, -2.0, 1.0, Y2 * Y2 * Y2);
}

// Closest root to `prev`; fails if the runner-up is not clearly farther.
inline bool closest_root(cplx Y, cplx prev, cplx& out) {
    auto r = s_roots(Y);
    std::sort(r.begin(), r.end(), [&](cplx a, cplx b) { return std::abs(a - prev) < std::abs(b - prev); });
    double d0 = std::abs(r[0] - prev), d1 = std::abs(r[1] - prev);
    out = r[0];
    return d0 < 0.5 * d1;
}

inline cplx sign_matched_sqrt(cplx v, cplx prev) {
    cplx w = std::sqrt(v);
    return std::abs(w - prev) <= std::abs(-w - prev) ? w : -w;
}

}  // namespace detail

/**
 * s(Y) and U(Y) by radial continuation from |Y| = start_radius, where
 * s = -Y^2 is unambiguous. Steps are log-spaced; a step whose closest-root
 * match is ambiguous is halved, up to max_halvings times.
 */
inline BranchValue branch_at(cplx Y, const TrackingOptions& opt = {}) {
    if (!std::isfinite(Y.real()) || !std::isfinite(Y.imag())) throw DomainError("s_of_Y: non-finite Y");
    if (std::abs(Y) < opt.cut_exclusion || distance_to_cuts(Y) < opt.cut_exclusion) {
        std::ostringstream os;
        os << "s_of_Y: Y = " << Y << " lies on a branch cut";
        throw BranchError(os.str());
    }
    const double theta = std::arg(Y);
    const double r_end = std::abs(Y);
    const double r_start = std::max(opt.start_radius, r_end);
    cplx Z = std::polar(r_start, theta);
    BranchValue cur;
    {
        cplx guess = -Z * Z;
        detail::closest_root(Z, guess, cur.s);
        cur.U = detail::sign_matched_sqrt(-cur.s, Z) * 0.5;
    }
    const double lr0 = std::log(r_start), lr1 = std::log(r_end);
    double lr = lr0;
    for (int k = 1; k <= opt.steps; ++k) {
        const double target = lr0 + (lr1 - lr0) * k / opt.steps;
        double step = target - lr;
        int halvings = 0;
        while (lr != target) {
            double next = (std::abs(target - lr) < std::abs(step)) ? target : lr + step;
            cplx Zn = std::polar(std::exp(next), theta);
            cplx s_new;
            if (!detail::closest_root(Zn, cur.s, s_new)) {
                if (++halvings > opt.max_halvings) {
                    std::ostringstream os;
                    os << "s_of_Y: ambiguous continuation near Y = " << Zn;
                    throw NumericalError(os.str());
                }
                step /= 2;
                continue;
            }
            cur.U = 0.5 * detail::sign_matched_sqrt(-s_new, 2.0 * cur.U);
            cur.s = s_new;
            lr = next;
        }
    }
    // On both axes s(Y*) = s(Y)* and s(-Y) = s(Y) force s real; U is then real or imaginary.
    if (Y.imag() == 0) {
        cur.s = cur.s.real();
        cur.U = cur.U.real();
    } else if (Y.real() == 0) {
        cur.s = cur.s.real();
        cur.U = cplx(0, cur.U.imag());
    }
    return cur;
}

inline cplx s_of_Y(cplx Y, const TrackingOptions& opt = {}) { return branch_at(Y, opt).s; }

/// Equilibrium branch on the exterior domain: 8U^3 + 2U = Y^3 with U ~ Y/2.
inline cplx equilibrium_U(cplx Y, const TrackingOptions& opt = {}) { return branch_at(Y, opt).U; }

}  // namespace p3d7::asymptotics
