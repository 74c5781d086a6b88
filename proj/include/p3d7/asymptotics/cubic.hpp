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

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include "../errors.hpp"

namespace p3d7::asymptotics {

using cplx = std::complex<double>;

/// The three roots of a z^3 + b z^2 + c z + d (a != 0), Newton-polished.
inline std::array<cplx, 3> cubic_roots(cplx a, cplx b, cplx c, cplx d) {
    if (a == cplx(0)) throw DomainError("cubic_roots: leading coefficient is zero");
    b /= a;
    c /= a;
    d /= a;
    // depressed cubic t^3 + p t + q with z = t - b/3
    const cplx p = c - b * b / 3.0;
    const cplx q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cplx w = -q / 2.0 + disc;
    if (std::abs(-q / 2.0 - disc) > std::abs(w)) w = -q / 2.0 - disc;
    const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
    std::array<cplx, 3> z;
    cplx C = std::pow(w, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
        cplx t = C == cplx(0) ? cplx(0) : C - p / (3.0 * C);
        z[k] = t - b / 3.0;
        C *= omega;
    }
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            cplx f = ((r + b) * r + c) * r + d;
            cplx df = (3.0 * r + 2.0 * b) * r + c;
            if (df == cplx(0)) break;
            cplx step = f / df;
            if (!std::isfinite(std::abs(step))) break;
            r -= step;
        }
    }
    return z;
}

/// Positive real root of 8U^3 + 2U - y = 0 for y >= 0 (unique real root).
inline double equilibrium_U(double y) {
    if (!(y >= 0) || !std::isfinite(y)) throw DomainError("equilibrium_U: need finite y >= 0");
    if (y == 0) return 0.0;
    // Cardano on U^3 + U/4 - y/8 = 0, then Newton to clean up cancellation at small y
    const double hq = y / 16.0, p3 = 1.0 / 12.0;
    const double sd = std::sqrt(hq * hq + p3 * p3 * p3);
    double U = std::cbrt(hq + sd) + std::cbrt(hq - sd);
    if (!(U > 0)) U = y / 2.0;
    for (int it = 0; it < 4; ++it) U -= (8 * U * U * U + 2 * U - y) / (24 * U * U + 2);
    return U;
}

}  // namespace p3d7::asymptotics
