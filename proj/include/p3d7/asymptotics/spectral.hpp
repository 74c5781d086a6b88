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

#include <cmath>
#include <utility>

#include "cubic.hpp"

namespace p3d7::asymptotics {

/// Degenerate spectral polynomial -(mu - d)^2 (mu - s) for parameter y.
struct SpectralData {
    double y = 0, s = 0, d = 0, c = 0;
};

/// The negative root s of s(s-1)^2 = -y^2, with d = (1-s)/2 and c = -(d^2 + 2ds).
inline SpectralData spectral(double y) {
    if (!(y > 0) || !std::isfinite(y)) throw DomainError("spectral: need finite y > 0");
    // f(s) = s(s-1)^2 + y^2 is increasing on s < 1/3, f(0) = y^2 > 0
    auto f = [y](double s) { return s * (s - 1) * (s - 1) + y * y; };
    double hi = 0.0, lo = -std::cbrt(y * y) - 1.0;
    while (f(lo) > 0) lo *= 2;
    double s = -std::min(y * y, std::cbrt(y * y));
    if (!(s > lo && s < hi)) s = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double fs = f(s);
        if (fs == 0) break;
        (fs > 0 ? hi : lo) = s;
        double df = (3 * s - 1) * (s - 1);
        double next = s - fs / df;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - s) <= 1e-17 * std::abs(s)) {
            s = next;
            break;
        }
        s = next;
    }
    SpectralData out;
    out.y = y;
    out.s = s;
    out.d = (1 - s) / 2;
    out.c = -(out.d * out.d + 2 * out.d * out.s);
    return out;
}

/// (-64(27y^2 + 4), y^2 (27y^2 + 4)^3), the discriminant expressions of the two cubics.
inline std::pair<double, double> discriminant_checks(double y) {
    double k = 27 * y * y + 4;
    return {-64 * k, y * y * k * k * k};
}

/// g_0(y) = 1 - 3s/2 + ln(-s/4)/2.
inline double g0_of_y(double y) {
    double s = spectral(y).s;
    return 1 - 1.5 * s + 0.5 * std::log(-s / 4);
}

/// Coefficient of (-i eta)^{1/2} in the expansion of g at the origin: -(1+3s)/(2 sqrt(-s)).
inline double g_origin_coeff(double y) {
    double s = spectral(y).s;
    return -(1 + 3 * s) / (2 * std::sqrt(-s));
}

struct WeierstrassInvariants {
    double y = 0, Ec = 0, g2 = 0, g3 = 0;
};

/// g2 = 16/y^2 + Ec^2/3, g3 = -16/y^2 - 8Ec/(3y^2) - Ec^3/27.
inline WeierstrassInvariants weierstrass_invariants(double y, double Ec) {
    if (y == 0) throw DomainError("weierstrass_invariants: y must be nonzero");
    double y2 = y * y;
    return {y, Ec, 16 / y2 + Ec * Ec / 3, -16 / y2 - 8 * Ec / (3 * y2) - Ec * Ec * Ec / 27};
}

/// Integration constant matched to the degenerate spectral curve: y^2 Ec = -8c.
inline double matched_integration_constant(double y) { return -8 * spectral(y).c / (y * y); }

}  // namespace p3d7::asymptotics
