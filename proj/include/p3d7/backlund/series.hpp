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

#include <vector>

#include "state.hpp"

namespace p3d7::backlund {

/// u = (1/2) zeta v(zeta), v = sum_j v_j zeta^-j, truncated at j = J.
struct SeriesExpansion {
    int n = 0;
    std::vector<GaussianRational> v;

    /// (1/2) zeta v as a Laurent polynomial.
    LaurentPolynomial u_part() const {
        LaurentPolynomial out;
        for (std::size_t j = 0; j < v.size(); ++j) out.add_term(1 - static_cast<int>(j), v[j] * detail::q(1, 2));
        return out;
    }
};

namespace detail {

inline LaurentPolynomial dx(const LaurentPolynomial& f) {
    return f.derivative() * LaurentPolynomial::monomial(q(1, 3), -2);
}

// x u u'' - x u'^2 + u u' - 8u^3 - 2n u + x, i.e. the ODE multiplied by x u.
inline LaurentPolynomial ode_times_xu(const LaurentPolynomial& u, int n) {
    const LaurentPolynomial x = LaurentPolynomial::zeta(3);
    const LaurentPolynomial u1 = dx(u), u2 = dx(u1);
    return x * u * u2 - x * u1 * u1 + u * u1 - u * u * u * q(8) - u * q(2L * n) + x;
}

}  // namespace detail

/**
 * Coefficients v_0..v_J of the expansion at infinity, solved order by order.
 *
 * v_j first enters the residual at zeta^(3-j), linearly, so it is fixed by
 * evaluating that coefficient at v_j = 0 and v_j = 1. Later v_k only reach
 * lower orders, so the truncation never contaminates the order being solved.
 */
inline SeriesExpansion series_from_ode(int n, int J) {
    if (J < 1) throw DomainError("series_from_ode: need J >= 1");
    SeriesExpansion s{n, std::vector<GaussianRational>(static_cast<std::size_t>(J + 1))};
    s.v[0] = GaussianRational(1);
    for (int j = 1; j <= J; ++j) {
        s.v[j] = GaussianRational(0);
        GaussianRational c0 = detail::ode_times_xu(s.u_part(), n).coeff(3 - j);
        s.v[j] = GaussianRational(1);
        GaussianRational c1 = detail::ode_times_xu(s.u_part(), n).coeff(3 - j);
        GaussianRational slope = c1 - c0;
        if (slope.is_zero()) throw NumericalError("series_from_ode: degenerate order " + std::to_string(j));
        s.v[j] = -c0 / slope;
    }
    return s;
}

}  // namespace p3d7::backlund
