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
#include <optional>
#include <vector>

#include "state.hpp"

namespace p3d7::backlund {

namespace detail {

inline GaussianRational a_of(int n) { return {mpq_class(0), mpq_class(-n)}; }

}  // namespace detail

/**
 * u'' - u'^2/u + u'/x - (-8 eps u^2 + 2ab)/x - b^2/u with eps = -1, a = -i n.
 * Zero for a genuine solution.
 */
inline RationalFunction ode_residual(const PotentialState& s, const GaussianRational& b = GaussianRational::i()) {
    const auto x = detail::x_power(1);
    const auto& u = s.u;
    const auto u1 = exact::d_dx(u);
    const auto u2 = exact::d_dx(u1);
    const GaussianRational two_ab = detail::q(2) * detail::a_of(s.n) * b;
    const WeightedRational forcing = detail::q(8) * (u * u) + WeightedRational(RationalFunction(two_ab));
    const auto r = u2 - u1 * u1 / u + u1 / x - forcing / x - WeightedRational(RationalFunction(b * b)) / u;
    return r.value();
}

/// i phi' as a weight-zero quantity, from the logarithmic derivative of e^{i phi}.
inline WeightedRational i_phi_prime(const PotentialState& s) { return exact::d_dx(s.E) / s.E; }

/**
 * The five compatibility equations of the Lax pair (epsilon = -1) with the
 * weight factor stripped. All entries vanish for a valid state.
 *
 * Equations two and four are grouped as x^2/4 (p/u)' + (1 -+ i a) x p/(2u) - 2u e^{+-i phi},
 * and three and five as +-(i/2) x [(u e^{+-i phi}/x)' - p or q]; these are
 * term-by-term rearrangements of the same expressions.
 */
inline std::array<RationalFunction, 5> lax_residuals(const PotentialState& s) {
    using detail::q;
    const GaussianRational i = GaussianRational::i();
    const GaussianRational a = detail::a_of(s.n);
    const GaussianRational half_i = q(1, 2) * i;
    const auto x = detail::x_power(1), x2 = detail::x_power(2);
    const auto& u = s.u;
    const auto& ep = s.E;           // e^{i phi}
    const auto em = s.E.inverse();  // e^{-i phi}
    const auto& p = s.P;
    const auto& qq = s.Q;
    const auto u_over_x = u / x;
    const auto p_over_u = p / u, q_over_u = qq / u;

    std::array<RationalFunction, 5> out;
    out[0] = (exact::d_dx(u) - u_over_x - q(1, 2) * (x * (p * em + qq * ep))).value();
    out[1] = (q(1, 4) * (x2 * exact::d_dx(p_over_u)) + (q(1, 2) * (GaussianRational(1) - i * a)) * (x * p_over_u) -
              q(2) * (u * ep))
                 .value();
    out[2] = (half_i * (x * (exact::d_dx(u_over_x * ep) - p))).value();
    out[3] = (q(1, 4) * (x2 * exact::d_dx(q_over_u)) + (q(1, 2) * (GaussianRational(1) + i * a)) * (x * q_over_u) -
              q(2) * (u * em))
                 .value();
    out[4] = (GaussianRational(-half_i) * (x * (exact::d_dx(u_over_x * em) - qq))).value();
    return out;
}

/// -2a u/x - (i/2) x p e^{-i phi} + (i/2) x q e^{i phi}; equals b = i for valid states.
inline RationalFunction b_constant(const PotentialState& s) {
    const GaussianRational i = GaussianRational::i();
    const GaussianRational half_i = detail::q(1, 2) * i;
    const auto x = detail::x_power(1);
    const auto r = (detail::q(-2) * detail::a_of(s.n)) * (s.u / x) - half_i * (x * s.P / s.E) + half_i * (x * s.Q * s.E);
    return r.value();
}

/// u phi' - 2a u/x - b.
inline RationalFunction phi_prime_residual(const PotentialState& s, const GaussianRational& b = GaussianRational::i()) {
    const auto x = detail::x_power(1);
    const auto phi1 = GaussianRational(-GaussianRational::i()) * i_phi_prime(s);
    const auto r = s.u * phi1 - (detail::q(2) * detail::a_of(s.n)) * (s.u / x) - WeightedRational(RationalFunction(b));
    return r.value();
}

struct SymmetryReport {
    bool real_coefficients = false;  // u(conj zeta) = conj u(zeta)
    bool odd = false;                // u(-zeta) = -u(zeta)
    bool passed() const { return real_coefficients && odd; }
};

inline SymmetryReport check_symmetries(const PotentialState& s) {
    const RationalFunction& u = s.u.value();
    return {u.is_real(), u.reflected() == -u};
}

/**
 * Exact square root of a polynomial up to a constant factor: returns monic S
 * with p = c S^2, or nullopt.
 */
inline std::optional<LaurentPolynomial> polynomial_sqrt(const LaurentPolynomial& p) {
    if (p.is_zero() || !p.is_polynomial() || p.degree() % 2 != 0) return std::nullopt;
    const GaussianRational inv = p.leading().inverse();
    const int m = p.degree() / 2;
    std::vector<GaussianRational> s(static_cast<std::size_t>(m + 1));
    s[m] = GaussianRational(1);
    const GaussianRational half = detail::q(1, 2);
    for (int k = 1; k <= m; ++k) {
        GaussianRational acc = p.coeff(2 * m - k) * inv;
        for (int j = m - k + 1; j < m; ++j) {
            int other = 2 * m - k - j;
            if (other > m - k && other < m && !s[j].is_zero() && !s[other].is_zero()) acc -= s[j] * s[other];
        }
        s[m - k] = acc * half;
    }
    LaurentPolynomial root;
    for (int j = 0; j <= m; ++j)
        if (!s[j].is_zero()) root.add_term(j, s[j]);
    if (root * root * p.leading() != p) return std::nullopt;
    return root;
}

/// The denominator of u with its zeta^k factor removed is a constant times a square.
inline bool denominator_is_square(const PotentialState& s) {
    const LaurentPolynomial& d = s.u.value().den();
    return polynomial_sqrt(d.shifted(-d.min_exp())).has_value();
}

}  // namespace p3d7::backlund
