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
#include <complex>
#include <sstream>
#include <utility>
#include <vector>

#include "big_float.hpp"
#include "rational_function.hpp"

namespace p3d7::exact {

/// Value of a rational function at a point, with a running error bound.
struct EvalResult {
    BigComplex value;
    double error_bound = 0.0;
    std::complex<double> approx() const { return value.to_complex(); }
};

namespace detail {

struct HornerValue {
    BigComplex value;
    double magnitude_sum = 0.0;  // sum_j |c_j| |z|^j, the scale of the rounding error
};

inline BigComplex to_big(const GaussianRational& c, mpfr_prec_t prec) {
    return {BigFloat(c.re(), prec), BigFloat(c.im(), prec)};
}

inline HornerValue horner(const LaurentPolynomial& p, const BigComplex& z, mpfr_prec_t prec) {
    HornerValue out{BigComplex(prec), 0.0};
    if (p.is_zero()) return out;
    const auto& terms = p.terms();
    double az = z.abs_double();
    auto it = terms.rbegin();
    for (int e = p.max_exp(); e >= p.min_exp(); --e) {
        out.value = out.value * z;
        out.magnitude_sum *= az;
        if (it != terms.rend() && it->exp == e) {
            out.value = out.value + to_big(it->coeff, prec);
            out.magnitude_sum += std::hypot(it->coeff.re().get_d(), it->coeff.im().get_d());
            ++it;
        }
    }
    for (int e = p.min_exp(); e > 0; --e) out.value = out.value * z;
    out.magnitude_sum *= std::pow(az, p.min_exp());
    return out;
}

}  // namespace detail

/**
 * Evaluates num(z)/den(z) by Horner's rule in `prec`-bit complex arithmetic.
 *
 * The bound follows the usual a-priori Horner estimate: each polynomial is
 * off by at most (4 deg + 6) u sum|c_j||z|^j with u = 2^(1-prec), and the
 * quotient error is propagated to first order. Throws PoleError when the
 * denominator cannot be distinguished from zero.
 */
inline EvalResult eval_at(const RationalFunction& r, const BigComplex& z, mpfr_prec_t prec = 256) {
    const double u = std::ldexp(1.0, 1 - static_cast<int>(std::min<mpfr_prec_t>(prec, 1000)));
    auto n = detail::horner(r.num(), z, prec);
    auto d = detail::horner(r.den(), z, prec);
    double en = (4.0 * std::max(r.num().degree(), 0) + 6.0) * u * n.magnitude_sum;
    double ed = (4.0 * std::max(r.den().degree(), 0) + 6.0) * u * d.magnitude_sum;
    double ad = d.value.abs_double();
    if (!(ad > 2.0 * ed)) {
        std::ostringstream os;
        os << "eval_at: pole at z = " << z.to_complex();
        throw PoleError(os.str(), z.to_complex());
    }
    EvalResult out{n.value / d.value, 0.0};
    double q = out.value.abs_double();
    out.error_bound = (en + q * ed) / (ad - ed) + 2.0 * u * q;
    return out;
}

inline EvalResult eval_at(const RationalFunction& r, std::complex<double> z, mpfr_prec_t prec = 256) {
    return eval_at(r, BigComplex(z, prec), prec);
}

/**
 * Descending Laurent expansion of r at zeta = infinity over `terms`
 * consecutive exponents starting from the leading one. Zero coefficients are
 * omitted from the result.
 */
inline std::vector<std::pair<int, GaussianRational>> expand_at_infinity(const RationalFunction& r, int terms) {
    if (r.is_zero()) throw DomainError("expand_at_infinity: zero function");
    const LaurentPolynomial& n = r.num();
    const LaurentPolynomial& d = r.den();
    int dn = n.max_exp(), dd = d.max_exp();
    // reversed coefficients: n(zeta) = zeta^dn * sum_j n_{dn-j} zeta^-j
    std::vector<GaussianRational> nr(static_cast<std::size_t>(terms)), dr(static_cast<std::size_t>(terms));
    for (int j = 0; j < terms; ++j) {
        nr[j] = n.coeff(dn - j);
        dr[j] = d.coeff(dd - j);
    }
    GaussianRational inv0 = dr[0].inverse();
    std::vector<GaussianRational> q(static_cast<std::size_t>(terms));
    std::vector<std::pair<int, GaussianRational>> out;
    for (int k = 0; k < terms; ++k) {
        GaussianRational acc = nr[k];
        for (int j = 1; j <= k; ++j)
            if (!dr[j].is_zero() && !q[k - j].is_zero()) acc -= dr[j] * q[k - j];
        q[k] = acc * inv0;
        if (!q[k].is_zero()) out.emplace_back(dn - dd - k, q[k]);
    }
    return out;
}

}  // namespace p3d7::exact
