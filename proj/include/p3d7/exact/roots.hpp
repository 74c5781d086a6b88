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
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <type_traits>
#include <vector>

#include "big_float.hpp"
#include "evaluate.hpp"
#include "laurent_polynomial.hpp"

namespace p3d7::exact {

struct Root {
    BigComplex z;
    double residual = 0.0;  // |p(z)| at working precision
    double scale = 0.0;     // sum_j |c_j| |z|^j
    std::complex<double> approx() const { return z.to_complex(); }
};

namespace detail {

inline double magnitude(const std::complex<double>& z) { return std::abs(z); }
inline double magnitude(const BigComplex& z) { return z.abs_double(); }

// p(z)/p'(z); false when p(z) = 0. In double precision, points outside the
// unit disc use the reversed polynomial q(w) = w^m p(1/w), for which
// p/p' = z q / (m q - w q'), so nothing overflows for large |z|.
template <class C>
bool newton_ratio(const std::vector<C>& coeffs, const C& z, const C& one, C& ratio) {
    if constexpr (std::is_same_v<C, std::complex<double>>) {
        if (std::abs(z) > 1.0) {
            const C w = one / z;
            C q = coeffs.front(), dq = 0.0;
            for (std::size_t j = 1; j < coeffs.size(); ++j) {
                dq = dq * w + q;
                q = q * w + coeffs[j];
            }
            if (q == C(0)) return false;
            const double m = static_cast<double>(coeffs.size() - 1);
            ratio = z * q / (m * q - w * dq);
            return true;
        }
    }
    C p = coeffs.back();
    C dp = one - one;
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
        dp = dp * z + p;
        p = p * z + coeffs[j];
    }
    if (magnitude(p) == 0.0) return false;
    ratio = p / dp;
    return true;
}

// One Gauss-Seidel sweep of the Aberth-Ehrlich iteration over `roots`.
// Returns the largest correction relative to max(|z_k|, floor).
template <class C>
double aberth_sweep(const std::vector<C>& coeffs, std::vector<C>& roots, const C& one, double floor) {
    double worst = 0.0;
    const std::size_t m = roots.size();
    for (std::size_t k = 0; k < m; ++k) {
        C ratio;
        if (!newton_ratio(coeffs, roots[k], one, ratio)) continue;
        C sum = one - one;
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) sum = sum + one / (roots[k] - roots[j]);
        C w = ratio / (one - ratio * sum);
        roots[k] = roots[k] - w;
        worst = std::max(worst, magnitude(w) / std::max(magnitude(roots[k]), floor));
    }
    return worst;
}


inline double log_abs(const mpq_class& q) {
    long en, ed;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log(std::abs(mn / md)) + static_cast<double>(en - ed) * std::numbers::ln2;
}

inline double log_abs(const GaussianRational& c) {
    if (c.is_zero()) return -std::numeric_limits<double>::infinity();
    if (c.is_real()) return log_abs(c.re());
    if (c.is_imaginary()) return log_abs(c.im());
    double a = log_abs(c.re()), b = log_abs(c.im());
    double hi = std::max(a, b);
    return hi + 0.5 * std::log1p(std::exp(2 * (std::min(a, b) - hi)));
}

// Starting points on concentric circles whose radii come from the upper
// convex hull of (j, log|c_j|), the Newton polygon of the coefficients.
inline std::vector<std::complex<double>> initial_guesses(const std::vector<GaussianRational>& c) {
    const int m = static_cast<int>(c.size()) - 1;
    std::vector<std::pair<int, double>> pts;
    for (int j = 0; j <= m; ++j)
        if (!c[j].is_zero()) pts.emplace_back(j, log_abs(c[j]));
    std::vector<std::pair<int, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            double cross = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<std::complex<double>> z;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const int ja = hull[k].first, jb = hull[k + 1].first, cnt = jb - ja;
        const double r = std::exp((hull[k].second - hull[k + 1].second) / cnt);
        const double phase = 0.7 * static_cast<double>(k) + 0.4;
        for (int t = 0; t < cnt; ++t) z.push_back(std::polar(r, 2.0 * std::numbers::pi * (t + 0.25) / cnt + phase));
    }
    return z;
}

/// Yun's square-free decomposition of a polynomial with nonzero constant term: pairs (S_k, k), S_k monic.
inline std::vector<std::pair<LaurentPolynomial, int>> squarefree_factors(const LaurentPolynomial& f) {
    std::vector<std::pair<LaurentPolynomial, int>> out;
    const LaurentPolynomial df = f.derivative();
    LaurentPolynomial a = gcd(f, df);
    if (a.is_constant()) {
        out.emplace_back(f / f.leading(), 1);
        return out;
    }
    LaurentPolynomial b = exact_divide(f, a);
    LaurentPolynomial d = exact_divide(df, a) - b.derivative();
    for (int k = 1; !b.is_constant(); ++k) {
        a = gcd(b, d);
        if (!a.is_constant()) out.emplace_back(a, k);
        b = exact_divide(b, a);
        d = exact_divide(d, a) - b.derivative();
    }
    return out;
}

/// Simple roots of a square-free polynomial q with q(0) != 0.
inline std::vector<BigComplex> simple_roots(const LaurentPolynomial& q, mpfr_prec_t precision, int max_iterations) {
    const int m = q.degree();
    GaussianRational lead_inv = q.leading().inverse();
    std::vector<GaussianRational> monic(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) monic[j] = q.coeff(j) * lead_inv;

    std::vector<std::complex<double>> cd(monic.size());
    bool finite = true;
    for (std::size_t j = 0; j < monic.size(); ++j) {
        cd[j] = {monic[j].re().get_d(), monic[j].im().get_d()};
        finite = finite && std::isfinite(cd[j].real()) && std::isfinite(cd[j].imag());
    }
    std::vector<std::complex<double>> zd = initial_guesses(monic);
    double radius = 0.0;
    for (const auto& z : zd) radius = std::max(radius, std::abs(z));
    if (finite) {
        std::vector<std::complex<double>> backup = zd;
        for (int it = 0; it < 500; ++it) {
            double w = aberth_sweep(cd, zd, std::complex<double>(1.0), 1e-300);
            bool ok = std::isfinite(w) && std::all_of(zd.begin(), zd.end(), [](const std::complex<double>& z) {
                          return std::isfinite(z.real()) && std::isfinite(z.imag());
                      });
            if (!ok) {
                zd = backup;
                break;
            }
            if (w < 1e-14) break;
        }
    }

    const mpfr_prec_t wp = precision + 32;
    std::vector<BigComplex> cb, zb;
    for (const auto& c : monic) cb.push_back(to_big(c, wp));
    for (const auto& z : zd) zb.emplace_back(z, wp);
    BigComplex one(std::complex<double>(1.0, 0.0), wp);
    const int bits = static_cast<int>(std::min<mpfr_prec_t>(precision, 1000));
    const double tol = std::ldexp(1.0, 4 - bits);
    const double floor = std::max(radius, 1.0) * std::ldexp(1.0, -40);
    // Corrections below 2^(-precision/2) that stop shrinking have hit the
    // rounding floor set by the conditioning of the roots.
    const double loose = std::ldexp(1.0, -bits / 2);
    bool converged = false;
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < max_iterations && !converged; ++it) {
        double w = aberth_sweep(cb, zb, one, floor);
        converged = w < tol || (w < loose && w > 0.5 * prev);
        prev = w;
    }
    if (!converged) {
        std::vector<std::complex<double>> partial;
        for (const auto& z : zb) partial.push_back(z.to_complex());
        throw RootConvergenceError("complex_roots: Aberth iteration did not converge", partial);
    }
    return zb;
}

}  // namespace detail

/**
 * All complex roots of an ordinary polynomial, with multiplicity.
 *
 * Powers of zeta are stripped exactly and the rest is split into square-free
 * factors by exact gcds. Each factor is solved by Aberth-Ehrlich in double
 * precision and polished in `precision`-bit MPFR arithmetic. Residuals are
 * measured on the original polynomial. Roots are sorted by (real, imaginary)
 * part. Throws RootConvergenceError carrying the last iterates if the polish
 * stalls.
 */
inline std::vector<Root> complex_roots(const LaurentPolynomial& poly, mpfr_prec_t precision = 256,
                                       int max_iterations = 400) {
    if (poly.is_zero()) throw DomainError("complex_roots: zero polynomial");
    if (!poly.is_polynomial()) throw DomainError("complex_roots: negative exponents");
    std::vector<Root> out;
    for (int k = 0; k < poly.min_exp(); ++k) out.push_back({BigComplex(precision), 0.0, 0.0});
    LaurentPolynomial q = poly.shifted(-poly.min_exp());
    if (q.degree() > 0) {
        const mpfr_prec_t wp = precision + 32;
        for (const auto& [factor, mult] : detail::squarefree_factors(q)) {
            for (auto& z : detail::simple_roots(factor, precision, max_iterations)) {
                auto h = detail::horner(q, z, wp);
                for (int k = 0; k < mult; ++k) out.push_back({z, h.value.abs_double(), h.magnitude_sum});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        auto x = a.approx(), y = b.approx();
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return out;
}

}  // namespace p3d7::exact
