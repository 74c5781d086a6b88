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
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "spectral.hpp"

namespace p3d7::asymptotics {

/// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
inline const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int k) {
    if (k < 1) throw DomainError("gauss_legendre: need at least one node");
    static std::mutex mu;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<double> x(k), w(k);
    const unsigned n = static_cast<unsigned>(k);
    for (int i = 0; i < k; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
        double dp = 1;
        for (int iter = 0; iter < 100; ++iter) {
            double p = std::legendre(n, t);
            dp = k * (t * p - std::legendre(n - 1, t)) / (t * t - 1);
            double dt = p / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) break;
        }
        dp = k * (t * std::legendre(n, t) - std::legendre(n - 1, t)) / (t * t - 1);
        x[i] = t;
        w[i] = 2 / ((1 - t * t) * dp * dp);
    }
    return cache.emplace(k, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace detail {

inline bool on_h_cut(cplx eta, double s) {
    double scale = std::max(1.0, std::abs(s));
    return std::abs(eta.real()) <= 1e-14 * scale && eta.imag() <= 1e-14 * scale && eta.imag() >= s - 1e-14 * scale;
}

// Integral of f along the segment [A, B] with the map t = (1 - cos(pi theta))/2,
// which absorbs inverse square-root endpoint singularities.
template <class F>
cplx segment_integral(F&& f, cplx A, cplx B, int nodes) {
    if (std::abs(B - A) == 0) return 0;
    const auto& [x, w] = gauss_legendre(nodes);
    cplx sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double th = (x[i] + 1) / 2;
        double t = (1 - std::cos(std::numbers::pi * th)) / 2;
        double dt = std::numbers::pi / 2 * std::sin(std::numbers::pi * th);
        sum += f(A + (B - A) * t) * dt * (w[i] / 2);
    }
    return sum * (B - A);
}

}  // namespace detail

/**
 * h(eta) = (m - s + 1) (m - s)^{1/2} m^{-1/2} + (1/2) log((sqrt(m-s) - sqrt m)/(sqrt(m-s) + sqrt m))
 * with m = -i eta and principal branches, for a given spectral root s < 0.
 */
inline cplx h_eval_s(cplx eta, double s) {
    if (detail::on_h_cut(eta, s))
        throw BranchError("h_eval: eta lies on the cut [is, 0]; use a one-sided limit");
    const cplx m = cplx(0, -1) * eta;
    const cplx a = std::sqrt(m - s), b = std::sqrt(m);
    return (m - s + 1.0) * a / b + 0.5 * std::log((a - b) / (a + b));
}

inline cplx h_eval(cplx eta, double y) { return h_eval_s(eta, spectral(y).s); }

/// dh/deta = -(eta - i d)(-i eta)^{-3/2}(-i eta - s)^{1/2}.
inline cplx h_prime(cplx eta, double y) {
    const SpectralData sd = spectral(y);
    const cplx m = cplx(0, -1) * eta;
    return -(eta - cplx(0, sd.d)) * std::pow(m, -1.5) * std::sqrt(m - sd.s);
}

/// Re h(i d(y), y), positive above the critical parameter.
inline double re_h_at_double_point(double y) {
    const SpectralData sd = spectral(y);
    return h_eval_s(cplx(0, sd.d), sd.s).real();
}

/// Root of y -> Re h(i d(y), y) on (0.1, 1) by bisection.
inline double critical_y(double tol = 1e-10) {
    if (!(tol > 0)) throw DomainError("critical_y: tolerance must be positive");
    double lo = 0.1, hi = 1.0;
    double flo = re_h_at_double_point(lo), fhi = re_h_at_double_point(hi);
    if (!(flo < 0 && fhi > 0)) throw NumericalError("critical_y: no sign change on (0.1, 1)");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (re_h_at_double_point(mid) > 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

struct LOptions {
    int nodes = 200;
    double tolerance = 1e-9;  // allowed |L_K - L_2K|
};

/// L(s) from the integrated-by-parts pair of straight-line integrals.
inline double L_of_s(cplx s, const LOptions& opt = {}) {
    if (s == cplx(0)) throw DomainError("L_of_s: s = 0 is excluded");
    const cplx I(0, 1);
    const cplx d = (1.0 - s) / 2.0;
    auto g = [&](cplx e) { return 2.0 + (e - I * d) / (e - I * s); };
    auto eval = [&](int k) {
        cplx first = detail::segment_integral([&](cplx e) { return g(e) * std::sqrt(-(e - I * s) / e); }, I * s, 0.0, k);
        cplx second = detail::segment_integral([&](cplx e) { return g(e) * std::sqrt((e - I * s) / e); }, 0.0, I * d, k);
        return (first - I * second).real();
    };
    const double a = eval(opt.nodes), b = eval(2 * opt.nodes);
    if (!std::isfinite(a) || !std::isfinite(b) || std::abs(a - b) > opt.tolerance * std::max(1.0, std::abs(b)))
        throw NumericalError("L_of_s: quadrature did not converge at s = " + std::to_string(s.real()) + "+" +
                             std::to_string(s.imag()) + "i");
    return b;
}

}  // namespace p3d7::asymptotics
