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

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "../errors.hpp"
#include "../exact/weighted_rational.hpp"

namespace p3d7::backlund {

using exact::GaussianRational;
using exact::LaurentPolynomial;
using exact::RationalFunction;
using exact::WeightedRational;

/**
 * Algebraic solution data at index n, where a = -i n and b = i.
 *
 * Each component is the actual potential written as value * exp(3 w zeta^2):
 * u has weight 0, e^{i phi} is E with weight -1, p is P with weight -1 and
 * q is Q with weight +1.
 */
struct PotentialState {
    int n = 0;
    WeightedRational u, E, P, Q;

    friend bool operator==(const PotentialState& a, const PotentialState& b) {
        return a.n == b.n && a.u == b.u && a.E == b.E && a.P == b.P && a.Q == b.Q;
    }
};

namespace detail {

inline WeightedRational x_power(int k) { return {RationalFunction::zeta(3 * k), 0}; }
inline GaussianRational q(long num, long den = 1) { return GaussianRational::fraction(num, den); }

inline void require_nonzero_u(const PotentialState& s, const char* where) {
    if (s.u.is_zero()) throw DomainError(std::string(where) + ": u vanishes identically");
}

}  // namespace detail

/// n = 0: u = zeta/2, E = 1, P = -(zeta^-3 + zeta^-5/3), Q = zeta^-3 - zeta^-5/3.
inline PotentialState seed_state() {
    using exact::LaurentPolynomial;
    PotentialState s;
    s.n = 0;
    s.u = {RationalFunction(LaurentPolynomial::monomial(detail::q(1, 2), 1)), 0};
    s.E = {RationalFunction(1), -1};
    s.P = {RationalFunction(LaurentPolynomial({{-3, detail::q(-1)}, {-5, detail::q(-1, 3)}})), -1};
    s.Q = {RationalFunction(LaurentPolynomial({{-3, detail::q(1)}, {-5, detail::q(-1, 3)}})), 1};
    return s;
}

// With b = i the factor i*b in both transformations is -1.

/// Index n -> n + 1.
inline PotentialState step_up(const PotentialState& s) {
    detail::require_nonzero_u(s, "step_up");
    const auto x = detail::x_power(1), x2 = detail::x_power(2);
    const auto& u = s.u;
    const auto& E = s.E;
    const auto& Q = s.Q;
    const auto u2 = u * u;
    const auto EQ = E * Q;
    const auto pre = EQ / u2;  // E Q / u^2

    PotentialState t;
    t.n = s.n + 1;
    t.u = detail::q(1, 8) * (x2 * pre);
    t.E = detail::q(8) * (u / Q);
    t.P = -(x2 * E * pre);
    const auto bracket = detail::q(1, 32) * (x * pre * Q) + detail::q(s.n + 1, 8) * (Q / (x * u)) -
                         detail::q(1, 2) * (u / (E * x2));
    t.Q = detail::q(-1, 2) * (x * pre * bracket);
    return t;
}

/// Index n -> n - 1.
inline PotentialState step_down(const PotentialState& s) {
    detail::require_nonzero_u(s, "step_down");
    const auto x = detail::x_power(1), x2 = detail::x_power(2);
    const auto& u = s.u;
    const auto& E = s.E;
    const auto& P = s.P;
    const auto u2 = u * u;
    const auto PE = P / E;
    const auto pre = PE / u2;  // (P / E) / u^2

    PotentialState t;
    t.n = s.n - 1;
    t.u = detail::q(-1, 8) * (x2 * pre);
    t.E = detail::q(-1, 8) * (P / u);
    const auto bracket = detail::q(1, 32) * (x * pre * P) - detail::q(s.n - 1, 8) * (P / (x * u)) -
                         detail::q(1, 2) * (E * u / x2);
    t.P = detail::q(-1, 2) * (x * pre * bracket);
    t.Q = -(x2 * pre / E);
    return t;
}

/**
 * Memoized lattice of states reachable from the seed, |n| <= max_abs_n.
 * Thread-safe; returned references stay valid for the lattice's lifetime.
 */
class Lattice {
   public:
    static constexpr int kDefaultMaxAbsN = 40;

    explicit Lattice(int max_abs_n = kDefaultMaxAbsN) : max_abs_n_(max_abs_n) { states_.emplace(0, seed_state()); }

    int max_abs_n() const noexcept { return max_abs_n_; }

    const PotentialState& solution(int n) {
        if (std::abs(n) > max_abs_n_)
            throw BudgetError("solution: |n| = " + std::to_string(std::abs(n)) + " exceeds the configured maximum " +
                              std::to_string(max_abs_n_));
        std::lock_guard<std::mutex> lock(mu_);
        auto it = states_.find(n);
        if (it != states_.end()) return it->second;
        int step = n > 0 ? 1 : -1;
        int k = 0;
        while (states_.count(k + step)) k += step;
        while (k != n) {
            const PotentialState& cur = states_.at(k);
            states_.emplace(k + step, step > 0 ? step_up(cur) : step_down(cur));
            k += step;
        }
        return states_.at(n);
    }

   private:
    int max_abs_n_;
    std::mutex mu_;
    std::map<int, PotentialState> states_;
};

}  // namespace p3d7::backlund
