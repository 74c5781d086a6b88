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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "../exact/evaluate.hpp"
#include "identities.hpp"
#include "series.hpp"
#include "state.hpp"

namespace p3d7::backlund {

/// expand_at_infinity(u_n) over `terms` exponents equals (1/2) zeta v from the ODE recurrence.
inline bool series_matches(const PotentialState& s, int terms = 20) {
    LaurentPolynomial lhs;
    for (const auto& [e, c] : exact::expand_at_infinity(s.u.value(), terms)) lhs.add_term(e, c);
    return lhs == series_from_ode(s.n, terms - 1).u_part();
}

inline bool inverse_pair_holds(const PotentialState& s) {
    return step_down(step_up(s)) == s && step_up(step_down(s)) == s;
}

enum class Component { none, u, E, P, Q };

/// Doubles one component; used to confirm the checks can fail.
inline PotentialState perturbed(PotentialState s, Component c) {
    const GaussianRational two(2);
    switch (c) {
        case Component::u: s.u = two * s.u; break;
        case Component::E: s.E = two * s.E; break;
        case Component::P: s.P = two * s.P; break;
        case Component::Q: s.Q = two * s.Q; break;
        case Component::none: break;
    }
    return s;
}

struct CheckResult {
    int n;
    std::string check;
    bool passed;
    std::string detail;  // exception text when a check could not be evaluated
};

struct ValidationReport {
    std::vector<CheckResult> results;
    bool passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
    std::optional<CheckResult> first_failure() const {
        for (const auto& r : results)
            if (!r.passed) return r;
        return std::nullopt;
    }
};

struct ValidationOptions {
    int n_max = 5;
    Component perturb = Component::none;
    int perturb_n = 0;
    int series_terms = 20;
};

/// Runs every exact identity for n = 0, 1, -1, ..., n_max, -n_max.
inline ValidationReport validate(Lattice& lattice, const ValidationOptions& opt) {
    if (opt.n_max < 0) throw DomainError("validate: n_max must be non-negative");
    ValidationReport rep;
    const RationalFunction i_const(GaussianRational::i());
    std::vector<int> order{0};
    for (int k = 1; k <= opt.n_max; ++k) order.insert(order.end(), {k, -k});
    for (int n : order) {
        PotentialState s = lattice.solution(n);
        if (opt.perturb != Component::none && n == opt.perturb_n) s = perturbed(std::move(s), opt.perturb);
        auto run = [&](const std::string& name, const std::function<bool()>& f) {
            try {
                rep.results.push_back({n, name, f(), ""});
            } catch (const std::exception& e) {
                rep.results.push_back({n, name, false, e.what()});
            }
        };
        run("ode_residual", [&] { return ode_residual(s).is_zero(); });
        run("lax_residuals", [&] {
            for (const auto& r : lax_residuals(s))
                if (!r.is_zero()) return false;
            return true;
        });
        run("b_constant", [&] { return b_constant(s) == i_const; });
        run("phi_prime_residual", [&] { return phi_prime_residual(s).is_zero(); });
        run("symmetry_conjugation", [&] { return check_symmetries(s).real_coefficients; });
        run("symmetry_reflection", [&] { return check_symmetries(s).odd; });
        run("series_cross_check", [&] { return series_matches(s, opt.series_terms); });
        run("denominator_square", [&] { return denominator_is_square(s); });
        run("inverse_pair", [&] { return inverse_pair_holds(s); });
    }
    return rep;
}

}  // namespace p3d7::backlund
