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
#include <vector>

#include "../backlund/state.hpp"
#include "../exact/evaluate.hpp"
#include "branch.hpp"
#include "h_function.hpp"

namespace p3d7::asymptotics {

struct ComparisonRow {
    int n = 0;
    cplx exact;       // n^{-1/2} u_n(n^{1/2} Y)
    cplx asymptotic;  // U(Y)
    double abs_error = 0;
    double eval_error_bound = 0;  // rounding bound of the exact column
};

struct ComparisonTable {
    cplx Y;
    cplx U;
    cplx s;
    std::vector<ComparisonRow> rows;
};

/// True if Y lies on the real axis inside the bow-tie, |Y|^3 <= y_c.
inline bool is_subcritical_real(cplx Y) {
    return Y.imag() == 0 && std::abs(Y.real()) * std::abs(Y.real()) * std::abs(Y.real()) <= critical_y(1e-12);
}

/**
 * Exact u_n at zeta = n^{1/2} Y against the equilibrium branch U(Y).
 * The exact column is evaluated in `prec`-bit arithmetic; n^{1/2} is formed
 * at that precision, Y itself is taken as exact.
 */
inline ComparisonTable compare_exact_vs_asymptotic(cplx Y, const std::vector<int>& n_list, backlund::Lattice& lattice,
                                                   mpfr_prec_t prec = 256) {
    if (is_subcritical_real(Y))
        throw DomainError("compare: real Y with Y^3 below the critical value lies inside the bow-tie");
    ComparisonTable table;
    table.Y = Y;
    const BranchValue bv = branch_at(Y);
    table.U = bv.U;
    table.s = bv.s;
    for (int n : n_list) {
        if (n < 1) throw DomainError("compare: n must be positive");
        const auto& state = lattice.solution(n);
        exact::BigFloat root_n = sqrt(exact::BigFloat(static_cast<double>(n), prec));
        exact::BigComplex zeta{root_n * exact::BigFloat(Y.real(), prec), root_n * exact::BigFloat(Y.imag(), prec)};
        auto ev = exact::eval_at(state.u.value(), zeta, prec);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        ComparisonRow row;
        row.n = n;
        row.exact = ev.approx() * scale;
        row.asymptotic = bv.U;
        row.abs_error = std::abs(row.exact - row.asymptotic);
        row.eval_error_bound = ev.error_bound * scale;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace p3d7::asymptotics
