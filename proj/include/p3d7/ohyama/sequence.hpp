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
#include <string>
#include <vector>

#include "../asymptotics/boundary.hpp"
#include "../backlund/state.hpp"
#include "../exact/roots.hpp"

namespace p3d7::ohyama {

using exact::LaurentPolynomial;
using exact::RationalFunction;

/// R_0..R_N with u_n = R_{n+1} R_{n-1} / R_n^2, from the seeds R_0 = 1, R_1 = zeta.
struct OhyamaSequence {
    std::vector<LaurentPolynomial> R;
    LaurentPolynomial seed0{1};
    LaurentPolynomial seed1{LaurentPolynomial::zeta(1)};

    int n_max() const { return static_cast<int>(R.size()) - 1; }
};

/**
 * Builds R_{n+1} = u_n R_n^2 / R_{n-1} for n = 1..n_max-1. Every step must
 * divide exactly and leave an ordinary polynomial; otherwise a
 * DivisibilityError reports the index that failed.
 */
inline OhyamaSequence ohyama_sequence(int n_max, backlund::Lattice& lattice) {
    if (n_max < 2) throw DomainError("ohyama_sequence: need n_max >= 2");
    OhyamaSequence seq;
    seq.R = {seq.seed0, seq.seed1};
    for (int n = 1; n < n_max; ++n) {
        const RationalFunction& u = lattice.solution(n).u.value();
        RationalFunction t = u * RationalFunction(seq.R[n] * seq.R[n]);
        if (!t.is_laurent_polynomial())
            throw DivisibilityError("ohyama_sequence: u_" + std::to_string(n) + " R_" + std::to_string(n) +
                                    "^2 is not a polynomial");
        auto next = exact::try_divide(t.as_laurent(), seq.R[n - 1]);
        if (!next || (!next->is_zero() && next->min_exp() < 0))
            throw DivisibilityError("ohyama_sequence: R_" + std::to_string(n - 1) + " does not divide u_" +
                                    std::to_string(n) + " R_" + std::to_string(n) + "^2");
        seq.R.push_back(std::move(*next));
    }
    return seq;
}

/// u_n R_n^2 == R_{n+1} R_{n-1} as rational functions.
inline bool product_identity_holds(const OhyamaSequence& seq, int n, backlund::Lattice& lattice) {
    if (n < 1 || n + 1 > seq.n_max()) throw DomainError("product_identity_holds: n out of range");
    const RationalFunction lhs = lattice.solution(n).u.value() * RationalFunction(seq.R[n] * seq.R[n]);
    return lhs == RationalFunction(seq.R[n + 1] * seq.R[n - 1]);
}

struct RootMap {
    int n = 0;
    std::vector<std::complex<double>> roots;         // zeta-plane
    std::vector<std::complex<double>> scaled_roots;  // Y = zeta / sqrt(n)
    std::vector<double> residuals;
    std::vector<double> scales;
};

/// Zeros of R_n, ordered by (re, im), with their images Y = zeta n^{-1/2}.
inline RootMap root_map(const OhyamaSequence& seq, int n, mpfr_prec_t precision = 256) {
    if (n < 1 || n > seq.n_max()) throw DomainError("root_map: n out of range");
    RootMap map;
    map.n = n;
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    for (const auto& r : exact::complex_roots(seq.R[n], precision)) {
        map.roots.push_back(r.approx());
        map.scaled_roots.push_back(r.approx() * inv);
        map.residuals.push_back(r.residual);
        map.scales.push_back(r.scale);
    }
    return map;
}

struct ContainmentReport {
    int n = 0;
    double dilation = 1;
    int inside = 0;
    int outside = 0;
    double max_abs_Y = 0;
    bool all_inside() const { return outside == 0; }
};

inline ContainmentReport bowtie_containment(const RootMap& map, const asymptotics::BoundaryCurve& curve, double dilation) {
    ContainmentReport rep;
    rep.n = map.n;
    rep.dilation = dilation;
    for (auto Y : map.scaled_roots) {
        (asymptotics::in_bowtie(Y, curve, dilation) ? rep.inside : rep.outside)++;
        rep.max_abs_Y = std::max(rep.max_abs_Y, std::abs(Y));
    }
    return rep;
}

}  // namespace p3d7::ohyama
