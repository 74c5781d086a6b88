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

/**
 * @file int_poly.hpp
 * @brief Dense univariate polynomials over Z and the fast kernels behind the
 *        exact field: Kronecker-substitution multiplication, exact division,
 *        and gcd.
 *
 * Coefficients are stored in ascending degree order. The zero polynomial is
 * the empty vector and no representation carries a zero leading coefficient.
 *
 * Multiplication and division evaluate at 2^k for a k large enough that the
 * coefficients of the result can be read back as balanced base-2^k digits;
 * GMP's integer FFT then does the heavy lifting.
 *
 * The gcd first computes the gcd degree modulo a word-size prime. That
 * degree bounds the true one, so a modular degree of zero certifies
 * coprimality without touching big integers. Otherwise a heuristic gcd at
 * 2^k is tried and certified by exact division; primitive pseudo-remainder
 * sequences are the last resort.
 */

#include <gmp.h>
#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace p3d7::exact::detail {

using IntPoly = std::vector<mpz_class>;

inline void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline std::size_t max_bits(const IntPoly& p) {
    std::size_t b = 0;
    for (const auto& c : p)
        if (sgn(c) != 0) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
    return b;
}

inline std::size_t bit_length(std::size_t n) {
    std::size_t b = 0;
    while (n) {
        ++b;
        n >>= 1;
    }
    return b;
}

inline mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        if (sgn(c) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline IntPoly primitive_part(IntPoly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class g = content(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

inline std::size_t lowest_nonzero(const IntPoly& p) {
    std::size_t i = 0;
    while (i < p.size() && sgn(p[i]) == 0) ++i;
    return i;
}

inline IntPoly shift_down(const IntPoly& p, std::size_t k) {
    if (k >= p.size()) return {};
    return IntPoly(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
}

inline IntPoly shift_up(const IntPoly& p, std::size_t k) {
    if (p.empty() || k == 0) return p;
    IntPoly r(k, mpz_class(0));
    r.insert(r.end(), p.begin(), p.end());
    return r;
}

// ---------------------------------------------------------------------------
// Kronecker substitution

inline mpz_class pack_range(const IntPoly& p, std::size_t lo, std::size_t hi, mp_bitcnt_t k) {
    if (hi - lo <= 16) {
        mpz_class acc = 0;
        for (std::size_t j = hi; j-- > lo;) {
            acc <<= k;
            acc += p[j];
        }
        return acc;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    mpz_class low = pack_range(p, lo, mid, k);
    mpz_class high = pack_range(p, mid, hi, k);
    high <<= k * (mid - lo);
    high += low;
    return high;
}

/// p(2^k).
inline mpz_class pack(const IntPoly& p, mp_bitcnt_t k) { return p.empty() ? mpz_class(0) : pack_range(p, 0, p.size(), k); }

// Writes `count` balanced base-2^k digits of v into out[offset..]; returns
// the part of v above the last digit. Requires every digit to have absolute
// value below 2^(k-2) so balanced residues of blocks coincide with the sums
// of their digits.
inline mpz_class unpack_range(mpz_class v, mp_bitcnt_t k, std::size_t count, IntPoly& out, std::size_t offset) {
    if (count <= 16) {
        mpz_class r;
        for (std::size_t i = 0; i < count; ++i) {
            mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
            if (mpz_tstbit(r.get_mpz_t(), k - 1)) {
                mpz_class m = 1;
                m <<= k;
                r -= m;
            }
            out[offset + i] = r;
            v -= r;
            mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), k);
        }
        return v;
    }
    std::size_t m = count / 2;
    mp_bitcnt_t bits = k * m;
    mpz_class low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), v.get_mpz_t(), bits);
    if (mpz_tstbit(low.get_mpz_t(), bits - 1)) {
        mpz_class top = 1;
        top <<= bits;
        low -= top;
    }
    v -= low;
    mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    mpz_class rest_low = unpack_range(std::move(low), k, m, out, offset);
    // rest_low is zero whenever the digit bound holds; fold it upward otherwise
    v += rest_low;
    return unpack_range(std::move(v), k, count - m, out, offset + m);
}

inline IntPoly unpack(const mpz_class& v, mp_bitcnt_t k, std::size_t count, mpz_class* overflow = nullptr) {
    IntPoly out(count);
    mpz_class rest = unpack_range(v, k, count, out, 0);
    if (overflow) *overflow = rest;
    trim(out);
    return out;
}

inline IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= 12) return mul_schoolbook(a, b);
    mp_bitcnt_t k = max_bits(a) + max_bits(b) + bit_length(std::min(a.size(), b.size())) + 3;
    mpz_class prod = pack(a, k) * pack(b, k);
    return unpack(prod, k, a.size() + b.size() - 1);
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline IntPoly scale(const IntPoly& a, const mpz_class& s) {
    if (sgn(s) == 0) return {};
    IntPoly r(a);
    for (auto& c : r) c *= s;
    return r;
}

/// Quotient q with a = q * b over Z, if one exists. b must be primitive.
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (a.empty()) return IntPoly{};
    if (a.size() < b.size()) return std::nullopt;
    if (b.size() == 1) {
        if (b[0] == 1) return a;
        if (b[0] == -1) return scale(a, mpz_class(-1));
        IntPoly q(a);
        for (auto& c : q) {
            if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
        }
        return q;
    }
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    if (sgn(b[0]) != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
    std::size_t qdeg = a.size() - b.size();
    if (std::min(qdeg + 1, b.size()) <= 8) {
        // schoolbook from the top
        IntPoly r(a), q(qdeg + 1);
        for (std::size_t i = qdeg + 1; i-- > 0;) {
            mpz_class& top = r[i + b.size() - 1];
            if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
            mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
            if (sgn(q[i]) == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
        }
        for (const auto& c : r)
            if (sgn(c) != 0) return std::nullopt;
        trim(q);
        return q;
    }
    // Landau-Mignotte: a factor q of a has |q|_inf <= 2^deg(q) |a|_2.
    mp_bitcnt_t k = max_bits(a) + qdeg + bit_length(a.size()) + 4;
    mpz_class av = pack(a, k), bv = pack(b, k);
    if (!mpz_divisible_p(av.get_mpz_t(), bv.get_mpz_t())) return std::nullopt;
    mpz_class qv;
    mpz_divexact(qv.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    mpz_class overflow;
    IntPoly q = unpack(qv, k, qdeg + 1, &overflow);
    if (sgn(overflow) != 0) return std::nullopt;
    if (mul(q, b) != a) return std::nullopt;
    return q;
}

// ---------------------------------------------------------------------------
// Word-size modular arithmetic, used to bound gcd degrees.

struct ModPrime {
    std::uint64_t p;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

inline std::uint64_t nth_modular_prime(unsigned i) {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> out;
        mpz_class q;
        for (unsigned j = 0; j < 8; ++j) {
            q = 1;
            q <<= 62;
            q += mpz_class(j) * mpz_class(1099511627776.0);  // 2^40 spacing
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
            out.push_back(mpz_get_ui(q.get_mpz_t()));
        }
        return out;
    }();
    return primes[i % primes.size()];
}

inline std::vector<std::uint64_t> reduce_mod(const IntPoly& a, const ModPrime& m) {
    std::vector<std::uint64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), m.p);
    return r;
}

inline std::size_t mod_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, const ModPrime& m) {
    auto trim_mod = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim_mod(a);
    trim_mod(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::uint64_t inv_lead = m.inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t f = m.mul(a.back(), inv_lead);
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = m.sub(a[off + j], m.mul(f, b[j]));
            a.pop_back();
            trim_mod(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

/// Upper bound on deg gcd(a, b) over Q, exact for all but finitely many primes.
inline std::size_t gcd_degree_bound(const IntPoly& a, const IntPoly& b) {
    for (unsigned i = 0; i < 8; ++i) {
        ModPrime m{nth_modular_prime(i)};
        if (mpz_fdiv_ui(a.back().get_mpz_t(), m.p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), m.p) == 0) continue;
        return mod_gcd_degree(reduce_mod(a, m), reduce_mod(b, m), m);
    }
    return std::min(a.size(), b.size()) - 1;
}

// ---------------------------------------------------------------------------
// gcd

inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class la = a.back();
        std::size_t off = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(a[off + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
        a = primitive_part(std::move(a));
    }
    return a;
}

inline IntPoly gcd_prs(IntPoly a, IntPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = primitive_part(pseudo_remainder(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline IntPoly gcd(IntPoly a, IntPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::size_t za = lowest_nonzero(a), zb = lowest_nonzero(b);
    std::size_t z = std::min(za, zb);
    a = shift_down(a, za);
    b = shift_down(b, zb);
    IntPoly unit{mpz_class(1)};
    if (a.size() == 1 || b.size() == 1) return shift_up(unit, z);

    std::size_t dg = gcd_degree_bound(a, b);
    if (dg == 0) return shift_up(unit, z);
    if (a == b) return shift_up(a, z);

    std::size_t base = std::min(max_bits(a), max_bits(b)) + dg + bit_length(std::max(a.size(), b.size())) + 8;
    for (unsigned attempt = 0; attempt < 4; ++attempt) {
        mp_bitcnt_t k = base + 48 * attempt;
        mpz_class av = pack(a, k), bv = pack(b, k), g;
        mpz_gcd(g.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
        mpz_class overflow;
        IntPoly cand = unpack(g, k, dg + 1, &overflow);
        if (sgn(overflow) != 0) continue;
        cand = primitive_part(std::move(cand));
        // 2^k exceeds twice the smaller coefficient norm, so a reconstructed
        // common divisor is the gcd itself
        if (cand.size() < 2) return shift_up(unit, z);
        if (divide_exact(a, cand) && divide_exact(b, cand)) return shift_up(cand, z);
    }
    return shift_up(gcd_prs(std::move(a), std::move(b)), z);
}

}  // namespace p3d7::exact::detail
