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
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gaussian_rational.hpp"
#include "int_poly.hpp"

namespace p3d7::exact {

/**
 * Laurent polynomial in zeta with Q(i) coefficients.
 *
 * Stored as a flat map: terms sorted by ascending exponent, no zero
 * coefficient ever stored, empty for the zero element.
 */
class LaurentPolynomial {
   public:
    struct Term {
        int exp;
        GaussianRational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPolynomial() = default;
    LaurentPolynomial(const GaussianRational& c) {  // NOLINT: constants embed implicitly
        if (!c.is_zero()) terms_.push_back({0, c});
    }
    LaurentPolynomial(long c) : LaurentPolynomial(GaussianRational(c)) {}  // NOLINT
    LaurentPolynomial(std::initializer_list<std::pair<int, GaussianRational>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static LaurentPolynomial monomial(const GaussianRational& c, int exp) {
        LaurentPolynomial p;
        if (!c.is_zero()) p.terms_.push_back({exp, c});
        return p;
    }
    static LaurentPolynomial zeta(int exp = 1) { return monomial(GaussianRational(1), exp); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int min_exp() const {
        require_nonzero();
        return terms_.front().exp;
    }
    int max_exp() const {
        require_nonzero();
        return terms_.back().exp;
    }
    const GaussianRational& leading() const {
        require_nonzero();
        return terms_.back().coeff;
    }
    GaussianRational coeff(int exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
        return (it != terms_.end() && it->exp == exp) ? it->coeff : GaussianRational();
    }

    /// No negative exponents.
    bool is_polynomial() const { return is_zero() || min_exp() >= 0; }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].exp == 0); }
    bool is_real() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
    }
    /// Degree as an ordinary polynomial; -1 for zero.
    int degree() const { return is_zero() ? -1 : max_exp(); }

    void add_term(int exp, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
        if (it != terms_.end() && it->exp == exp) {
            it->coeff += c;
            if (it->coeff.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, {exp, c});
        }
    }

    /// Multiplication by zeta^k.
    LaurentPolynomial shifted(int k) const {
        LaurentPolynomial r(*this);
        for (auto& t : r.terms_) t.exp += k;
        return r;
    }

    /// d/dzeta.
    LaurentPolynomial derivative() const {
        LaurentPolynomial r;
        for (const auto& t : terms_)
            if (t.exp != 0) r.terms_.push_back({t.exp - 1, t.coeff * GaussianRational(t.exp)});
        return r;
    }

    /// p(-zeta).
    LaurentPolynomial reflected() const {
        LaurentPolynomial r(*this);
        for (auto& t : r.terms_)
            if (t.exp % 2 != 0) t.coeff = -t.coeff;
        return r;
    }

    /// Coefficient-wise complex conjugate.
    LaurentPolynomial conj() const {
        LaurentPolynomial r(*this);
        for (auto& t : r.terms_) t.coeff = t.coeff.conj();
        return r;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = merge(*this, o, false); }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = merge(*this, o, true); }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = multiply(*this, o); }
    LaurentPolynomial& operator*=(const GaussianRational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.coeff *= c;
        return *this;
    }
    LaurentPolynomial& operator/=(const GaussianRational& c) { return *this *= c.inverse(); }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) { return merge(a, b, false); }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return merge(a, b, true); }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) { return multiply(a, b); }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const GaussianRational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const GaussianRational& c, LaurentPolynomial a) { return a *= c; }
    friend LaurentPolynomial operator/(LaurentPolynomial a, const GaussianRational& c) { return a /= c; }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

    std::string str(const char* var = "z") const {
        if (is_zero()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = it->coeff.str();
            bool compound = !it->coeff.is_real() && !it->coeff.is_imaginary();
            if (compound) c = "(" + c + ")";
            if (!s.empty()) s += (c[0] == '-') ? " - " : " + ";
            if (!s.empty() && c[0] == '-') c.erase(0, 1);
            s += c;
            if (it->exp != 0) s += std::string("*") + var + (it->exp == 1 ? "" : "^" + std::to_string(it->exp));
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

   private:
    void require_nonzero() const {
        if (terms_.empty()) throw DomainError("LaurentPolynomial: operation undefined for zero");
    }

    static LaurentPolynomial merge(const LaurentPolynomial& a, const LaurentPolynomial& b, bool negate_b) {
        LaurentPolynomial r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->exp < i->exp) {
                r.terms_.push_back({j->exp, negate_b ? -j->coeff : j->coeff});
                ++j;
            } else {
                GaussianRational c = negate_b ? i->coeff - j->coeff : i->coeff + j->coeff;
                if (!c.is_zero()) r.terms_.push_back({i->exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b);

    friend struct ScaledPoly;
    std::vector<Term> terms_;
};

/**
 * zeta^low * (re + i im) / den with integer coefficient vectors: the form in
 * which the big-integer kernels operate.
 */
struct ScaledPoly {
    int low = 0;
    mpz_class den = 1;
    detail::IntPoly re, im;

    bool is_zero() const { return re.empty() && im.empty(); }

    static ScaledPoly from(const LaurentPolynomial& p) {
        ScaledPoly s;
        if (p.is_zero()) return s;
        s.low = p.min_exp();
        for (const auto& t : p.terms_) {
            mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), t.coeff.re().get_den_mpz_t());
            mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), t.coeff.im().get_den_mpz_t());
        }
        std::size_t n = static_cast<std::size_t>(p.max_exp() - s.low) + 1;
        bool has_re = false, has_im = false;
        for (const auto& t : p.terms_) {
            has_re |= sgn(t.coeff.re()) != 0;
            has_im |= sgn(t.coeff.im()) != 0;
        }
        if (has_re) s.re.assign(n, mpz_class(0));
        if (has_im) s.im.assign(n, mpz_class(0));
        mpz_class f;
        for (const auto& t : p.terms_) {
            std::size_t k = static_cast<std::size_t>(t.exp - s.low);
            if (sgn(t.coeff.re()) != 0) {
                mpz_divexact(f.get_mpz_t(), s.den.get_mpz_t(), t.coeff.re().get_den_mpz_t());
                s.re[k] = t.coeff.re().get_num() * f;
            }
            if (sgn(t.coeff.im()) != 0) {
                mpz_divexact(f.get_mpz_t(), s.den.get_mpz_t(), t.coeff.im().get_den_mpz_t());
                s.im[k] = t.coeff.im().get_num() * f;
            }
        }
        detail::trim(s.re);
        detail::trim(s.im);
        return s;
    }

    LaurentPolynomial to_laurent() const {
        LaurentPolynomial p;
        std::size_t n = std::max(re.size(), im.size());
        for (std::size_t k = 0; k < n; ++k) {
            bool r = k < re.size() && sgn(re[k]) != 0;
            bool m = k < im.size() && sgn(im[k]) != 0;
            if (!r && !m) continue;
            mpq_class qr = r ? mpq_class(re[k], den) : mpq_class(0);
            mpq_class qm = m ? mpq_class(im[k], den) : mpq_class(0);
            p.terms_.push_back({low + static_cast<int>(k), GaussianRational(std::move(qr), std::move(qm))});
        }
        return p;
    }
};

inline LaurentPolynomial LaurentPolynomial::multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const LaurentPolynomial& mono = a.terms_.size() == 1 ? a : b;
        const LaurentPolynomial& other = a.terms_.size() == 1 ? b : a;
        LaurentPolynomial r = other.shifted(mono.terms_[0].exp);
        return r *= mono.terms_[0].coeff;
    }
    ScaledPoly sa = ScaledPoly::from(a), sb = ScaledPoly::from(b), r;
    r.low = sa.low + sb.low;
    r.den = sa.den * sb.den;
    using detail::mul;
    r.re = detail::sub(mul(sa.re, sb.re), mul(sa.im, sb.im));
    r.im = detail::add(mul(sa.re, sb.im), mul(sa.im, sb.re));
    return r.to_laurent();
}

// ---------------------------------------------------------------------------
// Division and gcd

struct DivMod {
    LaurentPolynomial quotient, remainder;
};

/// Euclidean division of ordinary polynomials over Q(i) (schoolbook).
inline DivMod divmod(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw DomainError("divmod: division by zero polynomial");
    if (!a.is_polynomial() || !b.is_polynomial()) throw DomainError("divmod: operands must be ordinary polynomials");
    DivMod out;
    out.remainder = a;
    GaussianRational inv_lead = b.leading().inverse();
    int db = b.max_exp();
    while (!out.remainder.is_zero() && out.remainder.max_exp() >= db) {
        GaussianRational f = out.remainder.leading() * inv_lead;
        int shift = out.remainder.max_exp() - db;
        out.quotient.add_term(shift, f);
        out.remainder -= (b * f).shifted(shift);
    }
    return out;
}

namespace detail {

// If every coefficient of p is real (unit = 1) or every one is imaginary
// (unit = i), returns the integer polynomial q with p = unit * zeta^low * q / den.
inline std::optional<std::pair<IntPoly, bool>> ray_part(const ScaledPoly& s) {
    if (s.im.empty()) return std::make_pair(s.re, false);
    if (s.re.empty()) return std::make_pair(s.im, true);
    return std::nullopt;
}

inline LaurentPolynomial from_int(const IntPoly& q, int low = 0) {
    ScaledPoly s;
    s.low = low;
    s.re = q;
    return s.to_laurent();
}

}  // namespace detail

/// Quotient q with a = q * b over Q(i), treating zeta as a unit; nullopt if b does not divide a.
inline std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw DomainError("exact_divide: division by zero polynomial");
    if (a.is_zero()) return LaurentPolynomial();
    ScaledPoly sa = ScaledPoly::from(a), sb = ScaledPoly::from(b);
    if (auto ray = detail::ray_part(sb)) {
        auto& [bq, b_imag] = *ray;
        // the trailing coefficient of bq is nonzero since low was taken as min_exp
        mpz_class cb = detail::content(bq);
        if (sgn(bq.back()) < 0) cb = -cb;
        detail::IntPoly bp = detail::primitive_part(bq);
        ScaledPoly q;
        q.low = sa.low - sb.low;
        if (!sa.re.empty()) {
            auto qr = detail::divide_exact(sa.re, bp);
            if (!qr) return std::nullopt;
            q.re = std::move(*qr);
        }
        if (!sa.im.empty()) {
            auto qi = detail::divide_exact(sa.im, bp);
            if (!qi) return std::nullopt;
            q.im = std::move(*qi);
        }
        // a/b = (qr + i qi) * den_b / (den_a * cb * unit)
        LaurentPolynomial out = q.to_laurent();
        GaussianRational scale(mpq_class(sb.den, sa.den * cb));
        if (b_imag) scale = scale * GaussianRational(mpq_class(0), mpq_class(-1));
        return out * scale;
    }
    LaurentPolynomial an = a.shifted(-sa.low), bn = b.shifted(-sb.low);
    DivMod dm = divmod(an, bn);
    if (!dm.remainder.is_zero()) return std::nullopt;
    return dm.quotient.shifted(sa.low - sb.low);
}

/// a / b for b | a; throws DivisibilityError on a nonzero remainder.
inline LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto q = try_divide(a, b);
    if (!q) throw DivisibilityError("exact_divide: " + b.str() + " does not divide " + a.str());
    return *q;
}

/// Monic gcd of ordinary polynomials over Q(i); gcd(0, 0) = 0.
inline LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (!a.is_polynomial() || !b.is_polynomial()) throw DomainError("gcd: operands must be ordinary polynomials");
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b / b.leading();
    if (b.is_zero()) return a / a.leading();
    ScaledPoly sa = ScaledPoly::from(a), sb = ScaledPoly::from(b);
    auto ra = detail::ray_part(sa), rb = detail::ray_part(sb);
    if (ra && rb) {
        detail::IntPoly g = detail::gcd(detail::shift_up(ra->first, static_cast<std::size_t>(sa.low)),
                                        detail::shift_up(rb->first, static_cast<std::size_t>(sb.low)));
        LaurentPolynomial out = detail::from_int(g);
        return out / out.leading();
    }
    LaurentPolynomial x = a, y = b;
    while (!y.is_zero()) {
        LaurentPolynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = r.is_zero() ? r : r / r.leading();
    }
    return x / x.leading();
}

}  // namespace p3d7::exact
