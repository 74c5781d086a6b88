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

#include <ostream>
#include <string>
#include <utility>

#include "laurent_polynomial.hpp"

namespace p3d7::exact {

class RationalFunction;
RationalFunction normalize(const LaurentPolynomial& num, const LaurentPolynomial& den);

/**
 * Element of Q(i)(zeta) in canonical form: numerator and denominator are
 * ordinary polynomials, coprime, with monic denominator. Zero is 0/1.
 * Canonical form is unique, so == is structural.
 *
 * Arithmetic uses Henrici's cross-cancellation: gcds are taken between the
 * smaller input factors rather than the full product.
 */
class RationalFunction {
   public:
    RationalFunction() : den_(1) {}
    RationalFunction(const GaussianRational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(GaussianRational(c)) {}  // NOLINT
    RationalFunction(const LaurentPolynomial& p) : den_(1) {           // NOLINT
        if (p.is_zero()) return;
        if (p.min_exp() >= 0) {
            num_ = p;
        } else {
            num_ = p.shifted(-p.min_exp());
            den_ = LaurentPolynomial::zeta(-p.min_exp());
        }
    }

    static RationalFunction zeta(int k = 1) { return RationalFunction(LaurentPolynomial::zeta(k)); }

    const LaurentPolynomial& num() const noexcept { return num_; }
    const LaurentPolynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
    /// True when the value is c * zeta^k, i.e. the denominator is a monomial.
    bool is_laurent_polynomial() const { return den_.is_monomial(); }
    LaurentPolynomial as_laurent() const {
        if (!is_laurent_polynomial()) throw DivisibilityError("RationalFunction: not a Laurent polynomial: " + str());
        return num_.shifted(-den_.max_exp());
    }
    GaussianRational constant_value() const {
        if (!is_constant()) throw DomainError("RationalFunction: not constant: " + str());
        return num_.coeff(0);
    }
    bool is_real() const { return num_.is_real() && den_.is_real(); }

    RationalFunction operator-() const { return from_canonical(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b, false); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, b, true); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return a.times_monomial(b);
        if (a.is_monomial()) return b.times_monomial(a);
        LaurentPolynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        LaurentPolynomial n = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
        LaurentPolynomial d = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
        return monic(std::move(n), std::move(d));
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
    friend RationalFunction operator*(const RationalFunction& a, const GaussianRational& c) {
        if (c.is_zero()) return {};
        return from_canonical(a.num_ * c, a.den_);
    }
    friend RationalFunction operator*(const GaussianRational& c, const RationalFunction& a) { return a * c; }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw DomainError("RationalFunction: division by zero");
        return monic(den_, num_);
    }

    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        RationalFunction r(1), base(*this);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    struct DerivativeParts {
        LaurentPolynomial numerator;  // N' h - N D'/g
        LaurentPolynomial h;          // D / gcd(D, D')
    };

    /**
     * r' = numerator / (D h). Over a field of characteristic zero this
     * fraction is already reduced: modulo each irreducible factor f of D the
     * numerator is -N e f' (D/f^e) with N coprime to f.
     */
    DerivativeParts derivative_parts() const {
        LaurentPolynomial dd = den_.derivative();
        if (dd.is_zero()) return {num_.derivative(), den_};
        LaurentPolynomial g = gcd(den_, dd);
        LaurentPolynomial h = g.is_constant() ? den_ : exact_divide(den_, g);
        LaurentPolynomial k = g.is_constant() ? dd : exact_divide(dd, g);
        return {num_.derivative() * h - num_ * k, std::move(h)};
    }

    /// d/dzeta.
    RationalFunction derivative() const {
        if (is_zero()) return {};
        DerivativeParts p = derivative_parts();
        return from_coprime(std::move(p.numerator), den_ * p.h);
    }

    /// n/d where n and d share no factor other than powers of zeta.
    static RationalFunction from_coprime(LaurentPolynomial n, LaurentPolynomial d) {
        if (n.is_zero()) return {};
        int k = std::min(n.min_exp(), d.min_exp());
        if (k > 0) {
            n = n.shifted(-k);
            d = d.shifted(-k);
        }
        return monic(std::move(n), std::move(d));
    }

    /// r(-zeta).
    RationalFunction reflected() const { return monic(num_.reflected(), den_.reflected()); }
    /// Coefficient-wise conjugate, i.e. conj(r(conj(zeta))).
    RationalFunction conj() const { return from_canonical(num_.conj(), den_.conj()); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (den_.is_constant()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

   private:
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

    // this * m where m = c zeta^k
    RationalFunction times_monomial(const RationalFunction& m) const {
        int k = m.num_.min_exp() - m.den_.min_exp();
        GaussianRational c = m.num_.leading();
        return from_coprime((num_ * c).shifted(std::max(k, 0)), den_.shifted(std::max(-k, 0)));
    }

    friend RationalFunction normalize(const LaurentPolynomial& num, const LaurentPolynomial& den);

    static RationalFunction from_canonical(LaurentPolynomial n, LaurentPolynomial d) {
        RationalFunction r;
        if (n.is_zero()) return r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    // n, d coprime ordinary polynomials; scales so d is monic
    static RationalFunction monic(LaurentPolynomial n, LaurentPolynomial d) {
        if (d.is_zero()) throw DomainError("RationalFunction: zero denominator");
        if (n.is_zero()) return {};
        GaussianRational lead = d.leading();
        if (lead != GaussianRational(1)) {
            GaussianRational inv = lead.inverse();
            n *= inv;
            d *= inv;
        }
        return from_canonical(std::move(n), std::move(d));
    }

    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        if (a.den_ == b.den_) return normalize(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
        LaurentPolynomial g = gcd(a.den_, b.den_);
        if (g.is_constant()) {
            LaurentPolynomial n = a.num_ * b.den_, m = b.num_ * a.den_;
            return monic(subtract ? n - m : n + m, a.den_ * b.den_);
        }
        LaurentPolynomial da = exact_divide(a.den_, g), db = exact_divide(b.den_, g);
        LaurentPolynomial n = a.num_ * db, m = b.num_ * da;
        LaurentPolynomial t = subtract ? n - m : n + m;
        if (t.is_zero()) return {};
        LaurentPolynomial g2 = gcd(t, g);
        return monic(exact_divide(t, g2), da * exact_divide(b.den_, g2));
    }

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

/// Canonical form of num/den, where num and den may be Laurent polynomials.
inline RationalFunction normalize(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw DomainError("normalize: zero denominator");
    if (num.is_zero()) return {};
    int e = num.min_exp() - den.min_exp();
    LaurentPolynomial n0 = num.shifted(-num.min_exp()), d0 = den.shifted(-den.min_exp());
    LaurentPolynomial g = gcd(n0, d0);
    if (!g.is_constant()) {
        n0 = exact_divide(n0, g);
        d0 = exact_divide(d0, g);
    }
    if (e >= 0)
        n0 = n0.shifted(e);
    else
        d0 = d0.shifted(-e);
    return RationalFunction::monic(std::move(n0), std::move(d0));
}

inline RationalFunction normalize(const RationalFunction& r) { return normalize(r.num(), r.den()); }

}  // namespace p3d7::exact
