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
 * @file gaussian_rational.hpp
 * @brief Exact elements a + b i of Q(i).
 *
 * Both parts are GMP rationals kept in lowest terms with positive
 * denominator, so two values compare equal exactly when their parts do.
 */

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "../errors.hpp"

namespace p3d7::exact {

class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers is intended
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussianRational fraction(long num, long den) {
        if (den == 0) throw DomainError("GaussianRational: zero denominator");
        return {mpq_class(num, den)};
    }
    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_imaginary() const { return sgn(re_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("GaussianRational: division by zero");
        mpq_class n = norm();
        return {mpq_class(re_ / n), mpq_class(-im_ / n)};
    }

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_real()) {
            if (sgn(o.re_) == 0) throw DomainError("GaussianRational: division by zero");
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const {
        if (is_real()) return re_.get_str();
        std::string s = sgn(re_) == 0 ? std::string() : re_.get_str();
        if (sgn(im_) > 0 && !s.empty()) s += "+";
        return s + im_.get_str() + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

   private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace p3d7::exact
