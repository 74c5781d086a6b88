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

#include <string>

#include "rational_function.hpp"

namespace p3d7::exact {

/// value(zeta) * exp(3 * weight * zeta^2). Sums require equal weights.
class WeightedRational {
   public:
    WeightedRational() = default;
    WeightedRational(RationalFunction value, int weight = 0) : weight_(weight), value_(std::move(value)) {}  // NOLINT

    int weight() const noexcept { return weight_; }
    const RationalFunction& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    friend WeightedRational operator*(const WeightedRational& a, const WeightedRational& b) {
        return {a.value_ * b.value_, a.weight_ + b.weight_};
    }
    friend WeightedRational operator/(const WeightedRational& a, const WeightedRational& b) {
        return {a.value_ / b.value_, a.weight_ - b.weight_};
    }
    friend WeightedRational operator+(const WeightedRational& a, const WeightedRational& b) {
        check_weights(a, b, "+");
        return {a.value_ + b.value_, a.weight_};
    }
    friend WeightedRational operator-(const WeightedRational& a, const WeightedRational& b) {
        check_weights(a, b, "-");
        return {a.value_ - b.value_, a.weight_};
    }
    WeightedRational operator-() const { return {-value_, weight_}; }
    friend WeightedRational operator*(const GaussianRational& c, const WeightedRational& a) { return {a.value_ * c, a.weight_}; }
    friend WeightedRational operator*(const WeightedRational& a, const GaussianRational& c) { return {a.value_ * c, a.weight_}; }

    WeightedRational inverse() const { return {value_.inverse(), -weight_}; }
    WeightedRational pow(int k) const { return {value_.pow(k), weight_ * k}; }

    friend bool operator==(const WeightedRational& a, const WeightedRational& b) {
        return a.weight_ == b.weight_ && a.value_ == b.value_;
    }

    std::string str() const {
        if (weight_ == 0) return value_.str();
        return value_.str() + " * exp(" + std::to_string(3 * weight_) + "*z^2)";
    }

   private:
    static void check_weights(const WeightedRational& a, const WeightedRational& b, const char* op) {
        if (a.weight_ != b.weight_)
            throw DomainError(std::string("WeightedRational: weight mismatch in '") + op + "' (" +
                              std::to_string(a.weight_) + " vs " + std::to_string(b.weight_) + ")");
    }

    int weight_ = 0;
    RationalFunction value_;
};

/// d/dx with x = zeta^3: value (R' + 6 w zeta R) / (3 zeta^2), weight unchanged.
inline WeightedRational d_dx(const WeightedRational& f) {
    const RationalFunction& r = f.value();
    if (r.is_zero()) return f;
    // R' = A / (D h) in lowest terms, and 6 w zeta N h vanishes modulo every
    // factor of D h other than zeta, so the sum stays reduced.
    auto parts = r.derivative_parts();
    LaurentPolynomial num = std::move(parts.numerator);
    if (f.weight() != 0) num = num + (r.num() * parts.h).shifted(1) * GaussianRational(6L * f.weight());
    LaurentPolynomial den = (r.den() * parts.h).shifted(2) * GaussianRational(3);
    return {RationalFunction::from_coprime(std::move(num), std::move(den)), f.weight()};
}

}  // namespace p3d7::exact
