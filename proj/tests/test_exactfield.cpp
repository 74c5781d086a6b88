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

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include <p3d7/exactfield.hpp>

using namespace p3d7;
using namespace p3d7::exact;

namespace {

GaussianRational frac(long n, long d) { return GaussianRational::fraction(n, d); }
LaurentPolynomial z(int k = 1) { return LaurentPolynomial::zeta(k); }
RationalFunction rz(int k = 1) { return RationalFunction::zeta(k); }

// u_1 = zeta/2 - 1/(6 zeta), hand-derived from the seed
RationalFunction u1() { return RationalFunction(frac(1, 2)) * rz() - RationalFunction(frac(1, 6)) * rz(-1); }

LaurentPolynomial random_poly(std::mt19937& g, int max_deg, bool allow_negative) {
    std::uniform_int_distribution<int> c(-4, 4), deg(0, max_deg), low(allow_negative ? -2 : 0, 0);
    LaurentPolynomial p;
    const int lo = low(g), hi = lo + deg(g);
    for (int e = lo; e <= hi; ++e) p.add_term(e, GaussianRational(mpq_class(c(g), 1 + std::abs(c(g))), mpq_class(c(g))));
    return p;
}

RationalFunction random_rf(std::mt19937& g) {
    LaurentPolynomial d;
    while (d.is_zero()) d = random_poly(g, 2, false);
    return normalize(random_poly(g, 3, true), d);
}

}  // namespace

TEST(GaussianRationalTest, CanonicalStorageAndFieldOps) {
    GaussianRational a(mpq_class(2, 4), mpq_class(-3, -6));
    EXPECT_EQ(a.re(), mpq_class(1, 2));
    EXPECT_EQ(a.im().get_den(), 2);
    EXPECT_EQ(a * a.inverse(), GaussianRational(1));
    EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
    EXPECT_THROW(GaussianRational().inverse(), DomainError);
}

TEST(NormalizeTest, Examples) {
    EXPECT_EQ(normalize(z(2) - z(1), z(1)), RationalFunction(z(1) - LaurentPolynomial(1)));
    EXPECT_EQ(normalize(LaurentPolynomial(2) * z(1), LaurentPolynomial(2)), rz());
    auto r = normalize(LaurentPolynomial(3) * z(2) - LaurentPolynomial(1), LaurentPolynomial(6) * z(1));
    EXPECT_EQ(r, u1());
    EXPECT_TRUE(r.den().leading() == GaussianRational(1));
    EXPECT_THROW(normalize(z(1), LaurentPolynomial()), DomainError);
}

TEST(NormalizeTest, Idempotent) {
    std::mt19937 g(7);
    for (int k = 0; k < 40; ++k) {
        auto r = random_rf(g);
        EXPECT_EQ(normalize(r), r);
        EXPECT_EQ(normalize(normalize(r.num(), r.den())), r);
    }
}

TEST(FieldOpsTest, Examples) {
    RationalFunction half_z = RationalFunction(frac(1, 2)) * rz();
    EXPECT_TRUE((half_z + (-half_z)).is_zero());
    EXPECT_EQ(half_z * (RationalFunction(2) * rz(-1)), RationalFunction(1));
    RationalFunction zm1(z(1) - LaurentPolynomial(1));
    EXPECT_EQ((RationalFunction(1) / zm1) * zm1, RationalFunction(1));
    EXPECT_THROW(RationalFunction(1) / RationalFunction(), DomainError);
}

TEST(FieldOpsTest, RandomAxioms) {
    std::mt19937 g(12345);
    for (int k = 0; k < 60; ++k) {
        auto a = random_rf(g), b = random_rf(g), c = random_rf(g);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(DdxTest, Examples) {
    EXPECT_EQ(d_dx(WeightedRational(rz(), 0)), WeightedRational(RationalFunction(frac(1, 3)) * rz(-2), 0));
    WeightedRational e = d_dx(WeightedRational(RationalFunction(1), 1));
    EXPECT_EQ(e.weight(), 1);
    EXPECT_EQ(e.value(), RationalFunction(2) * rz(-1));
    EXPECT_EQ(d_dx(WeightedRational(RationalFunction(frac(1, 2)) * rz(), 0)).value(),
              RationalFunction(frac(1, 6)) * rz(-2));
}

TEST(DdxTest, ProductRuleAcrossWeights) {
    std::mt19937 g(99);
    std::uniform_int_distribution<int> w(-2, 2);
    for (int k = 0; k < 30; ++k) {
        WeightedRational f(random_rf(g), w(g)), h(random_rf(g), w(g));
        if (f.is_zero() || h.is_zero()) continue;
        EXPECT_EQ(d_dx(f * h), d_dx(f) * h + f * d_dx(h));
    }
}

TEST(WeightedRationalTest, UnequalWeightAdditionIsAnError) {
    WeightedRational a(rz(), 0), b(rz(), 1);
    EXPECT_THROW(a + b, DomainError);
    EXPECT_EQ((a * b).weight(), 1);
    EXPECT_EQ((a / b).weight(), -1);
}

TEST(EvalTest, Examples) {
    auto v = eval_at(RationalFunction(frac(1, 2)) * rz(), std::complex<double>(2, 0));
    EXPECT_NEAR(std::abs(v.approx() - 1.0), 0, 1e-60);
    auto w = eval_at(u1(), std::complex<double>(1, 0));
    EXPECT_NEAR(std::abs(w.approx() - 1.0 / 3), 0, 1e-15);
    EXPECT_LT(w.error_bound, 1e-70);
    try {
        eval_at(rz(-1), std::complex<double>(0, 0));
        FAIL() << "expected a pole error";
    } catch (const PoleError& e) {
        EXPECT_EQ(e.location(), std::complex<double>(0, 0));
    }
}

TEST(EvalTest, NormalizedAndRawAgreeWithinBound) {
    std::mt19937 g(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int k = 0; k < 30; ++k) {
        auto r = random_rf(g);
        // same function with a common factor (zeta - 3) reintroduced in the representation
        LaurentPolynomial f = z(1) - LaurentPolynomial(3);
        auto raw = RationalFunction(r.num() * f) / RationalFunction(r.den() * f);
        std::complex<double> pt(u(g), u(g));
        try {
            auto a = eval_at(r, pt), b = eval_at(raw, pt);
            EXPECT_LE(std::abs(a.approx() - b.approx()), a.error_bound + b.error_bound + 1e-300);
        } catch (const PoleError&) {
        }
    }
}

TEST(ExpandTest, Examples) {
    auto a = expand_at_infinity(RationalFunction(frac(1, 2)) * rz(), 3);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].first, 1);
    EXPECT_EQ(a[0].second, frac(1, 2));
    auto b = expand_at_infinity(u1(), 3);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[1].first, -1);
    EXPECT_EQ(b[1].second, frac(-1, 6));
    auto c = expand_at_infinity(RationalFunction(1) / RationalFunction(z(1) - LaurentPolynomial(1)), 3);
    ASSERT_EQ(c.size(), 3u);
    for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(c[k].first, -1 - k);
        EXPECT_EQ(c[k].second, GaussianRational(1));
    }
}

TEST(ExactDivideTest, Examples) {
    EXPECT_EQ(exact_divide(z(2) - LaurentPolynomial(1), z(1) - LaurentPolynomial(1)), z(1) + LaurentPolynomial(1));
    LaurentPolynomial r2 = LaurentPolynomial(frac(1, 2)) * z(3) - LaurentPolynomial(frac(1, 6)) * z(1);
    EXPECT_EQ(exact_divide(r2 * z(1), z(2)), LaurentPolynomial(frac(1, 2)) * z(2) - LaurentPolynomial(frac(1, 6)));
    EXPECT_THROW(exact_divide(z(2) + LaurentPolynomial(1), z(1) - LaurentPolynomial(1)), DivisibilityError);
}

TEST(RootsTest, Examples) {
    auto r = complex_roots(z(2) + LaurentPolynomial(1));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(std::abs(r[0].approx() - std::complex<double>(0, -1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(r[1].approx() - std::complex<double>(0, 1)), 0, 1e-15);

    auto s = complex_roots(LaurentPolynomial(frac(1, 2)) * z(3) - LaurentPolynomial(frac(1, 6)) * z(1));
    ASSERT_EQ(s.size(), 3u);
    EXPECT_NEAR(s[0].approx().real(), -1 / std::sqrt(3.0), 1e-15);
    EXPECT_EQ(s[1].approx(), std::complex<double>(0, 0));
    EXPECT_NEAR(s[2].approx().real(), 1 / std::sqrt(3.0), 1e-15);

    EXPECT_TRUE(complex_roots(LaurentPolynomial(5)).empty());
}

TEST(RootsTest, MultiplicityAndResidualBound) {
    // (zeta - 1)^3 (zeta + i)^2 zeta
    LaurentPolynomial a = z(1) - LaurentPolynomial(1), b = z(1) + LaurentPolynomial(GaussianRational::i());
    LaurentPolynomial p = a * a * a * b * b * z(1);
    for (mpfr_prec_t prec : {128, 256}) {
        auto r = complex_roots(p, prec);
        ASSERT_EQ(static_cast<int>(r.size()), p.degree());
        for (const auto& x : r) EXPECT_LE(x.residual, std::ldexp(1.0, -static_cast<int>(prec) / 2) * x.scale);
    }
}

TEST(RootsTest, RandomPolynomialResiduals) {
    std::mt19937 g(2024);
    for (int k = 0; k < 10; ++k) {
        LaurentPolynomial p = random_poly(g, 12, false);
        if (p.degree() < 1) continue;
        auto r = complex_roots(p, 256);
        int zeros = 0;
        while (p.coeff(zeros).is_zero()) ++zeros;
        EXPECT_EQ(static_cast<int>(r.size()), p.degree());
        for (const auto& x : r) EXPECT_LE(x.residual, std::ldexp(1.0, -128) * x.scale);
    }
}
