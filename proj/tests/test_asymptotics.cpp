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

#include <cmath>
#include <numbers>
#include <random>

#include <p3d7/asymptotics.hpp>

using namespace p3d7;
using namespace p3d7::asymptotics;

namespace {

const double corner_modulus = std::cbrt(2.0) / std::sqrt(3.0);

// independent oracle: bisection on 8U^3 + 2U - y
double bisect_U(double y) {
    double lo = 0, hi = std::max(1.0, y);
    for (int k = 0; k < 200; ++k) {
        double mid = 0.5 * (lo + hi);
        (8 * mid * mid * mid + 2 * mid - y > 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

const BoundaryCurve& curve64() {
    static BoundaryCurve c = [] {
        BoundaryOptions o;
        o.resolution = 64;
        return boundary_curve(o);
    }();
    return c;
}

double distance_to_kind(cplx p, const BoundaryCurve& c, SegmentKind kind) {
    double best = INFINITY;
    for (const auto& seg : c.segments) {
        if (seg.kind != kind) continue;
        for (std::size_t k = 0; k + 1 < seg.points.size(); ++k)
            best = std::min(best, distance_to_segment(p, seg.points[k], seg.points[k + 1]));
        if (seg.points.size() == 1) best = std::min(best, std::abs(p - seg.points[0]));
    }
    return best;
}

}  // namespace

TEST(EquilibriumTest, Examples) {
    EXPECT_EQ(equilibrium_U(0.0), 0.0);
    EXPECT_NEAR(equilibrium_U(1e-9), 0.5e-9, 1e-20);
    EXPECT_NEAR(equilibrium_U(1e6) / 50.0, 1.0, 1e-3);
    EXPECT_NEAR(equilibrium_U(1.0), bisect_U(1.0), 1e-14);
    EXPECT_NEAR(equilibrium_U(1.0), 0.3411, 1e-4);
    EXPECT_THROW(equilibrium_U(-1.0), DomainError);
}

TEST(EquilibriumTest, MatchesSpectralRoot) {
    for (double y : {0.5, 1.0, 2.0, 10.0}) {
        const double v = 0.5 * std::sqrt(-spectral(y).s);
        EXPECT_NEAR(v, equilibrium_U(y), 1e-12) << y;
        EXPECT_NEAR(8 * v * v * v + 2 * v - y, 0, 1e-12) << y;
    }
}

TEST(SpectralTest, LimitsAndValues) {
    auto small = spectral(1e-6);
    EXPECT_NEAR(small.s, 0, 1e-11);
    EXPECT_NEAR(small.d, 0.5, 1e-11);
    auto big = spectral(1e6);
    EXPECT_NEAR(big.s / -std::pow(1e6, 2.0 / 3.0), 1.0, 1e-3);
    EXPECT_NEAR(spectral(critical_y()).s, -0.0737, 2e-4);
    EXPECT_THROW(spectral(0.0), DomainError);
}

TEST(SpectralTest, MatchingResidualsOnLogGrid) {
    double prev_s = 1, prev_d = 0;
    for (int k = 0; k <= 60; ++k) {
        const double y = std::pow(10.0, -3 + 0.1 * k);
        auto sd = spectral(y);
        const double sc = 1 + std::abs(sd.s) + sd.d * sd.d + y * y;
        EXPECT_LE(std::abs(2 * sd.d + sd.s - 1), 1e-12 * sc);
        EXPECT_LE(std::abs(sd.d * sd.d * sd.s + y * y / 4), 1e-12 * sc);
        EXPECT_LE(std::abs(sd.d * sd.d + 2 * sd.d * sd.s + sd.c), 1e-12 * sc);
        EXPECT_LT(sd.s, prev_s);
        EXPECT_GT(sd.d, prev_d);
        prev_s = sd.s;
        prev_d = sd.d;
    }
}

TEST(DiscriminantTest, Examples) {
    auto [a, b] = discriminant_checks(0.0);
    EXPECT_EQ(a, -256.0);
    EXPECT_EQ(b, 0.0);
    for (double y : {-3.0, -0.1, 0.2, 5.0}) {
        auto [p, q] = discriminant_checks(y);
        EXPECT_LT(p, 0);
        EXPECT_GT(q, 0);
    }
}

TEST(GFunctionTest, Examples) {
    EXPECT_NEAR(g_origin_coeff(std::sqrt(16.0 / 27.0)), 0, 1e-12);  // s = -1/3
    EXPECT_GT(std::abs(g_origin_coeff(1.0)), 0.1);
    EXPECT_NEAR(g0_of_y(2.0), 1 + 1.5 + 0.5 * std::log(0.25), 1e-12);  // s = -1
    EXPECT_LT(g0_of_y(1e-8), g0_of_y(1e-4));
    EXPECT_LT(g0_of_y(1e-8), -10);
}

TEST(HFunctionTest, Examples) {
    const double s = spectral(1.0).s;
    cplx lim = h_eval_s(cplx(1e-12, s), s);
    EXPECT_NEAR(lim.real(), 0, 1e-5);
    EXPECT_NEAR(std::abs(lim.imag()), std::numbers::pi / 2, 1e-5);
    EXPECT_GT(re_h_at_double_point(0.4), 0);
    EXPECT_THROW(h_eval_s(cplx(0, s / 2), s), BranchError);
}

TEST(HFunctionTest, DerivativeMatchesCentralDifferences) {
    std::mt19937 g(17);
    std::uniform_real_distribution<double> u(-2, 2);
    std::uniform_real_distribution<double> yd(0.3, 3);
    auto check = [](cplx eta, double y) {
        const double dl = 1e-5;
        cplx fd = (h_eval(eta + dl, y) - h_eval(eta - dl, y)) / (2 * dl);
        cplx ex = h_prime(eta, y);
        EXPECT_LE(std::abs(fd - ex), 1e-6 * std::abs(ex)) << eta << " y=" << y;
    };
    check(cplx(1, 1), 1.0);
    int done = 0;
    while (done < 20) {
        cplx eta(u(g), u(g));
        double y = yd(g);
        if (distance_to_segment(eta, cplx(0, spectral(y).s), 0) < 0.2) continue;
        check(eta, y);
        ++done;
    }
}

TEST(CriticalTest, ValueSignsAndUniqueness) {
    EXPECT_NEAR(critical_y(1e-6), 0.29177, 1e-4);
    EXPECT_GT(re_h_at_double_point(0.4), 0);
    EXPECT_LT(re_h_at_double_point(0.291), 0);
    EXPECT_EQ(critical_y(1e-10), critical_y(1e-10));
    int changes = 0;
    double prev = re_h_at_double_point(0.1);
    for (int k = 1; k <= 90; ++k) {
        double v = re_h_at_double_point(0.1 + 0.01 * k);
        if ((v > 0) != (prev > 0)) ++changes;
        prev = v;
    }
    EXPECT_EQ(changes, 1);
}

TEST(LTest, IntervalAndPositivity) {
    for (double s : {1.0 / 3, 0.5, 2.0 / 3, 1.0}) EXPECT_LE(std::abs(L_of_s(s)), 1e-8) << s;
    EXPECT_GT(L_of_s(spectral(0.4).s), 0);
    EXPECT_LE(std::abs(L_of_s(spectral(critical_y()).s)), 1e-6);
    EXPECT_THROW(L_of_s(0.0), DomainError);
}

TEST(LTest, AgreesWithHAtDoublePoint) {
    for (double y = 0.3; y <= 2.0; y += 0.1) EXPECT_NEAR(L_of_s(spectral(y).s), re_h_at_double_point(y), 1e-8) << y;
}

TEST(WeierstrassTest, Examples) {
    auto w = weierstrass_invariants(2.0, 0.0);
    EXPECT_EQ(w.g2, 4.0);
    EXPECT_EQ(w.g3, -4.0);
    EXPECT_THROW(weierstrass_invariants(0.0, 1.0), DomainError);
    for (double y : {0.2, 0.7, 1.0, 3.0, 40.0}) {
        const double Ec = matched_integration_constant(y);
        auto v = weierstrass_invariants(y, Ec);
        EXPECT_TRUE(std::isfinite(v.g2) && std::isfinite(v.g3));
        // 16U^3/y + 2Ec U^2 - 4U/y + 1 has a double root at U = sqrt(-s)/2
        const double U = 0.5 * std::sqrt(-spectral(y).s);
        const double f = 16 * U * U * U / y + 2 * Ec * U * U - 4 * U / y + 1;
        const double df = 48 * U * U / y + 4 * Ec * U - 4 / y;
        EXPECT_NEAR(f, 0, 1e-10 * (1 + 16 * U * U * U / y + 4 / y)) << y;
        EXPECT_NEAR(df, 0, 1e-10 * (1 + 48 * U * U / y + 4 / y)) << y;
    }
}

TEST(BranchTest, Examples) {
    EXPECT_NEAR(corner_radius(), corner_modulus, 1e-15);
    for (double v : {0.05, 0.3, 1.2, 5.0}) {
        cplx s = s_of_Y(cplx(0, v));
        EXPECT_NEAR(s.imag(), 0, 1e-10);
        EXPECT_GT(s.real(), 1) << v;
    }
    const double ycr = std::cbrt(critical_y());
    for (double Y : {ycr + 1e-3, 0.8, 1.0, 2.0, 7.0}) EXPECT_NEAR(std::abs(s_of_Y(Y) - spectral(Y * Y * Y).s), 0, 1e-10) << Y;
    for (int k = 0; k < 12; ++k) {
        cplx Y = std::polar(10.0, 0.1 + k * std::numbers::pi / 6);
        EXPECT_LT(std::abs(s_of_Y(Y) + Y * Y), 2.0) << Y;
    }
    EXPECT_THROW(s_of_Y(std::polar(0.3, std::numbers::pi / 6)), BranchError);
    EXPECT_THROW(s_of_Y(0.0), BranchError);
    cplx U = equilibrium_U(cplx(1.2, 0.7));
    cplx y = std::pow(cplx(1.2, 0.7), 3);
    EXPECT_LT(std::abs(8.0 * U * U * U + 2.0 * U - y), 1e-10);
}

TEST(BoundaryTest, CornersCrossingAndKinds) {
    const auto& c = curve64();
    const double tol = 2.0 / c.resolution;
    const double angles[4] = {std::numbers::pi / 6, 5 * std::numbers::pi / 6, -5 * std::numbers::pi / 6,
                              -std::numbers::pi / 6};
    for (int k = 0; k < 4; ++k) {
        EXPECT_LT(std::abs(c.corners[k] - std::polar(corner_modulus, angles[k])), 1e-10);
        EXPECT_LE(distance_to_kind(c.corners[k], c, SegmentKind::curved_arc), tol);
    }
    EXPECT_NEAR(c.real_axis_crossing, std::cbrt(critical_y()), 5e-3);
    int arcs = 0, cuts = 0, phantoms = 0;
    for (const auto& seg : c.segments) {
        arcs += seg.kind == SegmentKind::curved_arc;
        cuts += seg.kind == SegmentKind::branch_cut_edge;
        phantoms += seg.kind == SegmentKind::phantom_unbounded_arc;
    }
    EXPECT_EQ(arcs, 4);
    EXPECT_EQ(cuts, 4);
    EXPECT_EQ(phantoms, 4);
    BoundaryOptions bad;
    bad.resolution = 32;
    EXPECT_THROW(boundary_curve(bad), DomainError);
}

TEST(BoundaryTest, SymmetricUnderNegationAndConjugation) {
    const auto& c = curve64();
    const double tol = 2.0 * c.extent / c.resolution;
    for (const auto& seg : c.segments)
        for (auto p : seg.points) {
            EXPECT_LE(distance_to_kind(-p, c, seg.kind), tol);
            EXPECT_LE(distance_to_kind(std::conj(p), c, seg.kind), tol);
        }
}

TEST(BoundaryTest, ZeroContourOfL) {
    const auto& c = curve64();
    for (const auto& seg : c.segments) {
        if (seg.kind != SegmentKind::curved_arc) continue;
        for (std::size_t k = 0; k < seg.points.size(); k += 7) {
            cplx p = seg.points[k];
            if (distance_to_cuts(p) < 0.05 || std::abs(p) < 0.05) continue;
            // a sign change of L(s(Y)) lies within one cell along the radial direction
            const double h = c.extent / c.resolution;
            cplx dir = p / std::abs(p);
            double a = L_of_s(s_of_Y(p - h * dir)), b = L_of_s(s_of_Y(p + h * dir));
            EXPECT_LE(a * b, 0) << p;
        }
    }
}

TEST(BowtieTest, Membership) {
    const auto& c = curve64();
    EXPECT_TRUE(in_bowtie(cplx(0.3, 0.0), c));
    EXPECT_TRUE(in_bowtie(cplx(-0.3, 0.05), c));
    EXPECT_FALSE(in_bowtie(cplx(0.0, 0.3), c));
    EXPECT_FALSE(in_bowtie(cplx(0.9, 0.0), c));
    EXPECT_TRUE(in_bowtie(cplx(0.9, 0.0), c, 1.5));
}

TEST(CompareTest, Examples) {
    backlund::Lattice lattice(20);
    auto t = compare_exact_vs_asymptotic(1.0, {2, 5, 10}, lattice);
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_NEAR(t.U.real(), 0.3411, 1e-4);
    EXPECT_LE(t.rows[2].abs_error, 0.05);
    EXPECT_GT(t.rows[0].abs_error, t.rows[1].abs_error);
    EXPECT_GT(t.rows[1].abs_error, t.rows[2].abs_error);
    for (const auto& r : t.rows) EXPECT_LT(r.eval_error_bound, 1e-60);

    auto im = compare_exact_vs_asymptotic(cplx(0, 1.2), {4, 8}, lattice);
    for (const auto& r : im.rows) {
        EXPECT_NEAR(r.exact.real(), 0, 1e-60);
        EXPECT_NEAR(r.asymptotic.real(), 0, 1e-12);
    }

    auto far = compare_exact_vs_asymptotic(100.0, {5}, lattice);
    EXPECT_NEAR(far.rows[0].asymptotic.real() / 50.0, 1.0, 1e-3);

    EXPECT_THROW(compare_exact_vs_asymptotic(std::cbrt(0.2), {2}, lattice), DomainError);
    EXPECT_THROW(compare_exact_vs_asymptotic(1.0, {0}, lattice), DomainError);
}
