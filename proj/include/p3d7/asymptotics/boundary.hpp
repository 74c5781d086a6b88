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
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "branch.hpp"
#include "h_function.hpp"

namespace p3d7::asymptotics {

enum class SegmentKind { curved_arc, branch_cut_edge, phantom_unbounded_arc };

inline const char* to_string(SegmentKind k) {
    switch (k) {
        case SegmentKind::curved_arc: return "curved_arc";
        case SegmentKind::branch_cut_edge: return "branch_cut_edge";
        case SegmentKind::phantom_unbounded_arc: return "phantom_unbounded_arc";
    }
    return "unknown";
}

struct BoundarySegment {
    SegmentKind kind;
    std::vector<cplx> points;
};

struct BoundaryCurve {
    int resolution = 0;
    double extent = 0;
    std::vector<BoundarySegment> segments;
    std::array<cplx, 4> corners{};
    double real_axis_crossing = 0;  // where the bounded arc meets the positive real axis
    std::vector<cplx> right_lobe;   // closed polygon of the bow-tie component in Re Y > 0
    std::vector<cplx> left_lobe;
};

struct BoundaryOptions {
    int resolution = 96;  // cells per side of the first-quadrant grid
    double extent = 1.2;
    LOptions quadrature{};
};

namespace detail {

// Does the closed box [x0,x1]x[y0,y1] meet the segment [a, b]? (Liang-Barsky clip)
inline bool box_meets_segment(double x0, double x1, double y0, double y1, cplx a, cplx b) {
    double t0 = 0, t1 = 1;
    const double dx = b.real() - a.real(), dy = b.imag() - a.imag();
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.real() - x0, x1 - a.real(), a.imag() - y0, y1 - a.imag()};
    for (int k = 0; k < 4; ++k) {
        if (p[k] == 0) {
            if (q[k] < 0) return false;
        } else {
            double t = q[k] / p[k];
            if (p[k] < 0)
                t0 = std::max(t0, t);
            else
                t1 = std::min(t1, t);
        }
    }
    return t0 <= t1;
}

inline std::vector<cplx> transformed(const std::vector<cplx>& pts, cplx (*f)(cplx)) {
    std::vector<cplx> out;
    out.reserve(pts.size());
    for (cplx p : pts) out.push_back(f(p));
    return out;
}

inline cplx conj_map(cplx z) { return std::conj(z); }
inline cplx neg_map(cplx z) { return -z; }
inline cplx negconj_map(cplx z) { return -std::conj(z); }

// Zero-level polylines of a sampled field by marching squares.
// v[j][i] sits at (i h, j h); NaN samples and `skip` cells are ignored.
inline std::vector<std::vector<cplx>> marching_squares(const std::vector<std::vector<double>>& v, double h,
                                                      const std::vector<std::vector<char>>& skip) {
    const int n = static_cast<int>(v.size()) - 1;
    auto edge_id = [n](int i, int j, bool vertical) { return 2L * (static_cast<long>(j) * (n + 1) + i) + (vertical ? 1 : 0); };
    std::map<long, cplx> point;
    std::map<long, std::vector<long>> adj;
    auto crossing = [&](int i0, int j0, int i1, int j1) {
        double a = v[j0][i0], b = v[j1][i1];
        double t = a / (a - b);
        return cplx((i0 + t * (i1 - i0)) * h, (j0 + t * (j1 - j0)) * h);
    };
    auto pos = [](double x) { return x >= 0; };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (skip[j][i]) continue;
            double c00 = v[j][i], c10 = v[j][i + 1], c01 = v[j + 1][i], c11 = v[j + 1][i + 1];
            if (std::isnan(c00) || std::isnan(c10) || std::isnan(c01) || std::isnan(c11)) continue;
            std::vector<long> hits;
            if (pos(c00) != pos(c10)) {
                long e = edge_id(i, j, false);
                point[e] = crossing(i, j, i + 1, j);
                hits.push_back(e);
            }
            if (pos(c10) != pos(c11)) {
                long e = edge_id(i + 1, j, true);
                point[e] = crossing(i + 1, j, i + 1, j + 1);
                hits.push_back(e);
            }
            if (pos(c01) != pos(c11)) {
                long e = edge_id(i, j + 1, false);
                point[e] = crossing(i, j + 1, i + 1, j + 1);
                hits.push_back(e);
            }
            if (pos(c00) != pos(c01)) {
                long e = edge_id(i, j, true);
                point[e] = crossing(i, j, i, j + 1);
                hits.push_back(e);
            }
            if (hits.size() == 2) {
                adj[hits[0]].push_back(hits[1]);
                adj[hits[1]].push_back(hits[0]);
            } else if (hits.size() == 4) {
                // saddle: hits are bottom, right, top, left; pair by the sign of the centre
                bool centre = pos(0.25 * (c00 + c10 + c01 + c11));
                bool pair_bottom_left = centre != pos(c00);
                long b0 = hits[0], r = hits[1], t = hits[2], l = hits[3];
                if (pair_bottom_left) {
                    adj[b0].push_back(l), adj[l].push_back(b0);
                    adj[r].push_back(t), adj[t].push_back(r);
                } else {
                    adj[b0].push_back(r), adj[r].push_back(b0);
                    adj[l].push_back(t), adj[t].push_back(l);
                }
            }
        }
    }
    std::vector<std::vector<cplx>> lines;
    std::map<long, bool> used;
    auto walk = [&](long start) {
        std::vector<cplx> line{point[start]};
        used[start] = true;
        long prev = -1, cur = start;
        for (;;) {
            long next = -1;
            for (long nb : adj[cur])
                if (nb != prev && !used[nb]) {
                    next = nb;
                    break;
                }
            if (next < 0) {
                // close loops back onto the start
                for (long nb : adj[cur])
                    if (nb == start && prev != start && line.size() > 2) line.push_back(point[start]);
                break;
            }
            used[next] = true;
            line.push_back(point[next]);
            prev = cur;
            cur = next;
        }
        return line;
    };
    for (const auto& [e, nbs] : adj)
        if (nbs.size() == 1 && !used[e]) lines.push_back(walk(e));
    for (const auto& [e, nbs] : adj)
        if (!used[e]) lines.push_back(walk(e));
    return lines;
}

}  // namespace detail

/**
 * Zero set of Y -> L(s(Y)) in the Y-plane.
 *
 * The first quadrant is sampled on a grid, cells meeting a cut are skipped,
 * and contours are traced by marching squares. A contour that runs from the
 * real axis to the grid edge is split at its point nearest the corner: the
 * part on the real-axis side is the bounded arc, the rest is unbounded. The
 * result is reflected by Y -> conj(Y) and Y -> -Y, and the four cut
 * half-segments are added.
 */
inline BoundaryCurve boundary_curve(const BoundaryOptions& opt = {}) {
    if (opt.resolution < 64) throw DomainError("boundary_curve: resolution must be at least 64");
    const int n = opt.resolution;
    const double h = opt.extent / n;
    const auto corners = corner_points();
    const cplx c0 = corners[0];

    std::vector<std::vector<double>> v(n + 1, std::vector<double>(n + 1, std::numeric_limits<double>::quiet_NaN()));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            cplx Y(i * h, j * h);
            try {
                v[j][i] = L_of_s(s_of_Y(Y), opt.quadrature);
            } catch (const Error&) {
                // on a cut or the origin: left as NaN
            }
        }
    std::vector<std::vector<char>> skip(n, std::vector<char>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            skip[j][i] = detail::box_meets_segment(i * h, (i + 1) * h, j * h, (j + 1) * h, 0.0, c0);

    auto lines = detail::marching_squares(v, h, skip);
    const double edge_tol = 1e-9;
    auto on_real_axis = [&](cplx p) { return std::abs(p.imag()) < edge_tol; };
    auto on_outer = [&](cplx p) { return p.real() > opt.extent - edge_tol || p.imag() > opt.extent - edge_tol; };

    std::vector<cplx> arc;
    std::vector<std::vector<cplx>> phantoms;
    for (auto& line : lines) {
        if (line.size() < 2) continue;
        if (on_real_axis(line.back()) || on_outer(line.front())) std::reverse(line.begin(), line.end());
        const bool starts_real = on_real_axis(line.front());
        const bool ends_outer = on_outer(line.back());
        // split at the vertex closest to the corner
        std::size_t k = 0;
        for (std::size_t m = 1; m < line.size(); ++m)
            if (std::abs(line[m] - c0) < std::abs(line[k] - c0)) k = m;
        const bool near_corner = std::abs(line[k] - c0) < 4 * h;
        if (starts_real && ends_outer && near_corner) {
            std::vector<cplx> a(line.begin(), line.begin() + static_cast<long>(k) + 1);
            std::vector<cplx> p(line.begin() + static_cast<long>(k), line.end());
            if (a.size() > arc.size()) arc = std::move(a);
            phantoms.push_back(std::move(p));
        } else if (starts_real && near_corner) {
            if (line.size() > arc.size()) arc = std::move(line);
        } else if (ends_outer && near_corner) {
            phantoms.push_back(std::move(line));
        }
        // other components are sampling artefacts away from the corner and are dropped
    }
    if (arc.empty()) throw NumericalError("boundary_curve: no bounded arc found; increase the resolution");

    BoundaryCurve out;
    out.resolution = n;
    out.extent = opt.extent;
    out.corners = corners;
    out.real_axis_crossing = arc.front().real();

    auto add_reflected = [&](SegmentKind kind, const std::vector<cplx>& q1) {
        out.segments.push_back({kind, q1});
        out.segments.push_back({kind, detail::transformed(q1, detail::negconj_map)});
        out.segments.push_back({kind, detail::transformed(q1, detail::neg_map)});
        out.segments.push_back({kind, detail::transformed(q1, detail::conj_map)});
    };
    add_reflected(SegmentKind::curved_arc, arc);
    for (const auto& p : phantoms) add_reflected(SegmentKind::phantom_unbounded_arc, p);
    for (cplx c : corners) out.segments.push_back({SegmentKind::branch_cut_edge, {0.0, c}});

    // right lobe: origin, upper corner, arc down to the axis, mirrored arc down to the lower corner
    std::vector<cplx> lobe{0.0, corners[0]};
    lobe.insert(lobe.end(), arc.rbegin(), arc.rend());
    for (std::size_t m = 1; m < arc.size(); ++m) lobe.push_back(std::conj(arc[m]));
    lobe.push_back(corners[3]);
    out.right_lobe = lobe;
    out.left_lobe = detail::transformed(lobe, detail::neg_map);
    return out;
}

/// Even-odd test against a closed polygon; points within `tol` of an edge count as inside.
inline bool point_in_polygon(cplx p, const std::vector<cplx>& poly, double tol = 1e-12) {
    bool inside = false;
    const std::size_t m = poly.size();
    for (std::size_t a = 0, b = m - 1; a < m; b = a++) {
        if (distance_to_segment(p, poly[b], poly[a]) <= tol) return true;
        const cplx pa = poly[a], pb = poly[b];
        if ((pa.imag() > p.imag()) != (pb.imag() > p.imag())) {
            double x = pa.real() + (p.imag() - pa.imag()) * (pb.real() - pa.real()) / (pb.imag() - pa.imag());
            if (p.real() < x) inside = !inside;
        }
    }
    return inside;
}

/// Membership in the bow-tie scaled about the origin by `dilation`.
inline bool in_bowtie(cplx Y, const BoundaryCurve& curve, double dilation = 1.0) {
    cplx p = Y / dilation;
    return point_in_polygon(p, curve.right_lobe) || point_in_polygon(p, curve.left_lobe);
}

}  // namespace p3d7::asymptotics
