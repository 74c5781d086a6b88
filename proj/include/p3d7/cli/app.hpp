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
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../asymptotics.hpp"
#include "../backlund.hpp"
#include "../ohyama.hpp"
#include "../version.hpp"
#include "table.hpp"

namespace p3d7::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, budget_or_usage = 2, numerical_failure = 3 };

struct CommonOptions {
    std::string format = "csv";
    std::string out = "-";
    int precision = 256;
    std::string command_line;
};

/// P3D7_PRECISION_BITS overrides the 256-bit default when set.
inline int default_precision() {
    const char* env = std::getenv("P3D7_PRECISION_BITS");
    if (!env || !*env) return 256;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 64 || v > 1 << 20)
        throw DomainError(std::string("P3D7_PRECISION_BITS must be an integer >= 64, got '") + env + "'");
    return static_cast<int>(v);
}

inline Table header(const CommonOptions& c, const std::string& command, const std::string& realizes) {
    Table t;
    t.meta("command_line", c.command_line);
    t.meta("command", command);
    t.meta("version", version);
    t.meta("precision_bits", std::to_string(c.precision));
    t.meta("format", c.format);
    t.meta("realizes", realizes);
    return t;
}

inline void add_rational_rows(Table& t, const std::string& role, const exact::RationalFunction& r) {
    auto emit = [&](const char* part, const exact::LaurentPolynomial& p) {
        for (const auto& term : p.terms()) {
            const auto& c = term.coeff;
            t.rows.push_back({role, std::string(part), static_cast<long>(term.exp), c.re().get_num().get_str(),
                              c.re().get_den().get_str(), c.im().get_num().get_str(), c.im().get_den().get_str()});
        }
    };
    emit("num", r.num());
    emit("den", r.den());
}

inline Table solve_table(const CommonOptions& c, int n, bool full, int max_n) {
    backlund::Lattice lattice(max_n);
    const auto& s = lattice.solution(n);
    Table t = header(c, "solve", "algebraic solution u_n in zeta = x^(1/3), with potentials exp(3 w zeta^2) * value");
    t.meta("n", std::to_string(n));
    t.meta("full", full ? "true" : "false");
    t.meta("max_n", std::to_string(max_n));
    t.columns = {"role", "part", "exponent", "re_num", "re_den", "im_num", "im_den"};
    add_rational_rows(t, "u", s.u.value());
    if (full) {
        t.meta("weights", "u:0 E:" + std::to_string(s.E.weight()) + " P:" + std::to_string(s.P.weight()) +
                              " Q:" + std::to_string(s.Q.weight()));
        add_rational_rows(t, "E", s.E.value());
        add_rational_rows(t, "P", s.P.value());
        add_rational_rows(t, "Q", s.Q.value());
    }
    return t;
}

inline backlund::Component parse_component(const std::string& s) {
    if (s.empty() || s == "none") return backlund::Component::none;
    if (s == "u") return backlund::Component::u;
    if (s == "E") return backlund::Component::E;
    if (s == "P") return backlund::Component::P;
    if (s == "Q") return backlund::Component::Q;
    throw DomainError("--perturb expects one of u, E, P, Q");
}

struct ValidateOutcome {
    Table table;
    bool passed;
    std::string summary;
};

inline ValidateOutcome validate_table(const CommonOptions& c, int n_max, const std::string& perturb, int perturb_n,
                                      int max_n) {
    if (n_max > max_n) throw BudgetError("validate: n_max " + std::to_string(n_max) + " exceeds budget " + std::to_string(max_n));
    backlund::ValidationOptions opt;
    opt.n_max = n_max;
    opt.perturb = parse_component(perturb);
    opt.perturb_n = perturb_n;
    if (opt.perturb != backlund::Component::none && std::abs(perturb_n) > n_max)
        throw DomainError("--perturb-n must satisfy |perturb-n| <= n-max");
    backlund::Lattice lattice(max_n + 1);
    auto rep = backlund::validate(lattice, opt);
    Table t = header(c, "validate",
                     "exact identity suite: ODE, compatibility system, b = i, phi' relation, symmetries, "
                     "large-zeta series, square denominator, inverse pair");
    t.meta("n_max", std::to_string(n_max));
    t.meta("perturb", opt.perturb == backlund::Component::none ? "none" : perturb);
    t.meta("perturb_n", std::to_string(perturb_n));
    t.columns = {"n", "check", "status", "detail"};
    for (const auto& r : rep.results)
        t.rows.push_back({static_cast<long>(r.n), r.check, std::string(r.passed ? "pass" : "fail"), r.detail});
    std::string summary = "all checks passed";
    if (auto f = rep.first_failure()) summary = "first failure: " + f->check + " at n = " + std::to_string(f->n);
    t.meta("result", summary);
    return {std::move(t), rep.passed(), summary};
}

inline Table roots_table(const CommonOptions& c, int n, int max_n) {
    if (n < 1) throw DomainError("roots: n must be >= 1");
    if (n > max_n) throw BudgetError("roots: n " + std::to_string(n) + " exceeds budget " + std::to_string(max_n));
    backlund::Lattice lattice(max_n);
    auto seq = ohyama::ohyama_sequence(std::max(n, 2), lattice);
    auto map = ohyama::root_map(seq, n, c.precision);
    Table t = header(c, "roots", "zeros of the Ohyama polynomial R_n and their images Y = zeta / sqrt(n)");
    t.meta("n", std::to_string(n));
    t.meta("degree", std::to_string(seq.R[n].degree()));
    t.columns = {"n", "re_zeta", "im_zeta", "re_Y", "im_Y", "residual"};
    for (std::size_t k = 0; k < map.roots.size(); ++k)
        t.rows.push_back({static_cast<long>(n), map.roots[k].real(), map.roots[k].imag(), map.scaled_roots[k].real(),
                          map.scaled_roots[k].imag(), map.residuals[k]});
    return t;
}

inline Table boundary_table(const CommonOptions& c, int resolution, double extent) {
    asymptotics::BoundaryOptions opt;
    opt.resolution = resolution;
    opt.extent = extent;
    auto curve = asymptotics::boundary_curve(opt);
    Table t = header(c, "boundary", "zero set of Re-part integral L(s(Y)) with the branch cuts of s(Y), Y-plane");
    t.meta("resolution", std::to_string(resolution));
    t.meta("extent", extent);
    t.meta("real_axis_crossing", curve.real_axis_crossing);
    t.columns = {"segment_id", "kind", "re_Y", "im_Y"};
    long id = 0;
    for (const auto& seg : curve.segments) {
        for (auto p : seg.points) t.rows.push_back({id, std::string(to_string(seg.kind)), p.real(), p.imag()});
        ++id;
    }
    for (auto z : curve.corners) t.rows.push_back({id++, std::string("corner"), z.real(), z.imag()});
    return t;
}

inline Table compare_table(const CommonOptions& c, std::optional<double> y, std::optional<double> Y_imag,
                           const std::vector<int>& n_list, int max_n) {
    if (y.has_value() == Y_imag.has_value()) throw DomainError("compare: give exactly one of --y or --Y-imag");
    if (n_list.empty()) throw DomainError("compare: --n-list is empty");
    for (int n : n_list)
        if (n > max_n) throw BudgetError("compare: n " + std::to_string(n) + " exceeds budget " + std::to_string(max_n));
    asymptotics::cplx Y;
    if (y) {
        if (!(*y > 0)) throw DomainError("compare: --y must be positive");
        Y = std::cbrt(*y);
    } else {
        if (*Y_imag == 0) throw DomainError("compare: --Y-imag must be nonzero");
        Y = asymptotics::cplx(0, *Y_imag);
    }
    if (asymptotics::is_subcritical_real(Y))
        throw DomainError("compare: y = " + format_double(*y) + " is below the critical value " +
                          format_double(asymptotics::critical_y()) +
                          "; the real point lies inside the bow-tie where no single-branch limit applies");
    backlund::Lattice lattice(max_n);
    auto cmp = asymptotics::compare_exact_vs_asymptotic(Y, n_list, lattice, c.precision);
    Table t = header(c, "compare", "n^(-1/2) u_n at zeta = n^(1/2) Y against the equilibrium value U(Y)");
    if (y) t.meta("y", *y);
    else t.meta("Y_imag", *Y_imag);
    t.meta("Y_re", Y.real());
    t.meta("Y_im", Y.imag());
    t.meta("U_re", cmp.U.real());
    t.meta("U_im", cmp.U.imag());
    t.meta("s_re", cmp.s.real());
    t.meta("s_im", cmp.s.imag());
    t.columns = {"n", "exact_re", "exact_im", "asymptotic", "abs_error", "asymptotic_im"};
    for (const auto& r : cmp.rows)
        t.rows.push_back({static_cast<long>(r.n), r.exact.real(), r.exact.imag(), r.asymptotic.real(), r.abs_error,
                          r.asymptotic.imag()});
    return t;
}

inline Table critical_table(const CommonOptions& c, double tol) {
    if (!(tol > 0) || tol < 1e-15) throw DomainError("critical: --tol must lie in [1e-15, inf)");
    const double yc = asymptotics::critical_y(tol);
    const auto sp = asymptotics::spectral(yc);
    Table t = header(c, "critical", "threshold y_c where Re h(i d, y) changes sign on the positive real axis");
    t.meta("tol", tol);
    t.columns = {"y_c", "s", "d"};
    t.rows.push_back({yc, sp.s, sp.d});
    return t;
}

inline std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

/// Maps library failures onto the exit-code contract.
inline int report(const std::exception& e, int code) {
    std::cerr << "p3d7: error: " << e.what() << '\n';
    return code;
}

inline int run(int argc, char** argv) {
    CLI::App app{"Algebraic solutions of Painleve-III (D7), Ohyama polynomials and large-n asymptotics", "p3d7"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1, 1);

    CommonOptions common;
    common.command_line = join_argv(argc, argv);
    int max_n = 40;

    auto add_common = [&](CLI::App* sub, bool with_precision) {
        sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", common.out, "output file, '-' for stdout");
        if (with_precision) sub->add_option("--precision", common.precision, "MPFR working precision in bits")->check(CLI::Range(64, 1 << 20));
    };

    auto* solve = app.add_subcommand("solve", "exact coefficients of u_n (and E, P, Q)");
    int solve_n = 0;
    bool solve_full = false;
    solve->add_option("--n", solve_n, "solution index")->required();
    solve->add_flag("--full", solve_full, "also emit the potentials E, P, Q");
    solve->add_option("--max-n", max_n, "lattice budget |n| <= max-n")->check(CLI::NonNegativeNumber);
    add_common(solve, false);

    auto* validate = app.add_subcommand("validate", "run the exact identity suite");
    int n_max = 5, perturb_n = 0;
    std::string perturb;
    validate->add_option("--n-max", n_max, "check every |n| <= n-max")->check(CLI::NonNegativeNumber);
    validate->add_option("--max-n", max_n, "lattice budget")->check(CLI::NonNegativeNumber);
    validate->add_option("--perturb", perturb, "double one component (u, E, P, Q) before checking")
        ->group("");
    validate->add_option("--perturb-n", perturb_n, "index of the perturbed state")->group("");
    add_common(validate, false);

    auto* roots = app.add_subcommand("roots", "zeros of R_n in the zeta- and Y-planes");
    int roots_n = 1;
    roots->add_option("--n", roots_n, "polynomial index")->required();
    roots->add_option("--max-n", max_n, "lattice budget")->check(CLI::NonNegativeNumber);
    add_common(roots, true);

    auto* boundary = app.add_subcommand("boundary", "bow-tie boundary curve and branch cuts");
    int resolution = 96;
    double extent = 1.2;
    boundary->add_option("--resolution", resolution, "grid cells per side of the first quadrant");
    boundary->add_option("--extent", extent, "half-width of the sampled square")->check(CLI::PositiveNumber);
    add_common(boundary, false);

    auto* compare = app.add_subcommand("compare", "exact u_n against the equilibrium asymptotics");
    std::optional<double> cmp_y, cmp_Y_imag;
    std::vector<int> n_list;
    compare->add_option("--y", cmp_y, "real x-scale value y > 0, so Y = y^(1/3)");
    compare->add_option("--Y-imag", cmp_Y_imag, "purely imaginary Y = i * value");
    compare->add_option("--n-list", n_list, "comma-separated indices")->delimiter(',')->required();
    compare->add_option("--max-n", max_n, "lattice budget")->check(CLI::NonNegativeNumber);
    add_common(compare, true);

    auto* critical = app.add_subcommand("critical", "critical value y_c with s(y_c) and d(y_c)");
    double tol = 1e-10;
    critical->add_option("--tol", tol, "bisection tolerance");
    add_common(critical, false);

    try {
        common.precision = default_precision();
    } catch (const Error& e) {
        return report(e, budget_or_usage);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : budget_or_usage;
    }

    try {
        Table t;
        int status = ok;
        if (*solve) {
            t = solve_table(common, solve_n, solve_full, max_n);
        } else if (*validate) {
            auto v = validate_table(common, n_max, perturb, perturb_n, max_n);
            t = std::move(v.table);
            if (!v.passed) {
                std::cerr << "p3d7: validation failed, " << v.summary << '\n';
                status = validation_failure;
            }
        } else if (*roots) {
            t = roots_table(common, roots_n, max_n);
        } else if (*boundary) {
            if (resolution < 64) throw DomainError("boundary: --resolution must be >= 64");
            t = boundary_table(common, resolution, extent);
        } else if (*compare) {
            t = compare_table(common, cmp_y, cmp_Y_imag, n_list, max_n);
        } else if (*critical) {
            t = critical_table(common, tol);
        }
        write_output(common.out, t.render(common.format));
        return status;
    } catch (const DivisibilityError& e) {
        return report(e, validation_failure);
    } catch (const BudgetError& e) {
        return report(e, budget_or_usage);
    } catch (const PoleError& e) {
        return report(e, numerical_failure);
    } catch (const NumericalError& e) {
        return report(e, numerical_failure);
    } catch (const DomainError& e) {
        return report(e, budget_or_usage);
    } catch (const std::exception& e) {
        return report(e, numerical_failure);
    }
}

}  // namespace p3d7::cli
