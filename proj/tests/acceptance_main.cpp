// acceptance_main.cpp — release gate: thirteen end-to-end criteria, one
// PASS/FAIL line each, indented diagnostics for anything that fails.
//
// Reference numbers labelled "published" are the values this project is
// expected to reproduce. Where an independent recomputation disagrees with a
// published number, the criterion fails and the diagnostics show both values
// side by side; nothing here is loosened to force a green line.
//
// Exit status: 0 when all thirteen criteria pass, 1 otherwise.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lopt/criteria.hpp"
#include "lopt/energy.hpp"
#include "lopt/errors.hpp"
#include "lopt/lattice.hpp"
#include "lopt/potentials.hpp"
#include "lopt/quadrature.hpp"
#include "lopt/search.hpp"
#include "lopt/specfun.hpp"

namespace {

using namespace lopt;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTriY = 0.8660254037844386467637231707529362;

std::string sfmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return std::string(buf);
}

struct Gate {
    int failures = 0;
    std::vector<std::string> diags;

    void note(std::string s) { diags.push_back(std::move(s)); }

    template <class Fn>
    void criterion(int id, const char* title, Fn&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            note(sfmt("unexpected exception: %s", e.what()));
            ok = false;
        }
        std::printf("[%2d] %s  %s\n", id, ok ? "PASS" : "FAIL", title);
        for (const std::string& d : diags) std::printf("        %s\n", d.c_str());
        diags.clear();
        if (!ok) ++failures;
        std::fflush(stdout);
    }
};

bool rel_ok(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::abs(want);
}

// The three-term convex counterexample potential 14 r^-2 - 40 r^-3 + 35 r^-4.
const PotentialSpec kEq6{InversePowerSum{{{14.0, 2.0}, {-40.0, 3.0}, {35.0, 4.0}}}};
const PotentialSpec kLJ21{LennardJonesType{2.0, 1.0, 3.0, 6.0}};
const PotentialSpec kLJ11{LennardJonesType{1.0, 1.0, 3.0, 6.0}};
const PotentialSpec kYukawa{AttractiveRepulsiveYukawa{1.0, 2.0, 1.0, 2.0}};

// --- criterion 1 -----------------------------------------------------------

bool c1_counterexample(Gate& g) {
    const CounterexampleInterval ci = counterexample_interval();
    const bool disc_ok = std::abs(ci.discriminant - 24.231435) <= 1e-4;
    const bool a1_ok = std::abs(ci.A1 - 2.3152307) <= 1e-5;
    const bool a2_ok = std::abs(ci.A2 - 3.759353) <= 1e-5;
    if (!(disc_ok && a1_ok && a2_ok)) {
        g.note(sfmt("discriminant computed %.13g vs published 24.231435 (diff %.3g, tol 1e-4)",
                    ci.discriminant, ci.discriminant - 24.231435));
        g.note(sfmt("A1 computed %.13g vs published 2.3152307 (diff %.3g, tol 1e-5)",
                    ci.A1, ci.A1 - 2.3152307));
        g.note(sfmt("A2 computed %.13g vs published 3.759353 (diff %.3g, tol 1e-5)",
                    ci.A2, ci.A2 - 3.759353));
        g.note("the published decimals disagree with the closed-form zeta recomputation "
               "beyond the stated tolerances; the computed values are the consistent ones");
    }

    const MinimizationResult res = minimize_fixed_area(kEq6, 3.0);
    const bool square_ok = res.classification == ShapeClass::square;
    if (!square_ok) {
        const EnergyValue sq = energy_direct(kEq6, make_square(3.0));
        g.note(sfmt("minimizer at A=3: shape (%.10g, %.10g), class %s, energy %.10g",
                    res.shape.x, res.shape.y, to_string(res.classification), res.energy.value));
        g.note(sfmt("exact square at A=3 has energy %.10g (higher by %.3g); the published "
                    "claim of a square minimizer at A=3 is not reproducible",
                    sq.value, sq.value - res.energy.value));
    }
    return disc_ok && a1_ok && a2_ok && square_ok;
}

// --- criterion 2 -----------------------------------------------------------

bool c2_zeta_closed_vs_direct(Gate& g) {
    const double exps[] = {3, 4, 5, 6, 8, 12, 16, 18, 20};
    bool ok = true;
    for (double two_s : exps) {
        const struct {
            LatticeShape shape;
            ReducedLattice L;
            const char* name;
        } cases[] = {{LatticeShape::square, make_square(1.0), "square"},
                     {LatticeShape::triangular, make_triangular(1.0), "triangular"}};
        for (const auto& c : cases) {
            const double closed = epstein_zeta_closed(c.shape, two_s);
            const double direct = epstein_zeta_direct(c.L, two_s);
            const double rel = std::abs(closed - direct) / std::abs(closed);
            if (rel > 1e-10) {
                ok = false;
                g.note(sfmt("%s two_s=%g: closed %.15g direct %.15g rel %.3g > 1e-10",
                            c.name, two_s, closed, direct, rel));
            }
        }
    }
    return ok;
}

// --- criterion 3 -----------------------------------------------------------

bool c3_theta_modular(Gate& g) {
    std::mt19937_64 rng(0xA3u);
    std::uniform_real_distribution<double> ux(0.0, 0.5), uy(0.9, 2.5);
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const ReducedLattice L = make_lattice(ux(rng), uy(rng), 0.5);
        for (double y : {1.5, 3.0, 7.0}) {
            const double lhs = theta(L, 1.0 / y);
            const double rhs = y * theta(L, y);
            const double err = std::abs(lhs - rhs);
            if (err > 1e-12 * theta(L, y)) {
                ok = false;
                g.note(sfmt("shape (%.6g, %.6g) y=%g: |theta(1/y) - y*theta(y)| = %.3g too large",
                            L.x, L.y, y, err));
            }
        }
    }
    return ok;
}

// --- criterion 4 -----------------------------------------------------------

double mellin_split_rhs(const ReducedLattice& L, double s) {
    auto integrand = [&](double a) {
        return theta_punctured(L, a) * (std::pow(a, s) + std::pow(a, 1.0 - s)) / a;
    };
    const QuadResult q = integrate_adaptive(
        integrand, {1, 1.5, 2, 3, 4, 6, 8, 12, 16, 24, 32, 40}, QuadOptions{1e-12, 1e-12, 8000});
    return 1.0 / (s - 1.0) - 1.0 / s + q.value;
}

bool c4_mellin_split_identity(Gate& g) {
    const double s = 2.0;
    const ReducedLattice z2 = make_square(1.0);
    const double lhs = epstein_zeta_direct(z2, 2.0 * s) * std::pow(2.0 * kPi, -s);  // Gamma(2)=1
    const double rhs = mellin_split_rhs(z2, s);
    const bool ok = std::abs(lhs - rhs) <= 1e-8;
    if (!ok) {
        g.note(sfmt("unit square lattice (area 1): lhs %.15g rhs %.15g diff %.6g",
                    lhs, rhs, lhs - rhs));
        const ReducedLattice half = make_square(0.5);
        const double lhs_h = epstein_zeta_direct(half, 2.0 * s) * std::pow(2.0 * kPi, -s);
        const double rhs_h = mellin_split_rhs(half, s);
        g.note(sfmt("same formula on the area-1/2 square lattice: lhs %.15g rhs %.15g diff %.3g",
                    lhs_h, rhs_h, lhs_h - rhs_h));
        g.note("with theta(alpha) = sum exp(-2*pi*alpha*|p|^2), the alpha -> 1/alpha split "
               "closes only at area 1/2; the published statement applies it at area 1, so "
               "the two sides differ there by a fixed amount");
    }
    return ok;
}

// --- criterion 5 -----------------------------------------------------------

bool c5_integral_vs_direct(Gate& g) {
    const struct {
        const PotentialSpec* f;
        const char* name;
    } pots[] = {{&kLJ11, "lennard_jones(1,1;3,6)"},
                {&kYukawa, "yukawa(1,2;1,2)"},
                {&kEq6, "three-term inverse power"}};
    bool ok = true;
    for (const auto& p : pots) {
        for (double A : {0.5, 1.0, 2.0}) {
            const struct {
                ReducedLattice L;
                const char* name;
            } shapes[] = {{make_triangular(A), "triangular"}, {make_square(A), "square"}};
            for (const auto& sh : shapes) {
                const EnergyValue d = energy_direct(*p.f, sh.L);
                const EnergyValue i = energy_integral(*p.f, sh.L);
                const double denom = std::max(std::abs(d.value), 1e-300);
                const double rel = std::abs(d.value - i.value) / denom;
                if (rel > 1e-6) {
                    ok = false;
                    g.note(sfmt("%s %s A=%g: direct %.12g integral %.12g rel %.3g > 1e-6",
                                p.name, sh.name, A, d.value, i.value, rel));
                }
            }
        }
    }
    return ok;
}

// --- criterion 6 -----------------------------------------------------------

bool c6_high_density_bounds(Gate& g) {
    bool ok = true;

    const BoundResult ips = area_bound_high_density(kEq6);
    const double want_ips = 7.0 * kPi / 48.0;
    if (!rel_ok(ips.area_bound, want_ips, 1e-6)) {
        ok = false;
        g.note(sfmt("three-term inverse power bound %.12g vs 7*pi/48 = %.12g",
                    ips.area_bound, want_ips));
    }
    const double len = std::sqrt(min_norm2(make_triangular(ips.area_bound)));
    if (!rel_ok(len, 0.7273408, 1e-6)) {
        ok = false;
        g.note(sfmt("triangular length at the bound %.12g vs published 0.7273408", len));
    }

    for (double p : {5.0, 50.0}) {
        const PotentialSpec f{InversePowerSum{{{p, 2.0}, {-3.0, 4.0}, {1.0, 6.0}}}};
        const BoundResult b = area_bound_high_density(f);
        const double want = kPi / std::sqrt(120.0);  // pi * (Gamma(4)/(6 Gamma(6)))^(1/2)
        if (!rel_ok(b.area_bound, want, 1e-6)) {
            ok = false;
            g.note(sfmt("(p=%g, -3, 1) | (2, 4, 6) bound %.12g vs pi/sqrt(120) = %.12g",
                        p, b.area_bound, want));
        }
    }

    const BoundResult lj = area_bound_high_density(kLJ21);
    const double want_lj = kPi / std::cbrt(120.0);
    if (!rel_ok(lj.area_bound, want_lj, 1e-6)) {
        ok = false;
        g.note(sfmt("LJ(2,1;3,6) bound %.12g vs pi/120^(1/3) = %.12g", lj.area_bound, want_lj));
    }

    const double c1 = buckingham_rate_threshold(OppBuckingham{1.0, 1.0, 1.0, 12.0}, 1.0);
    const double want_c1 = std::pow(kPi, 13.0) / 39916800.0;  // pi^13 / 11!
    if (!rel_ok(c1, want_c1, 1e-6) || !rel_ok(c1, 0.0727432, 1e-6)) {
        ok = false;
        g.note(sfmt("exponential-rate threshold %.12g vs pi^13/11! = %.12g (published 0.0727432)",
                    c1, want_c1));
    }
    return ok;
}

// --- criterion 7 -----------------------------------------------------------

bool c7_h_analysis(Gate& g) {
    bool ok = true;
    const HAnalysis h = h_analysis();
    if (std::abs(h.argmin - 2.6284732) > 1e-5) {
        ok = false;
        g.note(sfmt("h argmin %.10g vs published 2.6284732", h.argmin));
    }
    if (std::abs(h.conjugate_M - 4.6022909) > 1e-5) {
        ok = false;
        g.note(sfmt("h conjugate M %.10g vs published 4.6022909", h.conjugate_M));
    }
    const std::pair<double, double> holding[] = {
        {1.5, 2.0}, {1.5, 2.5}, {1.5, 3.0}, {2.0, 2.5}, {2.0, 3.0}};
    for (const auto& [x1, x2] : holding) {
        if (!lj_global_check(LennardJonesType{1.0, 1.0, x1, x2}).holds) {
            ok = false;
            g.note(sfmt("global LJ certificate unexpectedly fails for (%g, %g)", x1, x2));
        }
    }
    if (lj_global_check(LennardJonesType{1.0, 1.0, 3.0, 6.0}).holds) {
        ok = false;
        g.note("global LJ certificate unexpectedly holds for (3, 6)");
    }
    return ok;
}

// --- criterion 8 -----------------------------------------------------------

bool c8_table1(Gate& g) {
    struct Cell {
        double x1, x2, y, r, d;
    };
    // Published (y_min, r, d) triples; the table has 12 filled cells (the
    // stated count of 13 appears to be a miscount of the same table).
    const Cell cells[] = {
        {1.1, 1.5, 1.47, 0.64, 2.78}, {1.1, 2.0, 1.39, 0.80, 1.82},
        {1.5, 2.0, 1.33, 0.95, 1.27}, {1.1, 2.5, 1.34, 0.90, 1.45},
        {1.5, 2.5, 1.29, 1.02, 1.10}, {2.0, 2.5, 1.25, 1.10, 0.96},
        {1.1, 3.0, 1.30, 0.95, 1.27}, {1.5, 3.0, 1.26, 1.06, 1.03},
        {2.0, 3.0, 1.22, 1.11, 0.93}, {1.1, 3.5, 1.27, 0.99, 1.19},
        {1.5, 3.5, 1.24, 1.08, 1.00}, {1.1, 4.0, 1.25, 1.01, 1.14},
    };
    std::vector<std::pair<double, double>> pairs;
    for (const Cell& c : cells) pairs.emplace_back(c.x1, c.x2);
    const std::vector<Table1Row> rows = table1(pairs);

    int cell_pass = 0, comp_pass = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Cell& c = cells[i];
        const Table1Row& r = rows[i];
        const bool oy = std::abs(r.y_min - c.y) <= 0.01;
        const bool orr = std::abs(r.r - c.r) <= 0.01;
        const bool od = std::abs(r.d - c.d) <= 0.01;
        comp_pass += oy + orr + od;
        if (oy && orr && od) {
            ++cell_pass;
        } else {
            g.note(sfmt("(%g, %g): computed (%.4f, %.4f, %.4f) vs published (%.2f, %.2f, %.2f)",
                        c.x1, c.x2, r.y_min, r.r, r.d, c.y, c.r, c.d));
        }
    }
    if (cell_pass != 12) {
        g.note(sfmt("cells fully within 0.01: %d/12 (components: %d/36)", cell_pass, comp_pass));
        g.note("y_min matches everywhere; the published r and d columns disagree with the "
               "closed-form global-minimizer area for the smaller exponent pairs");
    }
    return cell_pass == 12;
}

// --- criterion 9 -----------------------------------------------------------

bool c9_table2(Gate& g) {
    struct Cell {
        double x1, x2, d0;
    };
    // Published d0 values; 62 filled cells (the stated count of 55 appears to
    // be a miscount of the same table).
    const Cell cells[] = {
        {1.1, 1.5, 0.05},
        {1.1, 2.0, 0.14},  {1.5, 2.0, 0.31},
        {1.1, 2.5, 0.21},  {1.5, 2.5, 0.37},  {2.0, 2.5, 0.43},
        {1.1, 3.0, 0.27},  {1.5, 3.0, 0.41},  {2.0, 3.0, 0.47},
        {1.1, 3.5, 0.31},  {1.5, 3.5, 0.45},  {2.0, 3.5, 0.50},  {3.0, 3.5, 0.58},
        {1.1, 4.0, 0.35},  {1.5, 4.0, 0.48},  {2.0, 4.0, 0.53},  {3.0, 4.0, 0.61},
        {1.1, 5.0, 0.42},  {1.5, 5.0, 0.53},  {2.0, 5.0, 0.58},  {3.0, 5.0, 0.65},
        {4.0, 5.0, 0.71},
        {1.1, 6.0, 0.47},  {1.5, 6.0, 0.58},  {2.0, 6.0, 0.63},  {3.0, 6.0, 0.69},
        {4.0, 6.0, 0.74},  {5.0, 6.0, 0.78},
        {1.1, 7.0, 0.52},  {1.5, 7.0, 0.62},  {2.0, 7.0, 0.66},  {3.0, 7.0, 0.72},
        {4.0, 7.0, 0.77},  {5.0, 7.0, 0.80},  {6.0, 7.0, 0.83},
        {1.1, 8.0, 0.56},  {1.5, 8.0, 0.65},  {2.0, 8.0, 0.69},  {3.0, 8.0, 0.75},
        {4.0, 8.0, 0.79},  {5.0, 8.0, 0.82},  {6.0, 8.0, 0.84},  {7.0, 8.0, 0.86},
        {1.1, 9.0, 0.60},  {1.5, 9.0, 0.68},  {2.0, 9.0, 0.72},  {3.0, 9.0, 0.77},
        {4.0, 9.0, 0.81},  {5.0, 9.0, 0.84},  {6.0, 9.0, 0.86},  {7.0, 9.0, 0.88},
        {8.0, 9.0, 0.89},
        {1.1, 10.0, 0.62}, {1.5, 10.0, 0.70}, {2.0, 10.0, 0.74}, {3.0, 10.0, 0.79},
        {4.0, 10.0, 0.83}, {5.0, 10.0, 0.85}, {6.0, 10.0, 0.87}, {7.0, 10.0, 0.89},
        {8.0, 10.0, 0.90}, {9.0, 10.0, 0.91},
    };
    std::vector<std::pair<double, double>> pairs;
    for (const Cell& c : cells) pairs.emplace_back(c.x1, c.x2);
    const std::vector<Table2Row> rows = table2(pairs);

    const int n = static_cast<int>(pairs.size());
    int pass = 0;
    double worst = 0;
    int worst_i = 0;
    for (int i = 0; i < n; ++i) {
        const double diff = std::abs(rows[i].d0 - cells[i].d0);
        if (diff <= 0.005) {
            ++pass;
        } else if (diff > worst) {
            worst = diff;
            worst_i = i;
        }
    }
    if (pass != n) {
        g.note(sfmt("cells within 0.005: %d/%d", pass, n));
        for (int i = 0; i < n; ++i) {
            const double diff = std::abs(rows[i].d0 - cells[i].d0);
            if (diff > 0.02) {
                g.note(sfmt("(%g, %g): computed %.4f vs published %.2f (diff %.3f)",
                            cells[i].x1, cells[i].x2, rows[i].d0, cells[i].d0, diff));
            }
        }
        g.note(sfmt("worst mismatch at (%g, %g): %.3f; most published entries look truncated "
                    "(not rounded) to two decimals, which alone exceeds the 0.005 tolerance",
                    cells[worst_i].x1, cells[worst_i].x2, worst));
    }
    return pass == n;
}

// --- criterion 10 ----------------------------------------------------------

bool c10_yukawa_threshold(Gate& g) {
    bool ok = true;
    auto gfun = [](double X) {
        return -X + std::log1p(X) - std::log(2.0 + 2.0 * kPi) + kPi;
    };
    double lo = 1.0, hi = 5.0;  // g(1) > 0 > g(5)
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gfun(mid) > 0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    if (!(root > 2.186 && root < 2.187)) {
        ok = false;
        g.note(sfmt("amplitude-ratio threshold root %.10g not inside (2.186, 2.187)", root));
    }

    const YukawaGlobalResult yk = yukawa_global_check(AttractiveRepulsiveYukawa{1.0, 2.0, 0.695, 1.0});
    if (!yk.holds) {
        ok = false;
        g.note(sfmt("certificate fails at a2=2a1, x1=0.695*x2: lhs1 %.6g lhs2 %.6g",
                    yk.lhs1, yk.lhs2));
    }

    const MinimizationResult res = minimize_global(kYukawa);
    if (res.classification != ShapeClass::triangular || res.special_distance > 1e-4) {
        ok = false;
        g.note(sfmt("global search: class %s shape (%.8g, %.8g) special distance %.3g",
                    to_string(res.classification), res.shape.x, res.shape.y,
                    res.special_distance));
    }
    return ok;
}

// --- criterion 11 ----------------------------------------------------------

bool c11_theta_scan(Gate& g) {
    bool ok = true;
    for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
        const ReducedLattice best = theta_grid_argmin(alpha, 1.0);
        if (std::abs(best.x - 0.5) > 1e-9 || std::abs(best.y - kTriY) > 1e-9) {
            ok = false;
            g.note(sfmt("alpha %g: argmin cell (%.12g, %.12g) is not the triangular node",
                        alpha, best.x, best.y));
        }
    }
    return ok;
}

// --- criterion 12 ----------------------------------------------------------

bool c12_cauchy_soundness(Gate& g) {
    std::mt19937_64 rng(0x5eed12u);
    std::uniform_real_distribution<double> ue(0.0, 10.0), uc(-10.0, 10.0);
    int violations = 0;
    for (int t = 0; t < 500; ++t) {
        const int nterms = 2 + static_cast<int>(rng() % 4);
        std::vector<double> exps;
        while (static_cast<int>(exps.size()) < nterms) {
            const double e = ue(rng);
            bool distinct = true;
            for (double other : exps) distinct = distinct && std::abs(other - e) > 0.05;
            if (distinct) exps.push_back(e);
        }
        std::sort(exps.begin(), exps.end());
        GeneralizedPolynomial p;
        for (int i = 0; i < nterms; ++i) {
            double c = uc(rng);
            if (i == nterms - 1)
                while (!(c > 0)) c = uc(rng);
            p.terms.push_back(GPTerm{c, exps[i]});
        }
        const double bound = cauchy_bound(p);

        // Dense-scan oracle, deliberately searching beyond the bound.
        const double scan_hi = std::max(1.0, bound * 1.5 + 5.0);
        const int steps = 4000;
        double largest_root = 0.0;
        double prev_t = scan_hi / steps;
        double prev_v = gpoly_eval(p, prev_t);
        for (int k = 2; k <= steps; ++k) {
            const double tk = scan_hi * k / steps;
            const double vk = gpoly_eval(p, tk);
            if ((prev_v <= 0 && vk > 0) || (prev_v >= 0 && vk < 0)) {
                double a = prev_t, b = tk, va = prev_v;
                for (int it = 0; it < 80; ++it) {
                    const double m = 0.5 * (a + b);
                    const double vm = gpoly_eval(p, m);
                    if ((va <= 0) == (vm <= 0)) {
                        a = m;
                        va = vm;
                    } else {
                        b = m;
                    }
                }
                largest_root = std::max(largest_root, 0.5 * (a + b));
            }
            prev_t = tk;
            prev_v = vk;
        }
        if (largest_root > bound + 1e-9 * (1.0 + bound)) {
            ++violations;
            if (violations <= 3) {
                g.note(sfmt("draw %d: root %.12g exceeds bound %.12g", t, largest_root, bound));
            }
        }
    }
    if (violations > 0) g.note(sfmt("%d/500 draws violated the bound", violations));
    return violations == 0;
}

// --- criterion 13 ----------------------------------------------------------

bool c13_sufficient_condition(Gate& g) {
    const struct {
        PotentialSpec f;
        const char* name;
    } instances[] = {
        {PotentialSpec{ScreenedCoulombSum{{{-1.0, 1.0}, {2.0, 2.0}}}}, "screened_coulomb"},
        {kEq6, "inverse_power"},
        {kLJ21, "lennard_jones"},
        {kYukawa, "yukawa"},
        {PotentialSpec{ExpDecay{{{-1.0, 2.0}, {1.0, 3.0}}, {{1.0, 1.0}}}}, "exp_decay"},
        {PotentialSpec{OppBuckingham{1.0, 1.0, 1.0, 6.0}}, "power_minus_exp"},
    };
    std::mt19937_64 rng(0x13Cu);
    std::uniform_real_distribution<double> ux(0.0, 0.5), uy(0.9, 3.0);
    bool ok = true;
    for (const auto& inst : instances) {
        const double A = 0.99 * area_bound_high_density(inst.f).area_bound;
        const ConditionReport rep = check_sufficient_condition(inst.f, A);
        const bool positive = rep.status == ConditionStatus::certified_positive ||
                              rep.status == ConditionStatus::sampled_positive;
        if (!positive) {
            ok = false;
            g.note(sfmt("%s at A=%.6g: status %s (route %s), expected a positive status",
                        inst.name, A, to_string(rep.status), rep.certification_route.c_str()));
            continue;
        }
        const double tri = energy_direct(inst.f, make_triangular(A)).value;
        const double tol = 1e-9 * std::max(1.0, std::abs(tri));
        for (int i = 0; i < 50; ++i) {
            const ReducedLattice L = make_lattice(ux(rng), uy(rng), A);
            const double e = energy_direct(inst.f, L).value;
            if (!(e >= tri - tol)) {
                ok = false;
                g.note(sfmt("%s at A=%.6g: lattice (%.6g, %.6g) has energy %.12g below "
                            "triangular %.12g",
                            inst.name, A, L.x, L.y, e, tri));
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    Gate g;
    std::printf("release acceptance gate: 13 criteria\n");
    g.criterion(1, "counterexample interval constants and the dense-phase square claim",
                [&] { return c1_counterexample(g); });
    g.criterion(2, "closed-form vs direct Epstein zeta within 1e-10",
                [&] { return c2_zeta_closed_vs_direct(g); });
    g.criterion(3, "theta modular identity at area 1/2",
                [&] { return c3_theta_modular(g); });
    g.criterion(4, "Mellin-split identity for zeta(4) on the unit square lattice",
                [&] { return c4_mellin_split_identity(g); });
    g.criterion(5, "integral vs direct energy across families, shapes, and areas",
                [&] { return c5_integral_vs_direct(g); });
    g.criterion(6, "high-density area bounds match their closed forms",
                [&] { return c6_high_density_bounds(g); });
    g.criterion(7, "h-function analysis and global certificate outcomes",
                [&] { return c7_h_analysis(g); });
    g.criterion(8, "closed-form minimizer table matches published values",
                [&] { return c8_table1(g); });
    g.criterion(9, "crossover density table matches published values",
                [&] { return c9_table2(g); });
    g.criterion(10, "attractive-repulsive global threshold and search classification",
                [&] { return c10_yukawa_threshold(g); });
    g.criterion(11, "theta grid scan argmin is the triangular node",
                [&] { return c11_theta_scan(g); });
    g.criterion(12, "root bound dominates every scanned positive root",
                [&] { return c12_cauchy_soundness(g); });
    g.criterion(13, "positive certificates at 99% of each high-density bound, with "
                    "random same-area domination",
                [&] { return c13_sufficient_condition(g); });

    std::printf("%d/13 criteria passed", 13 - g.failures);
    if (g.failures) {
        std::printf(", %d failed (mismatches against published values are reported above "
                    "with the recomputed numbers)",
                    g.failures);
    }
    std::printf("\n");
    return g.failures == 0 ? 0 : 1;
}
