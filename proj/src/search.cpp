#include "lopt/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "lopt/criteria.hpp"
#include "lopt/parallel.hpp"
#include "lopt/specfun.hpp"

namespace lopt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kTriX = 0.5;
const double kTriY = std::sqrt(3.0) / 2.0;

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace

const char* to_string(ShapeClass c) {
    switch (c) {
        case ShapeClass::triangular: return "triangular";
        case ShapeClass::square: return "square";
        case ShapeClass::rectangular: return "rectangular";
        case ShapeClass::rhombic: return "rhombic";
        case ShapeClass::generic: return "generic";
    }
    return "?";
}

ShapeClass classify_shape(double x, double y, double tol) {
    if (!(tol > 0)) throw DomainError("classify_shape: tol must be positive");
    if (std::hypot(x - kTriX, y - kTriY) <= tol) return ShapeClass::triangular;
    if (std::hypot(x, y - 1.0) <= tol) return ShapeClass::square;
    if (x <= tol) return ShapeClass::rectangular;
    if (std::abs(x * x + y * y - 1.0) <= tol || std::abs(x - 0.5) <= tol)
        return ShapeClass::rhombic;
    return ShapeClass::generic;
}

double special_shape_distance(double x, double y) {
    const double d_tri = std::hypot(x - kTriX, y - kTriY);
    const double d_sq = std::hypot(x, y - 1.0);
    const double d_rect = x;
    const double d_rhomb = std::min(std::abs(std::hypot(x, y) - 1.0), std::abs(x - 0.5));
    return std::min(std::min(d_tri, d_sq), std::min(d_rect, d_rhomb));
}

namespace {

// Objective over fundamental-domain coordinates. Computation-class failures
// at extreme cells surface as +inf so one pathological shape cannot abort a
// whole scan; a scan whose every cell failed rethrows.
using Objective = std::function<double(double x, double y)>;

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

double floor_y(double x) { return std::sqrt(std::max(1.0 - x * x, 0.0)); }

struct GridBest {
    double x = 0, y = 0, value = kInf;
    int j = 0;  // row index of the winning cell
};

struct GridScan {
    std::vector<GridBest> top;  // ranked best cells (ascending value)
    bool all_failed = true;
};

GridScan scan_grid(const Objective& obj, int nx, int ny, double y_cap, int keep) {
    const auto n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    std::vector<double> vals(n, kInf);
    std::vector<double> xs(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i)
        xs[static_cast<std::size_t>(i)] = 0.5 * static_cast<double>(i) / (nx - 1);
    parallel_for(n, [&](std::size_t k) {
        const int i = static_cast<int>(k) / ny;
        const int j = static_cast<int>(k) % ny;
        const double x = xs[static_cast<std::size_t>(i)];
        const double ylo = floor_y(x);
        const double y = ylo + (y_cap - ylo) * static_cast<double>(j) / (ny - 1);
        try {
            vals[k] = obj(x, y);
        } catch (const SlowConvergence&) {
        } catch (const QuadratureFailure&) {
        } catch (const BudgetExceeded&) {
        }
    });

    GridScan out;
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (vals[a] != vals[b]) return vals[a] < vals[b];
        return a < b;  // lexicographic (value, x, y): k encodes (i, j)
    });
    for (std::size_t r = 0; r < order.size() && out.top.size() < static_cast<std::size_t>(keep);
         ++r) {
        const std::size_t k = order[r];
        if (!std::isfinite(vals[k])) break;
        const int i = static_cast<int>(k) / ny;
        const int j = static_cast<int>(k) % ny;
        const double x = xs[static_cast<std::size_t>(i)];
        const double ylo = floor_y(x);
        const double y = ylo + (y_cap - ylo) * static_cast<double>(j) / (ny - 1);
        out.top.push_back(GridBest{x, y, vals[k], j});
        out.all_failed = false;
    }
    return out;
}

struct RefineResult {
    double x = 0, y = 0, value = kInf;
};

// Nelder-Mead on the clamped fundamental domain; only improving replacements
// are accepted, so the returned value never exceeds the starting one.
RefineResult refine_simplex(const Objective& obj, double x0, double y0, double y_cap,
                            double hx, double hy, int iters) {
    struct Pt {
        double x, y, v;
    };
    auto canon = [&](double& x, double& y) {
        x = clamp(x, 0.0, 0.5);
        y = clamp(y, floor_y(x), y_cap);
    };
    auto eval = [&](double x, double y) -> double {
        canon(x, y);
        try {
            return obj(x, y);
        } catch (const SlowConvergence&) {
        } catch (const QuadratureFailure&) {
        } catch (const BudgetExceeded&) {
        }
        return kInf;
    };

    std::vector<Pt> s;
    for (auto [dx, dy] : {std::pair{0.0, 0.0}, {hx, 0.0}, {0.0, hy}}) {
        double x = x0 + dx, y = y0 + dy;
        canon(x, y);
        s.push_back(Pt{x, y, eval(x, y)});
    }
    auto by_value = [](const Pt& a, const Pt& b) {
        if (a.v != b.v) return a.v < b.v;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    };
    for (int it = 0; it < iters; ++it) {
        std::sort(s.begin(), s.end(), by_value);
        const double diam = std::max(std::hypot(s[1].x - s[0].x, s[1].y - s[0].y),
                                     std::hypot(s[2].x - s[0].x, s[2].y - s[0].y));
        if (diam < 1e-7) break;
        const double cx = 0.5 * (s[0].x + s[1].x), cy = 0.5 * (s[0].y + s[1].y);
        double rx = cx + (cx - s[2].x), ry = cy + (cy - s[2].y);
        canon(rx, ry);
        const double rv = eval(rx, ry);
        if (rv < s[0].v) {
            double ex = cx + 2.0 * (cx - s[2].x), ey = cy + 2.0 * (cy - s[2].y);
            canon(ex, ey);
            const double ev = eval(ex, ey);
            s[2] = ev < rv ? Pt{ex, ey, ev} : Pt{rx, ry, rv};
        } else if (rv < s[1].v) {
            s[2] = Pt{rx, ry, rv};
        } else {
            const bool outside = rv < s[2].v;
            const double px = outside ? rx : s[2].x, py = outside ? ry : s[2].y;
            double kx = cx + 0.5 * (px - cx), ky = cy + 0.5 * (py - cy);
            canon(kx, ky);
            const double kv = eval(kx, ky);
            if (kv < std::min(rv, s[2].v)) {
                s[2] = Pt{kx, ky, kv};
            } else {
                for (int m = 1; m < 3; ++m) {
                    double nx = s[0].x + 0.5 * (s[m].x - s[0].x);
                    double ny = s[0].y + 0.5 * (s[m].y - s[0].y);
                    canon(nx, ny);
                    s[m] = Pt{nx, ny, eval(nx, ny)};
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), by_value);
    return RefineResult{s[0].x, s[0].y, s[0].v};
}

// Shared fixed-area engine: grid scan with y_cap extension, multistart
// simplex refinement, deterministic reduction.
MinimizationResult minimize_shape(const Objective& obj, const SearchOptions& opts,
                                  const std::function<EnergyValue(double, double)>& final_eval,
                                  double area) {
    if (opts.nx < 2 || opts.ny < 2 || !(opts.y_cap > 1.0))
        throw DomainError("minimize: grid must be at least 2x2 with y_cap > 1");

    double y_cap = opts.y_cap;
    GridScan scan;
    for (int ext = 0;; ++ext) {
        scan = scan_grid(obj, opts.nx, opts.ny, y_cap, std::max(opts.starts, 1));
        if (scan.all_failed)
            throw SlowConvergence("minimize: every grid cell failed to evaluate");
        if (scan.top.front().j < opts.ny - 1) break;
        if (ext >= 3)
            throw UnboundedBelow(
                "minimize: energy keeps decreasing toward the elongation ceiling after three "
                "y-cap extensions; the potential is not coercive on this domain");
        y_cap *= 2.0;
    }

    const double hx = 0.7 * 0.5 / (opts.nx - 1);
    const double hy = 0.7 * (y_cap - 1.0) / (opts.ny - 1);
    std::vector<RefineResult> refined(scan.top.size());
    parallel_for(scan.top.size(), [&](std::size_t s) {
        refined[s] = refine_simplex(obj, scan.top[s].x, scan.top[s].y, y_cap, hx, hy,
                                    opts.refine_iters);
    });

    RefineResult best{scan.top.front().x, scan.top.front().y, scan.top.front().value};
    for (const auto& r : refined) {
        if (r.value < best.value || (r.value == best.value && (r.x < best.x ||
            (r.x == best.x && r.y < best.y))))
            best = r;
    }

    MinimizationResult out;
    out.shape = make_lattice(best.x, best.y, area);
    out.area = area;
    out.energy = final_eval(out.shape.x, out.shape.y);
    out.classification = classify_shape(out.shape.x, out.shape.y, opts.shape_tol);
    out.shape_tol = opts.shape_tol;
    out.special_distance = special_shape_distance(out.shape.x, out.shape.y);
    out.grid_energy = scan.top.front().value;
    return out;
}

bool uses_direct_sum(const PotentialSpec& f) {
    return std::visit(Overload{[](const ScreenedCoulombSum&) { return true; },
                               [](const AttractiveRepulsiveYukawa&) { return true; },
                               [](const auto&) { return false; }},
                      f);
}

EnergyValue eval_energy(const PotentialSpec& f, const ReducedLattice& L, const Precision& p) {
    return uses_direct_sum(f) ? energy_direct(f, L, p) : energy_integral(f, L, p);
}

}  // namespace

MinimizationResult minimize_fixed_area(const PotentialSpec& f, double A,
                                       const SearchOptions& opts) {
    if (!(A > 0)) throw NonPositiveArea("minimize_fixed_area: area must be positive");
    validate(f);
    Objective obj = [&](double x, double y) {
        return eval_energy(f, make_lattice(x, y, A), opts.objective_prec).value;
    };
    return minimize_shape(obj, opts,
                          [&](double x, double y) {
                              return eval_energy(f, make_lattice(x, y, A), opts.final_prec);
                          },
                          A);
}

MinimizationResult minimize_theta_fixed_area(double alpha, double A, const SearchOptions& opts) {
    if (!(A > 0)) throw NonPositiveArea("minimize_theta_fixed_area: area must be positive");
    if (!(alpha > 0)) throw DomainError("minimize_theta_fixed_area: alpha must be positive");
    Objective obj = [&](double x, double y) {
        return theta(make_lattice(x, y, A), alpha, opts.objective_prec);
    };
    return minimize_shape(obj, opts,
                          [&](double x, double y) {
                              EnergyValue e;
                              e.value = theta(make_lattice(x, y, A), alpha, opts.final_prec);
                              e.error_bound = opts.final_prec.rel_tol * e.value;
                              e.method = "theta";
                              return e;
                          },
                          A);
}

ReducedLattice theta_grid_argmin(double alpha, double A, const SearchOptions& opts) {
    if (!(A > 0)) throw NonPositiveArea("theta_grid_argmin: area must be positive");
    if (!(alpha > 0)) throw DomainError("theta_grid_argmin: alpha must be positive");
    Objective obj = [&](double x, double y) {
        return theta(make_lattice(x, y, A), alpha, opts.objective_prec);
    };
    const GridScan scan = scan_grid(obj, opts.nx, opts.ny, opts.y_cap, 1);
    if (scan.all_failed) throw SlowConvergence("theta_grid_argmin: every grid cell failed");
    return make_lattice(scan.top.front().x, scan.top.front().y, A);
}

namespace {

// Area-free Lennard-Jones search: for each shape the optimal area is closed
// form in the two unit-area zeta values, so the search stays two-dimensional.
MinimizationResult global_lj(const LennardJonesType& g, const SearchOptions& opts) {
    const double a_max = std::pow(g.a2 * g.x2 / (g.a1 * g.x1), 1.0 / (g.x2 - g.x1));
    struct Opt {
        double area, energy;
        bool clamped;
    };
    auto per_shape = [&](double x, double y, const Precision& p) -> Opt {
        const ReducedLattice L1 = make_lattice(x, y, 1.0);
        const double z1 = epstein_zeta_direct(L1, 2.0 * g.x1, p);
        const double z2 = epstein_zeta_direct(L1, 2.0 * g.x2, p);
        double area = std::pow(g.a2 * g.x2 * z2 / (g.a1 * g.x1 * z1), 1.0 / (g.x2 - g.x1));
        bool clamped = false;
        if (area > a_max) {
            area = a_max;
            clamped = true;
        }
        const double e =
            g.a2 * std::pow(area, -g.x2) * z2 - g.a1 * std::pow(area, -g.x1) * z1;
        return Opt{area, e, clamped};
    };
    Objective obj = [&](double x, double y) {
        return per_shape(x, y, opts.objective_prec).energy;
    };
    MinimizationResult res = minimize_shape(
        obj, opts,
        [&](double x, double y) {
            EnergyValue e;
            const Opt o = per_shape(x, y, opts.final_prec);
            e.value = o.energy;
            e.error_bound = std::abs(o.energy) * opts.final_prec.rel_tol * 4.0;
            e.method = "zeta-closed-area";
            return e;
        },
        1.0);
    const Opt o = per_shape(res.shape.x, res.shape.y, opts.final_prec);
    res.area = o.area;
    res.area_clamped = o.clamped;
    res.shape = make_lattice(res.shape.x, res.shape.y, o.area);
    return res;
}

// Three-variable (shape, area) search used by the Yukawa and
// power-minus-exponential families: area slices seed a simplex over
// (x, y, log area).
MinimizationResult global_slices(const PotentialSpec& f, double a_max, const SearchOptions& opts) {
    const int slices = 16;
    const Precision& op = opts.objective_prec;
    auto energy_at = [&](double x, double y, double A) {
        return eval_energy(f, make_lattice(x, y, A), op).value;
    };

    struct Cand {
        double x, y, A, v;
    };
    std::vector<Cand> best_per_slice(slices);
    std::vector<double> areas(slices);
    for (int s = 0; s < slices; ++s)
        areas[static_cast<std::size_t>(s)] =
            a_max * static_cast<double>(s + 1) / static_cast<double>(slices);
    // Coarser per-slice grid: the simplex phase does the real work. Slices
    // run serially; each inner grid scan already parallelizes over cells.
    const int snx = std::max(8, opts.nx / 3), sny = std::max(8, opts.ny / 3);
    for (std::size_t s = 0; s < static_cast<std::size_t>(slices); ++s) {
        const double A = areas[s];
        Objective obj = [&](double x, double y) { return energy_at(x, y, A); };
        const GridScan scan = scan_grid(obj, snx, sny, opts.y_cap, 1);
        best_per_slice[s] = scan.all_failed
                                ? Cand{0, 1, A, kInf}
                                : Cand{scan.top.front().x, scan.top.front().y, A,
                                       scan.top.front().value};
    }
    std::sort(best_per_slice.begin(), best_per_slice.end(), [](const Cand& a, const Cand& b) {
        if (a.v != b.v) return a.v < b.v;
        if (a.A != b.A) return a.A < b.A;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    if (!std::isfinite(best_per_slice.front().v))
        throw SlowConvergence("minimize_global: every slice cell failed to evaluate");

    const double lo_logA = std::log(a_max) - 14.0;  // area box (0, a_max]
    auto canon = [&](double& x, double& y, double& w) {
        x = clamp(x, 0.0, 0.5);
        y = clamp(y, floor_y(x), opts.y_cap);
        w = clamp(w, lo_logA, std::log(a_max));
    };
    auto eval3 = [&](double x, double y, double w) -> double {
        canon(x, y, w);
        try {
            return energy_at(x, y, std::exp(w));
        } catch (const SlowConvergence&) {
        } catch (const QuadratureFailure&) {
        } catch (const BudgetExceeded&) {
        }
        return kInf;
    };

    struct Pt {
        double x, y, w, v;
    };
    const int nstarts = std::min(opts.starts, slices);
    std::vector<Pt> winners(static_cast<std::size_t>(nstarts));
    parallel_for(static_cast<std::size_t>(nstarts), [&](std::size_t st) {
        const Cand& c = best_per_slice[st];
        const double hx = 0.35 / (snx - 1);
        const double hy = 0.7 * (opts.y_cap - 1.0) / (sny - 1);
        const double hw = 0.5 * std::log(static_cast<double>(slices + 1)) / slices;
        std::vector<Pt> s;
        const double w0 = std::log(c.A);
        for (auto [dx, dy, dw] : {std::array<double, 3>{0, 0, 0},
                                  {hx, 0, 0},
                                  {0, hy, 0},
                                  {0, 0, -hw}}) {
            double x = c.x + dx, y = c.y + dy, w = w0 + dw;
            canon(x, y, w);
            s.push_back(Pt{x, y, w, eval3(x, y, w)});
        }
        auto by_value = [](const Pt& a, const Pt& b) {
            if (a.v != b.v) return a.v < b.v;
            if (a.x != b.x) return a.x < b.x;
            if (a.y != b.y) return a.y < b.y;
            return a.w < b.w;
        };
        for (int it = 0; it < 2 * opts.refine_iters; ++it) {
            std::sort(s.begin(), s.end(), by_value);
            double diam = 0;
            for (int m = 1; m < 4; ++m)
                diam = std::max(diam, std::hypot(s[static_cast<std::size_t>(m)].x - s[0].x,
                                                 s[static_cast<std::size_t>(m)].y - s[0].y,
                                                 s[static_cast<std::size_t>(m)].w - s[0].w));
            if (diam < 1e-7) break;
            const double cx = (s[0].x + s[1].x + s[2].x) / 3.0;
            const double cy = (s[0].y + s[1].y + s[2].y) / 3.0;
            const double cw = (s[0].w + s[1].w + s[2].w) / 3.0;
            auto step = [&](double t) {
                double x = cx + t * (cx - s[3].x), y = cy + t * (cy - s[3].y),
                       w = cw + t * (cw - s[3].w);
                canon(x, y, w);
                return Pt{x, y, w, eval3(x, y, w)};
            };
            const Pt r = step(1.0);
            if (r.v < s[0].v) {
                const Pt e = step(2.0);
                s[3] = e.v < r.v ? e : r;
            } else if (r.v < s[2].v) {
                s[3] = r;
            } else {
                const Pt k = r.v < s[3].v ? step(0.5) : step(-0.5);
                if (k.v < std::min(r.v, s[3].v)) {
                    s[3] = k;
                } else {
                    for (int m = 1; m < 4; ++m) {
                        auto& pm = s[static_cast<std::size_t>(m)];
                        double x = s[0].x + 0.5 * (pm.x - s[0].x);
                        double y = s[0].y + 0.5 * (pm.y - s[0].y);
                        double w = s[0].w + 0.5 * (pm.w - s[0].w);
                        canon(x, y, w);
                        pm = Pt{x, y, w, eval3(x, y, w)};
                    }
                }
            }
        }
        std::sort(s.begin(), s.end(), by_value);
        winners[st] = s[0];
    });

    Pt best{best_per_slice.front().x, best_per_slice.front().y,
            std::log(best_per_slice.front().A), best_per_slice.front().v};
    for (const auto& w : winners)
        if (w.v < best.v) best = w;

    MinimizationResult out;
    const double area = std::exp(best.w);
    out.shape = make_lattice(best.x, best.y, area);
    out.area = area;
    out.energy = eval_energy(f, out.shape, opts.final_prec);
    out.classification = classify_shape(out.shape.x, out.shape.y, opts.shape_tol);
    out.shape_tol = opts.shape_tol;
    out.special_distance = special_shape_distance(out.shape.x, out.shape.y);
    out.grid_energy = best_per_slice.front().v;
    out.area_clamped = std::abs(best.w - std::log(a_max)) < 1e-12;
    return out;
}

}  // namespace

MinimizationResult minimize_global(const PotentialSpec& f, const SearchOptions& opts) {
    validate(f);
    return std::visit(
        Overload{
            [&](const LennardJonesType& g) { return global_lj(g, opts); },
            [&](const AttractiveRepulsiveYukawa& g) {
                const StationaryReport st = stationary_analysis(f);
                (void)g;
                return global_slices(f, st.alpha, opts);
            },
            [&](const OppBuckingham&) {
                const StationaryReport st = stationary_analysis(f);
                if (st.kind == StationaryKind::monotone)
                    throw NoWell(
                        "minimize_global: the potential is strictly decreasing; energy has no "
                        "area-free minimizer");
                MinimizationResult res = global_slices(f, std::sqrt(3.0) * st.r_max, opts);
                if (!(res.energy.value < 0))
                    throw NoWell(
                        "minimize_global: no negative-energy lattice in the search box; the "
                        "infimum 0 is approached by infinite dilution");
                return res;
            },
            [&](const auto&) -> MinimizationResult {
                // stationary_analysis rejects the monotone sum families.
                stationary_analysis(f);
                throw NoWell("minimize_global: family has no well");
            }},
        f);
}

std::vector<Table1Row> table1(const std::vector<std::pair<double, double>>& pairs, double a1,
                              double a2) {
    std::vector<Table1Row> rows;
    rows.reserve(pairs.size());
    for (const auto& [x1, x2] : pairs) {
        const LennardJonesType lj{a1, a2, x1, x2};
        validate(PotentialSpec{lj});
        const LJGlobalResult g = lj_global_check(lj);
        Table1Row row;
        row.x1 = x1;
        row.x2 = x2;
        row.y_min = std::pow(a2 * x2 / (a1 * x1), 1.0 / (2.0 * (x2 - x1)));
        row.r = std::sqrt(2.0 * g.minimizer_area / std::sqrt(3.0));
        row.d = 1.0 / g.minimizer_area;
        row.certified = g.holds;
        rows.push_back(row);
    }
    return rows;
}

std::vector<Table2Row> table2(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<Table2Row> rows;
    rows.reserve(pairs.size());
    for (const auto& [x1, x2] : pairs) {
        const PotentialSpec f{LennardJonesType{1.0, 1.0, x1, x2}};
        validate(f);
        rows.push_back(Table2Row{x1, x2, 1.0 / area_bound_low_density(f, make_square(1.0))});
    }
    return rows;
}

}  // namespace lopt
