// quadrature.hpp — adaptive Gauss–Kronrod (G7/K15) integration on a finite
// interval with caller-supplied interior breakpoints. Worst panel is split
// first; the loop is sequential, so results are deterministic.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "lopt/errors.hpp"

namespace lopt {

struct QuadOptions {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_panels = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0;
    int panels = 0;
};

namespace quad_detail {

// 15-point Kronrod nodes/weights and the embedded 7-point Gauss weights.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
};

template <class F>
Panel eval_panel(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        k15 += kWgk[j] * fsum;
        if (j % 2 == 1) g7 += kWg[j / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;
    return Panel{a, b, k15, std::abs(k15 - g7)};
}

}  // namespace quad_detail

// Integrates f over [knots.front(), knots.back()], starting from one panel per
// consecutive knot pair. Throws QuadratureFailure if the panel budget runs out
// before total error <= max(abs_tol, rel_tol * |integral|).
template <class F>
QuadResult integrate_adaptive(F&& f, std::vector<double> knots, const QuadOptions& opt = {}) {
    using quad_detail::Panel;
    if (knots.size() < 2) throw DomainError("integrate_adaptive: need at least two knots");
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    if (knots.size() < 2 || !(knots.front() < knots.back()))
        throw DomainError("integrate_adaptive: empty integration interval");

    auto worse = [](const Panel& p, const Panel& q) {
        if (p.error != q.error) return p.error < q.error;
        return p.a < q.a;  // stable tie-break
    };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);

    double total = 0.0, err = 0.0;
    int panels = 0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        Panel p = quad_detail::eval_panel(f, knots[i], knots[i + 1]);
        total += p.value;
        err += p.error;
        heap.push(p);
        ++panels;
    }

    const double min_width = 1e-15 * (knots.back() - knots.front());
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (panels >= opt.max_panels)
            throw QuadratureFailure("integrate_adaptive: panel budget exhausted");
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a < min_width)
            throw QuadratureFailure("integrate_adaptive: refinement stuck on a panel");
        Panel left = quad_detail::eval_panel(f, worst.a, mid);
        Panel right = quad_detail::eval_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return QuadResult{total, err, panels};
}

}  // namespace lopt
