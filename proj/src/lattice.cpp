#include "lopt/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace lopt {

namespace {

double dot(double ax, double ay, double bx, double by) { return ax * bx + ay * by; }
double norm2(double ax, double ay) { return ax * ax + ay * ay; }

}  // namespace

ReducedLattice reduce(const Basis2& b) {
    double ux = b.ux, uy = b.uy, vx = b.vx, vy = b.vy;
    const double det0 = ux * vy - uy * vx;
    const double nu = std::sqrt(norm2(ux, uy));
    const double nv = std::sqrt(norm2(vx, vy));
    if (!(std::abs(det0) >= 1e-12 * nu * nv))
        throw DegenerateBasis("reduce: basis vectors are (numerically) collinear");

    // Lagrange–Gauss: keep u the shorter vector, subtract the nearest integer
    // multiple of u from v until v is no shorter than u.
    if (norm2(ux, uy) > norm2(vx, vy)) {
        std::swap(ux, vx);
        std::swap(uy, vy);
    }
    for (int iter = 0; iter < 64; ++iter) {
        const double t = std::floor(dot(vx, vy, ux, uy) / norm2(ux, uy) + 0.5);
        vx -= t * ux;
        vy -= t * uy;
        if (norm2(vx, vy) >= norm2(ux, uy)) break;
        std::swap(ux, vx);
        std::swap(uy, vy);
    }

    const double u2 = norm2(ux, uy);
    const double det = std::abs(ux * vy - uy * vx);
    // Shape parameters of v in the frame where u -> (|u|, 0), normalized by |u|.
    double x = dot(ux, uy, vx, vy) / u2;
    double y = det / u2;
    x = std::abs(x);           // reflection quotient
    if (x > 0.5) x = 1.0 - x;  // rounding spill from the nearest-multiple step
    if (x * x + y * y < 1.0) y = std::sqrt(std::max(1.0 - x * x, 0.0));
    return ReducedLattice{x, y, det};
}

ReducedLattice make_lattice(double x, double y, double area) {
    if (!(area > 0)) throw NonPositiveArea("make_lattice: area must be positive");
    if (!(y > 0)) throw DomainError("make_lattice: y must be positive");
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(area))
        throw DomainError("make_lattice: non-finite shape parameter");
    const double s = std::sqrt(area / y);
    return reduce(Basis2{s, 0.0, s * x, s * y});
}

ReducedLattice make_triangular(double area) {
    if (!(area > 0)) throw NonPositiveArea("make_triangular: area must be positive");
    return ReducedLattice{0.5, std::sqrt(3.0) / 2.0, area};
}

ReducedLattice make_square(double area) {
    if (!(area > 0)) throw NonPositiveArea("make_square: area must be positive");
    return ReducedLattice{0.0, 1.0, area};
}

ReducedLattice dual(const ReducedLattice& L) { return ReducedLattice{L.x, L.y, 1.0 / L.area}; }

double min_norm2(const ReducedLattice& L) { return L.area / L.y; }

ShellList shells(const ReducedLattice& L, double r2max) {
    if (!(r2max > 0)) throw DomainError("shells: r2max must be positive");
    const double s2 = L.area / L.y;  // |u|^2
    const double ux = std::sqrt(s2), uy = 0.0;
    const double vx = ux * L.x, vy = ux * L.y;
    const double u2 = s2;
    const double v2 = s2 * (L.x * L.x + L.y * L.y);
    const double uv = s2 * L.x;

    // |i| <= R*|v|/area and |j| <= R*|u|/area (dual-basis box bound).
    const double R = std::sqrt(r2max);
    const auto imax = static_cast<std::int64_t>(std::floor(R * std::sqrt(v2) / L.area));
    const auto jmax = static_cast<std::int64_t>(std::floor(R * std::sqrt(u2) / L.area));
    const double est = (2.0 * static_cast<double>(imax) + 1) * (2.0 * static_cast<double>(jmax) + 1);
    if (est > static_cast<double>(kHardPointBudget))
        throw BudgetExceeded("shells: enumeration box exceeds the hard point budget");

    std::vector<double> r2s;
    r2s.reserve(static_cast<std::size_t>(std::min(est, 3.6 * r2max / L.area + 64.0)));
    for (std::int64_t i = -imax; i <= imax; ++i) {
        // Solve v2*j^2 + 2*i*uv*j + i^2*u2 - r2max <= 0 for the j range.
        const double bq = static_cast<double>(i) * uv;
        const double disc = bq * bq - v2 * (static_cast<double>(i) * static_cast<double>(i) * u2 - r2max);
        if (disc < 0) continue;
        const double sq = std::sqrt(disc);
        const auto jlo = static_cast<std::int64_t>(std::ceil((-bq - sq) / v2 - 1e-12));
        const auto jhi = static_cast<std::int64_t>(std::floor((-bq + sq) / v2 + 1e-12));
        for (std::int64_t j = jlo; j <= jhi; ++j) {
            if (i == 0 && j == 0) continue;
            const double px = static_cast<double>(i) * ux + static_cast<double>(j) * vx;
            const double py = static_cast<double>(i) * uy + static_cast<double>(j) * vy;
            const double r2 = px * px + py * py;
            if (r2 <= r2max * (1.0 + 1e-12)) r2s.push_back(r2);
        }
    }
    std::sort(r2s.begin(), r2s.end());

    ShellList out;
    out.r2max = r2max;
    for (std::size_t k = 0; k < r2s.size();) {
        std::size_t e = k + 1;
        double sum = r2s[k];
        while (e < r2s.size() && r2s[e] - r2s[k] <= 1e-9 * r2s[k]) {
            sum += r2s[e];
            ++e;
        }
        out.entries.push_back(Shell{sum / static_cast<double>(e - k), static_cast<std::int64_t>(e - k)});
        k = e;
    }
    return out;
}

}  // namespace lopt
