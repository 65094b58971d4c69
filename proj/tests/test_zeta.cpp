// Tests for Epstein zeta: Dirichlet L-series closed forms vs direct
// summation, plus an independent brute-force box-sum oracle and the area
// scaling law.
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "lopt/errors.hpp"
#include "lopt/specfun.hpp"

using namespace lopt;

namespace {

// Truncated box sum of |p|^(-two_s) with an explicit tail allowance. The tail
// of the sum over |p| > R is asymptotically (2 pi / A) R^(2-t)/(t-2); we
// return that estimate with generous slack for use as a comparison band.
struct BruteZeta {
    double value;
    double tail_allowance;
};

BruteZeta brute_zeta(const ReducedLattice& L, double two_s, double r2max) {
    const double s = std::sqrt(L.area / L.y);
    const double ux = s, uy = 0.0;
    const double vx = s * L.x, vy = s * L.y;
    const double det = ux * vy - uy * vx;
    const double rmax = std::sqrt(r2max);
    const auto bound = [&](double ax, double ay) {
        return static_cast<std::int64_t>(std::floor(rmax * std::hypot(ax, ay) / std::abs(det))) + 2;
    };
    const std::int64_t M = bound(vy, vx);
    const std::int64_t N = bound(uy, ux);
    double sum = 0;
    for (std::int64_t m = -M; m <= M; ++m) {
        for (std::int64_t n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            const double px = m * ux + n * vx;
            const double py = m * uy + n * vy;
            const double r2 = px * px + py * py;
            if (r2 <= r2max) sum += std::pow(r2, -0.5 * two_s);
        }
    }
    const double tail = (2 * 3.14159265358979324 / L.area) *
                        std::pow(rmax, 2 - two_s) / (two_s - 2);
    return {sum, 3 * tail};
}

}  // namespace

TEST_CASE("closed forms agree with direct evaluation across exponents") {
    for (double two_s : {3.0, 4.0, 5.0, 6.0, 8.0, 12.0, 16.0, 18.0, 20.0}) {
        const double sq_closed = epstein_zeta_closed(LatticeShape::square, two_s);
        const double sq_direct = epstein_zeta_direct(make_square(1.0), two_s);
        CHECK(std::abs(sq_closed - sq_direct) <= 1e-10 * std::abs(sq_closed));

        const double tri_closed = epstein_zeta_closed(LatticeShape::triangular, two_s);
        const double tri_direct = epstein_zeta_direct(make_triangular(1.0), two_s);
        CHECK(std::abs(tri_closed - tri_direct) <= 1e-10 * std::abs(tri_closed));

        // At equal area and exponent the triangular lattice has the smaller zeta.
        CHECK(tri_closed < sq_closed);
    }
}

TEST_CASE("frozen reference values at unit area") {
    // Independently confirmed against high-precision Hurwitz-zeta evaluation
    // and raw lattice sums (the near-pole 2.2 values to 8+ digits by a direct
    // box sum over ~10^8 points).
    CHECK(epstein_zeta_closed(LatticeShape::square, 4) ==
          doctest::Approx(6.0268120396919418).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::square, 6) ==
          doctest::Approx(4.6589136156038427).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::square, 8) ==
          doctest::Approx(4.2814306608057802).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::triangular, 4) ==
          doctest::Approx(5.7833592996786720).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::triangular, 6) ==
          doctest::Approx(4.1412565472034153).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::triangular, 8) ==
          doctest::Approx(3.4337642671072457).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::square, 3) ==
          doctest::Approx(9.0336216831009484).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::triangular, 3) ==
          doctest::Approx(8.8927451003972866).epsilon(1e-14));
    CHECK(epstein_zeta_closed(LatticeShape::square, 2.2) ==
          doctest::Approx(34.036763772645891).epsilon(1e-13));
    CHECK(epstein_zeta_closed(LatticeShape::triangular, 2.2) ==
          doctest::Approx(33.957716072833861).epsilon(1e-13));
}

TEST_CASE("square-lattice zeta factorizes via the two-squares formula") {
    // zeta_{Z^2}(2s) = 4 zeta(s) beta(s); spot-check the s=2 instance
    // 4 * zeta(2) * Catalan.
    const double catalan = 0.91596559417721901505;
    CHECK(epstein_zeta_closed(LatticeShape::square, 4) ==
          doctest::Approx(4 * riemann_zeta(2) * catalan).epsilon(1e-13));
}

TEST_CASE("direct evaluation matches the brute-force box sum") {
    // Unit-area special shapes plus a generic shape; exponents on both sides
    // of the summation/integral route switch.
    const ReducedLattice generic = make_lattice(0.3, 1.2, 1.0);
    for (double two_s : {5.0, 8.0}) {
        const double r2max = (two_s >= 8) ? 1.0e4 : 2.5e5;
        for (const ReducedLattice& L :
             {make_square(1.0), make_triangular(1.0), generic}) {
            const BruteZeta oracle = brute_zeta(L, two_s, r2max);
            const double v = epstein_zeta_direct(L, two_s);
            CHECK(std::abs(v - oracle.value) <=
                  oracle.tail_allowance + 1e-10 * std::abs(v));
        }
    }
}

TEST_CASE("area scaling law") {
    // zeta_{L_A}(2s) = A^(-s) * zeta_{L_1}(2s) for the same shape.
    for (double two_s : {3.0, 4.0, 7.0}) {
        for (double A : {0.5, 2.0, 3.7}) {
            const double unit = epstein_zeta_closed(LatticeShape::triangular, two_s);
            const double scaled = epstein_zeta_direct(make_triangular(A), two_s);
            CHECK(scaled ==
                  doctest::Approx(std::pow(A, -0.5 * two_s) * unit).epsilon(1e-10));
        }
    }
}

TEST_CASE("integral route kicks in when the point budget is small") {
    // Forbid large enumerations: the result must still match the closed form
    // through the theta-integral route.
    Precision tight;
    tight.max_terms = 2000;
    const double v = epstein_zeta_direct(make_square(1.0), 3.0, tight);
    CHECK(v == doctest::Approx(epstein_zeta_closed(LatticeShape::square, 3.0)).epsilon(1e-9));
}

TEST_CASE("zeta domain and convergence errors") {
    CHECK_THROWS_AS(epstein_zeta_closed(LatticeShape::square, 2.0), DomainError);
    CHECK_THROWS_AS(epstein_zeta_closed(LatticeShape::triangular, 1.5), DomainError);
    CHECK_THROWS_AS(epstein_zeta_direct(make_square(1.0), 2.0), DomainError);
    // An unreachable tolerance exhausts both evaluation routes.
    Precision absurd;
    absurd.rel_tol = 1e-300;
    absurd.abs_tol = 0.0;
    absurd.max_terms = 100;
    CHECK_THROWS_AS(epstein_zeta_direct(make_square(1.0), 2.5, absurd), SlowConvergence);
}
