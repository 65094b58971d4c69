// Tests for shape classification and the energy-minimization searches
// (fixed area, theta objective, and area-free global).
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lopt/criteria.hpp"
#include "lopt/energy.hpp"
#include "lopt/errors.hpp"
#include "lopt/parallel.hpp"
#include "lopt/potentials.hpp"
#include "lopt/search.hpp"
#include "lopt/specfun.hpp"

using namespace lopt;

namespace {

constexpr double kTriY = 0.8660254037844386;

const PotentialSpec kLJ = LennardJonesType{2.0, 1.0, 3.0, 6.0};
const PotentialSpec kYukawa = AttractiveRepulsiveYukawa{1.0, 2.0, 1.0, 2.0};
const PotentialSpec kThreeTerm =
    InversePowerSum{{{14.0, 2.0}, {-40.0, 3.0}, {35.0, 4.0}}};

SearchOptions small_grid(int n, int starts = 3, int iters = 150) {
    SearchOptions o;
    o.nx = n;
    o.ny = n;
    o.starts = starts;
    o.refine_iters = iters;
    return o;
}

double closed_energy_tri(const std::vector<std::pair<double, double>>& ax, double A) {
    double e = 0;
    for (auto [a, x] : ax)
        e += a * std::pow(A, -x) * epstein_zeta_closed(LatticeShape::triangular, 2 * x);
    return e;
}

double closed_energy_sq(const std::vector<std::pair<double, double>>& ax, double A) {
    double e = 0;
    for (auto [a, x] : ax)
        e += a * std::pow(A, -x) * epstein_zeta_closed(LatticeShape::square, 2 * x);
    return e;
}

const std::vector<std::pair<double, double>> kThreeTermAX = {
    {14.0, 2.0}, {-40.0, 3.0}, {35.0, 4.0}};

}  // namespace

TEST_CASE("shape classification precedence and tolerances") {
    CHECK(classify_shape(0.5, kTriY) == ShapeClass::triangular);
    CHECK(classify_shape(0.0, 1.0) == ShapeClass::square);
    CHECK(classify_shape(0.0, 1.4) == ShapeClass::rectangular);
    CHECK(classify_shape(0.3, std::sqrt(1 - 0.09)) == ShapeClass::rhombic);  // unit circle
    CHECK(classify_shape(0.5, 1.2) == ShapeClass::rhombic);                  // x = 1/2 edge
    CHECK(classify_shape(0.2, 1.3) == ShapeClass::generic);

    // Near-misses resolve by tolerance.
    CHECK(classify_shape(0.5 - 5e-5, kTriY + 5e-5, 1e-4) == ShapeClass::triangular);
    CHECK(classify_shape(0.5 - 5e-5, kTriY + 5e-5, 1e-6) == ShapeClass::generic);
    CHECK(classify_shape(0.5, kTriY + 5e-5, 1e-6) == ShapeClass::rhombic);  // on the edge
    CHECK(classify_shape(5e-5, 1.0, 1e-4) == ShapeClass::square);
    CHECK(classify_shape(5e-5, 1.3, 1e-4) == ShapeClass::rectangular);
    CHECK_THROWS_AS(classify_shape(0.1, 1.0, 0.0), DomainError);

    CHECK(special_shape_distance(0.5, kTriY) == doctest::Approx(0.0));
    CHECK(special_shape_distance(0.0, 1.7) == doctest::Approx(0.0));
    CHECK(special_shape_distance(0.25, std::sqrt(1 - 0.0625)) == doctest::Approx(0.0));
    CHECK(special_shape_distance(0.2, 1.3) > 0.01);
}

TEST_CASE("theta grid argmin lands exactly on the triangular node") {
    // The scan grid contains (1/2, sqrt(3)/2) as a node; for the Gaussian
    // objective that node must win at every width.
    for (double alpha : {0.5, 1.0, 2.0}) {
        SearchOptions o = small_grid(30);
        const ReducedLattice R = theta_grid_argmin(alpha, 1.0, o);
        CHECK(R.x == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(R.y == doctest::Approx(kTriY).epsilon(1e-12));
    }
}

TEST_CASE("theta minimization refines to the triangular point") {
    const MinimizationResult r = minimize_theta_fixed_area(1.0, 1.0, small_grid(16, 2, 120));
    CHECK(r.classification == ShapeClass::triangular);
    CHECK(r.special_distance <= 1e-6);
    CHECK(r.energy.method == "theta");
    CHECK(r.energy.value <= r.grid_energy + 1e-9 * std::abs(r.grid_energy));
    CHECK(r.energy.value == doctest::Approx(theta(make_triangular(1.0), 1.0)).epsilon(1e-9));
}

TEST_CASE("fixed-area phases of the three-term well") {
    // High density: triangular.
    const MinimizationResult lo = minimize_fixed_area(kThreeTerm, 1.0, small_grid(18));
    CHECK(lo.classification == ShapeClass::triangular);
    CHECK(lo.energy.value ==
          doctest::Approx(closed_energy_tri(kThreeTermAX, 1.0)).epsilon(1e-8));

    // Intermediate area: the square lattice is the exact minimizer.
    const MinimizationResult mid = minimize_fixed_area(kThreeTerm, 2.5, small_grid(18));
    CHECK(mid.classification == ShapeClass::square);
    CHECK(mid.special_distance <= 1e-7);
    CHECK(mid.energy.value ==
          doctest::Approx(closed_energy_sq(kThreeTermAX, 2.5)).epsilon(1e-8));

    // Past the square window the minimizer slides along the rectangular edge.
    const MinimizationResult hi = minimize_fixed_area(kThreeTerm, 3.0, small_grid(18));
    CHECK(hi.classification == ShapeClass::rectangular);
    CHECK(hi.shape.x == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(hi.shape.y == doctest::Approx(1.27706).epsilon(1e-4));
    CHECK(hi.energy.value == doctest::Approx(4.311042).epsilon(1e-5));
    // Strictly below both named competitors at the same area.
    CHECK(hi.energy.value < closed_energy_sq(kThreeTermAX, 3.0) - 1e-4);
    CHECK(hi.energy.value < closed_energy_tri(kThreeTermAX, 3.0) - 1e-4);
    CHECK(hi.energy.value <= hi.grid_energy + 1e-6 * std::abs(hi.grid_energy));
}

TEST_CASE("completely monotone potentials minimize at triangular for any area") {
    const PotentialSpec cm = ScreenedCoulombSum{{{1.0, 1.0}, {1.0, 2.0}}};
    for (double A : {0.7, 2.0}) {
        const MinimizationResult r = minimize_fixed_area(cm, A, small_grid(14, 2, 100));
        CHECK(r.classification == ShapeClass::triangular);
        CHECK(r.special_distance <= 1e-6);
    }
}

TEST_CASE("non-coercive potential escapes through the elongation ceiling") {
    // Coefficient sum zero with a negative prefix: energy decreases without
    // bound along degenerating shapes.
    const PotentialSpec collapse = ScreenedCoulombSum{{{-1.0, 1.0}, {1.0, 2.0}}};
    CHECK_THROWS_AS(minimize_fixed_area(collapse, 1.0, small_grid(8, 1, 30)), UnboundedBelow);
}

TEST_CASE("area-free global minimum: certified Lennard-Jones pair") {
    // (x1, x2) = (2, 3) satisfies the h-comparison, so the global minimizer
    // is triangular at the closed-form area.
    const LennardJonesType lj{1.0, 1.0, 2.0, 3.0};
    const LJGlobalResult cert = lj_global_check(lj);
    CHECK(cert.holds);
    const MinimizationResult r = minimize_global(PotentialSpec{lj}, small_grid(16, 2, 80));
    CHECK(r.classification == ShapeClass::triangular);
    CHECK(r.area == doctest::Approx(cert.minimizer_area).epsilon(1e-6));
    CHECK(r.energy.method == "zeta-closed-area");
    CHECK(!r.area_clamped);
    CHECK(r.energy.value < 0);
    CHECK(r.energy.value ==
          doctest::Approx(closed_energy_tri({{-1.0, 2.0}, {1.0, 3.0}}, cert.minimizer_area))
              .epsilon(1e-8));
}

TEST_CASE("area-free global minimum: deep well outside the certificate") {
    // (3, 6) fails the h-comparison, yet the search still finds the
    // triangular lattice at the stationary area.
    const MinimizationResult r = minimize_global(kLJ, small_grid(16, 2, 80));
    CHECK(r.classification == ShapeClass::triangular);
    CHECK(r.area == doctest::Approx(0.84912356472977035).epsilon(1e-6));
    CHECK(r.energy.value ==
          doctest::Approx(closed_energy_tri({{-2.0, 3.0}, {1.0, 6.0}}, 0.84912356472977035))
              .epsilon(1e-8));
}

TEST_CASE("area-free global minimum: yukawa well") {
    const MinimizationResult r = minimize_global(kYukawa, {});
    CHECK(r.classification == ShapeClass::triangular);
    CHECK(r.area == doctest::Approx(0.8626044376141812).epsilon(1e-7));
    CHECK(r.energy.value == doctest::Approx(-0.7010531287773012).epsilon(1e-9));
    CHECK(r.energy.value <= r.grid_energy);
    // The area stays inside the contraction box given by the threshold root.
    const StationaryReport st = stationary_analysis(kYukawa);
    CHECK(r.area <= st.alpha + 1e-12);
}

TEST_CASE("global search rejects well-free potentials") {
    // Strictly positive three-term well: infimum 0 at infinite dilution.
    CHECK_THROWS_AS(minimize_global(kThreeTerm, small_grid(8)), UnsupportedFamily);
    CHECK_THROWS_AS(
        minimize_global(PotentialSpec{ScreenedCoulombSum{{{1.0, 1.0}}}}, small_grid(8)),
        UnsupportedFamily);
    // Monotone decreasing Buckingham: no stationary window.
    CHECK_THROWS_AS(
        minimize_global(PotentialSpec{OppBuckingham{0.01, 100.0, 5.0, 2.0}}, small_grid(8)),
        NoWell);
}

TEST_CASE("closed-form minimizer tables") {
    const std::vector<std::pair<double, double>> pairs = {{1.1, 2.0}, {2.0, 3.0}};
    const std::vector<Table1Row> t1 = table1(pairs);
    REQUIRE(t1.size() == 2);
    // y_min = (x2/x1)^(1/(2(x2-x1))): zeta-free closed form.
    CHECK(t1[0].y_min == doctest::Approx(std::pow(2.0 / 1.1, 1 / 1.8)).epsilon(1e-12));
    CHECK(t1[1].y_min == doctest::Approx(std::pow(1.5, 0.5)).epsilon(1e-12));
    for (const Table1Row& row : t1) {
        const LJGlobalResult g = lj_global_check({1.0, 1.0, row.x1, row.x2});
        CHECK(row.d == doctest::Approx(1.0 / g.minimizer_area).epsilon(1e-12));
        CHECK(row.r ==
              doctest::Approx(std::sqrt(2 * g.minimizer_area / std::sqrt(3.0))).epsilon(1e-12));
        CHECK(row.certified == g.holds);
    }

    const std::vector<Table2Row> t2 = table2(pairs);
    REQUIRE(t2.size() == 2);
    for (const Table2Row& row : t2) {
        const double bound =
            area_bound_low_density(PotentialSpec{LennardJonesType{1.0, 1.0, row.x1, row.x2}});
        CHECK(row.d0 == doctest::Approx(1.0 / bound).epsilon(1e-12));
    }
    // Frozen spot values (closed zeta forms, independently confirmed).
    const std::vector<Table2Row> spots = table2({{2.0, 3.0}, {9.0, 10.0}});
    CHECK(spots[0].d0 == doctest::Approx(0.470297).epsilon(1e-5));
    CHECK(spots[1].d0 == doctest::Approx(0.9161).epsilon(1e-4));
}

TEST_CASE("results are deterministic and thread-count independent") {
    const SearchOptions o = small_grid(12, 2, 60);
    set_worker_count(1);
    const MinimizationResult a = minimize_fixed_area(kYukawa, 1.0, o);
    set_worker_count(4);
    const MinimizationResult b = minimize_fixed_area(kYukawa, 1.0, o);
    set_worker_count(0);
    CHECK(a.shape.x == b.shape.x);  // bitwise equality expected
    CHECK(a.shape.y == b.shape.y);
    CHECK(a.energy.value == b.energy.value);
    CHECK(a.grid_energy == b.grid_energy);
}
