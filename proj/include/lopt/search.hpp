// search.hpp — grid + derivative-free simplex minimization of lattice energy
// over the fundamental domain (fixed area and area-free), shape
// classification, and the closed-form global-minimizer tables for
// Lennard-Jones-type potentials.
#pragma once

#include <utility>
#include <vector>

#include "lopt/energy.hpp"
#include "lopt/lattice.hpp"
#include "lopt/potentials.hpp"
#include "lopt/precision.hpp"

namespace lopt {

enum class ShapeClass { triangular, square, rectangular, rhombic, generic };
const char* to_string(ShapeClass c);

// Precedence: triangular, square (Euclidean distance <= tol to the special
// point), rectangular (x <= tol), rhombic (|x^2+y^2-1| <= tol or
// |x-1/2| <= tol), else generic.
ShapeClass classify_shape(double x, double y, double tol = 1e-4);

// Distance from (x, y) to the nearest special shape set (triangular point,
// square point, rectangular line, rhombic circle/line).
double special_shape_distance(double x, double y);

struct SearchOptions {
    int nx = 60;    // grid columns over x in [0, 1/2]
    int ny = 60;    // grid rows over y in [sqrt(1-x^2), y_cap]
    double y_cap = 8.0;        // auto-doubled (max 3 times) if the top row wins
    int refine_iters = 200;    // simplex iterations per start
    double shape_tol = 1e-4;   // classification tolerance of the result
    int starts = 5;            // multistart count (best distinct grid cells)
    Precision objective_prec = {1e-9, 1e-12, 1'000'000};  // during the search
    Precision final_prec = {1e-10, 1e-13, 1'000'000};     // result re-evaluation
};

struct MinimizationResult {
    ReducedLattice shape;  // minimizer at the result area
    double area = 0;
    EnergyValue energy;
    ShapeClass classification = ShapeClass::generic;
    double shape_tol = 0;
    double special_distance = 0;  // distance to nearest special shape
    double grid_energy = 0;       // best coarse-grid value (refined <= this)
    bool area_clamped = false;    // area-free search: optimum sat on the box edge
};

// Minimize E_f over lattice shapes of fixed area A: coarse grid, then simplex
// refinement from the best `starts` cells. Throws UnboundedBelow when the
// minimum keeps escaping through the y_cap ceiling after 3 doublings.
MinimizationResult minimize_fixed_area(const PotentialSpec& f, double A,
                                       const SearchOptions& opts = {});

// Same search with the Gaussian objective theta_L(alpha) at fixed area.
MinimizationResult minimize_theta_fixed_area(double alpha, double A,
                                             const SearchOptions& opts = {});

// Grid-only argmin of theta_L(alpha) at fixed area (no refinement): the
// Montgomery-scan oracle. Returns the best grid cell's shape.
ReducedLattice theta_grid_argmin(double alpha, double A, const SearchOptions& opts = {});

// Area-free minimization for families with a negative well (Lennard-Jones
// type, attractive-repulsive Yukawa, power-minus-exponential window case).
// The area box (0, A_max] comes from the family's contraction bound. Throws
// NoWell for monotone potentials or when no negative energy exists in the box.
MinimizationResult minimize_global(const PotentialSpec& f, const SearchOptions& opts = {});

struct Table1Row {
    double x1 = 0, x2 = 0;
    double y_min = 0;     // minimizer of y -> V(y^2)
    double r = 0;         // nearest-neighbor length of the global minimizer
    double d = 0;         // density 1/area of the global minimizer
    bool certified = false;  // h(x2) <= h(x1) held for this pair
};

// Closed-form global-minimizer data per (x1, x2) pair for the a=(a1,a2)
// Lennard-Jones family.
std::vector<Table1Row> table1(const std::vector<std::pair<double, double>>& pairs,
                              double a1 = 1.0, double a2 = 1.0);

struct Table2Row {
    double x1 = 0, x2 = 0;
    double d0 = 0;  // below this density the square lattice beats triangular
};

// Critical non-optimality densities (square comparison) for the a=(1,1)
// Lennard-Jones family.
std::vector<Table2Row> table2(const std::vector<std::pair<double, double>>& pairs);

}  // namespace lopt
