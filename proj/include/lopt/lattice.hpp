// lattice.hpp — 2D Bravais lattices: canonical reduced shape parameters,
// duals, and enumeration of squared-norm shells.
#pragma once

#include <cstdint>
#include <vector>

#include "lopt/errors.hpp"
#include "lopt/precision.hpp"

namespace lopt {

struct Basis2 {
    double ux = 0, uy = 0;  // first basis vector
    double vx = 0, vy = 0;  // second basis vector
};

// Canonical shape (x, y) in the fundamental domain
//     0 <= x <= 1/2,  y > 0,  x^2 + y^2 >= 1,
// together with the cell area. The represented lattice is
//     sqrt(area/y) * [ Z*(1,0) + Z*(x,y) ],
// i.e. shortest vector along the first axis. Reflections are quotiented
// (x is folded to be nonnegative); every energy handled here is invariant
// under them.
struct ReducedLattice {
    double x = 0.5;
    double y = 0.8660254037844386;
    double area = 1.0;
};

// One orbit of lattice vectors sharing a squared norm (origin excluded).
struct Shell {
    double r2 = 0;
    std::int64_t multiplicity = 0;
};

struct ShellList {
    std::vector<Shell> entries;  // sorted by r2 ascending
    double r2max = 0;            // enumeration radius actually used
};

// Lagrange–Gauss reduction of an arbitrary basis to canonical shape
// parameters. Throws DegenerateBasis when |det| < 1e-12 * |u| * |v|.
ReducedLattice reduce(const Basis2& b);

// Reduction of the basis (1,0),(x,y) scaled to the requested area; accepts
// any y > 0 (the point need not be in the fundamental domain yet).
// Throws NonPositiveArea / DomainError on bad inputs.
ReducedLattice make_lattice(double x, double y, double area);

ReducedLattice make_triangular(double area);
ReducedLattice make_square(double area);

// Dual lattice. In 2D the dual is the primal rotated by 90 degrees and
// scaled by 1/area, so the reduced shape is unchanged and area -> 1/area.
ReducedLattice dual(const ReducedLattice& L);

// Squared length of the shortest nonzero vector: area / y.
double min_norm2(const ReducedLattice& L);

// All shells with r2 <= r2max, merged at relative tolerance 1e-9.
// Throws BudgetExceeded when the enumeration would exceed the hard point cap.
ShellList shells(const ReducedLattice& L, double r2max);

}  // namespace lopt
