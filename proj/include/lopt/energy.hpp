// energy.hpp — interaction energy per point, E_f[L] = sum_{p != 0} f(|p|^2),
// by direct summation and by the theta-function integral representation.
#pragma once

#include <optional>
#include <string>

#include "lopt/lattice.hpp"
#include "lopt/potentials.hpp"
#include "lopt/precision.hpp"

namespace lopt {

struct EnergyValue {
    double value = 0;
    double error_bound = 0;
    std::string method;                // "direct" or "integral"
    double cutoff_r2 = 0;              // largest enumeration radius used
    std::optional<double> constant_CA; // additive constant (integral method)
};

// Term-wise summation over shells; inverse-power terms fall back to the
// theta-integral zeta evaluation when shell summation cannot meet tolerance
// within the point budget.
EnergyValue energy_direct(const PotentialSpec& f, const ReducedLattice& L, const Precision& p = {});

// Integral form: E = (pi/A) * int_1^inf (theta_L(y/(2A)) - 1) g_A(y) dy + C_A,
// with C_A evaluated in closed form per mu-term. Agrees with energy_direct
// within combined error bounds.
EnergyValue energy_integral(const PotentialSpec& f, const ReducedLattice& L,
                            const Precision& p = {});

// Integrand factor g_A(y) = y^(-1) mu_f(pi/(y A)) + mu_f(pi y / A).
// Nonnegativity of g_A on [1, inf) certifies the triangular lattice as the
// unique fixed-area minimizer at area A.
double g_eval(const PotentialSpec& f, double A, double y);
double g_eval(const InverseLaplaceForm& mu, double A, double y);

// Smallest Y such that g_A >= 0 on [Y, inf) is certified by term dominance;
// empty when no such certificate exists for this mu/A.
std::optional<double> g_tail_nonneg_from(const InverseLaplaceForm& mu, double A);

}  // namespace lopt
