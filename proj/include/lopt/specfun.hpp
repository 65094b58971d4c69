// specfun.hpp — scalar special functions plus the lattice theta function and
// Epstein zeta evaluations built on them.
#pragma once

#include <memory>

#include "lopt/lattice.hpp"
#include "lopt/precision.hpp"

namespace lopt {

// Hurwitz zeta  sum_{k>=0} (x+k)^(-s)  via Euler–Maclaurin. Requires x > 0,
// s != 1. Throws DomainError otherwise.
double hurwitz_zeta(double s, double x, const Precision& p = {});

// Riemann zeta(s) = hurwitz_zeta(s, 1).
double riemann_zeta(double s, const Precision& p = {});

enum class GammaKind { gamma, log_gamma, digamma };

// Gamma-family dispatcher on t > 0.
double gamma_like(GammaKind kind, double t);

double digamma(double t);   // t > 0
double trigamma(double t);  // t > 0

// Inverse of digamma on (0, inf): returns t with psi(t) = target.
// Newton iteration with a monotone bracket; |psi(result) - target| <= 1e-10.
double digamma_inverse(double target);

// theta_L(alpha) = sum_{p in L} exp(-2*pi*alpha*|p|^2), origin included.
// For alpha below 1/(2*area) the sum is folded through the dual lattice
// (theta_L(alpha) = theta_dual(1/(4*alpha)) / (2*alpha*area)), so any
// alpha > 0 is cheap.
double theta(const ReducedLattice& L, double alpha, const Precision& p = {});

// theta_L(alpha) - 1 computed without forming the subtraction, so values far
// below machine epsilon relative to 1 keep full precision. Only meaningful
// accuracy gain in the direct regime alpha >= 1/(2*area); below that the
// dual fold is used and the subtraction is benign (theta >> 1).
double theta_punctured(const ReducedLattice& L, double alpha, const Precision& p = {});

// Reusable theta evaluator: caches the shell enumeration of the lattice (and
// its dual on demand) across many alpha values. Not thread-safe; build one
// per thread.
class ThetaSums {
public:
    ThetaSums(const ReducedLattice& L, const Precision& p = {});
    ~ThetaSums();
    ThetaSums(ThetaSums&&) noexcept;
    ThetaSums& operator=(ThetaSums&&) noexcept;

    double value(double alpha) const;
    double punctured(double alpha) const;
    // Largest shell radius enumerated so far on the primal side.
    double primal_cutoff_r2() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

enum class LatticeShape { square, triangular };

// Epstein zeta  sum_{p != 0} |p|^(-two_s)  at unit area, from Dirichlet
// L-series closed forms (two_s > 2).
double epstein_zeta_closed(LatticeShape shape, double two_s, const Precision& p = {});

// Epstein zeta of an arbitrary lattice by summation: plain shell sums when
// the point budget allows, otherwise an exponentially convergent integral
// of the theta function against alpha^(s-1) (plus its dual-side twin).
// Throws SlowConvergence when neither route fits the budget.
double epstein_zeta_direct(const ReducedLattice& L, double two_s, const Precision& p = {});

}  // namespace lopt
