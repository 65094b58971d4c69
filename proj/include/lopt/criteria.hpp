// criteria.hpp — certified area bounds and positivity criteria deciding when
// the triangular lattice is the unique fixed-area minimizer.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lopt/energy.hpp"
#include "lopt/lattice.hpp"
#include "lopt/potentials.hpp"
#include "lopt/precision.hpp"
#include "lopt/specfun.hpp"

namespace lopt {

struct GPTerm {
    double coefficient = 0;
    double exponent = 0;  // >= 0
};

// p(t) = sum_i coefficient_i * t^exponent_i with distinct exponents and a
// positive coefficient on the largest exponent.
struct GeneralizedPolynomial {
    std::vector<GPTerm> terms;
};

double gpoly_eval(const GeneralizedPolynomial& p, double t);
bool gpoly_has_negative(const GeneralizedPolynomial& p);

// Cauchy-style root bound: p(t) > 0 for every t > cauchy_bound(p).
// Returns 0 when no coefficient is negative (flag via gpoly_has_negative).
double cauchy_bound(const GeneralizedPolynomial& p);

struct BoundResult {
    double area_bound = 0;
    std::string route;        // which certificate produced the bound
    std::string inputs_echo;  // JSON echo of the potential
};

// Largest certified area below which the triangular lattice is the unique
// fixed-area minimizer (high-density regime). Throws NotApplicable when the
// potential is completely monotonic (every area is certified).
BoundResult area_bound_high_density(const PotentialSpec& f);

// Area beyond which the comparison lattice (area-normalized) has strictly
// lower energy than the triangular one, certifying non-optimality in the
// low-density regime. Pure inverse-power families with an attractive leading
// term only; throws NotApplicable otherwise.
double area_bound_low_density(const PotentialSpec& f,
                              const ReducedLattice& comparison = make_square(1.0),
                              const Precision& p = {});

// Largest exponential rate x1 for which the triangular lattice stays the
// unique minimizer of the power-minus-exponential family at every area
// A <= A0 (inverts the high-density bound; independent of f.x1).
double buckingham_rate_threshold(const OppBuckingham& f, double A0);

struct YukawaGlobalResult {
    bool holds = false;
    double lhs1 = 0, lhs2 = 0;  // the two certificate ratios (>= 1 required)
};
YukawaGlobalResult yukawa_global_check(const AttractiveRepulsiveYukawa& f);

struct LJGlobalResult {
    bool holds = false;
    double minimizer_area = 0;  // optimal area of the triangular candidate
};
LJGlobalResult lj_global_check(const LennardJonesType& f, const Precision& p = {});

// h(t) = pi^(-t) Gamma(t) t: the exponent-comparison function for the
// Lennard-Jones global certificate (holds iff h(x2) <= h(x1)).
double h_eval(double t);

struct HAnalysis {
    double argmin = 0;       // unique minimum of h on (0, inf)
    double conjugate_M = 0;  // h(conjugate_M) = h(1)
};
HAnalysis h_analysis();

// The conjugate exponent t >= argmin with h(t) = h(x1), for x1 in (1, argmin].
double h_conjugate_of(double x1);

struct CounterexampleInterval {
    double discriminant = 0;
    double A1 = 0, A2 = 0;  // open interval where the square beats triangular
};

// The three-term inverse-power potential 14 r^-2 - 40 r^-3 + 35 r^-4:
// interval of areas where the square lattice has lower energy.
CounterexampleInterval counterexample_interval(const Precision& p = {});

enum class ConditionStatus {
    certified_positive,
    certified_negative,
    sampled_positive,
    sampled_negative,
    inconclusive,
};
const char* to_string(ConditionStatus s);

struct ConditionReport {
    double area = 0;
    ConditionStatus status = ConditionStatus::inconclusive;
    // (y, value) samples backing the verdict; first entry is the minimizing
    // sample, negative verdicts list violating samples.
    std::vector<std::pair<double, double>> witnesses;
    std::string certification_route;
    std::optional<double> area_threshold;  // analytic threshold when known
};

// Decides g_A >= 0 on [1, inf): analytic certificates first (complete
// monotonicity, family area bounds), then dense sampling with a tail-
// dominance certificate.
ConditionReport check_sufficient_condition(const PotentialSpec& f, double A);

// Derivative criterion: mu >= 0 on [pi/A, inf) together with
// mu'(pi y / A) >= y^-3 mu'(pi/(A y)) on [1, inf). Families whose mu has
// step terms are rejected (UnsupportedFamily).
ConditionReport check_c1_criterion(const PotentialSpec& f, double A);

}  // namespace lopt
