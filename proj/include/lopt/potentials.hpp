// potentials.hpp — the six admissible potential families, their JSON encoding,
// inverse Laplace transforms, and scalar analysis (monotonicity, wells).
#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lopt/errors.hpp"

namespace lopt {

// Minimum allowed spacing between consecutive exponents / rates.
inline constexpr double kExponentGap = 1e-9;

struct ScreenTerm {
    double a = 0;  // coefficient, nonzero
    double x = 0;  // screening rate, > 0
};

struct PowerTerm {
    double a = 0;  // coefficient, nonzero
    double x = 0;  // exponent
};

struct ExpTerm {
    double b = 0;  // coefficient, nonzero
    double t = 0;  // decay rate, > 0
};

// f(r) = sum_i a_i exp(-x_i r) / r, rates strictly increasing,
// sum a_i >= 0 (flagged when exactly zero).
struct ScreenedCoulombSum {
    std::vector<ScreenTerm> terms;
};

// f(r) = sum_i a_i r^(-x_i), 1 < x_1 < ... < x_n, a_n > 0.
struct InversePowerSum {
    std::vector<PowerTerm> terms;
};

// f(r) = a2 r^(-x2) - a1 r^(-x1), a1, a2 > 0, 1 < x1 < x2.
struct LennardJonesType {
    double a1 = 0, a2 = 0;
    double x1 = 0, x2 = 0;
};

// f(r) = (a2 exp(-x2 r) - a1 exp(-x1 r)) / r, 0 < a1 < a2, 0 < x1 < x2.
struct AttractiveRepulsiveYukawa {
    double a1 = 0, a2 = 0;
    double x1 = 0, x2 = 0;
};

// f(r) = sum_i a_i r^(-x_i) + sum_j b_j exp(-t_j sqrt(r)),
// x_i > 3/2 increasing with a_n > 0; t_j > 0.
struct ExpDecay {
    std::vector<PowerTerm> power_terms;
    std::vector<ExpTerm> exp_terms;
};

// f(r) = a2 r^(-x2) - a1 exp(-x1 sqrt(r)), a1, a2 > 0, x1 > 0, x2 > 3/2.
struct OppBuckingham {
    double a1 = 0, a2 = 0;
    double x1 = 0, x2 = 0;
};

using PotentialSpec = std::variant<ScreenedCoulombSum, InversePowerSum, LennardJonesType,
                                   AttractiveRepulsiveYukawa, ExpDecay, OppBuckingham>;

// Snake_case family tag used in the JSON encoding.
std::string family_name(const PotentialSpec& f);

// Checks all family constraints; throws ValidationError with a precise
// message. Returns non-fatal flags (e.g. screened sum exactly zero).
std::vector<std::string> validate(const PotentialSpec& f);

// Strict JSON round-trip: {"family": "...", ...fields...}. Unknown fields,
// missing fields, and wrong types are rejected (ParseError for malformed
// JSON, ValidationError for schema/constraint violations).
PotentialSpec parse_potential_json(const std::string& text);
std::string potential_to_json(const PotentialSpec& f);

// Pointwise value f(r), r > 0 (r is the squared point norm in energy sums).
double evaluate(const PotentialSpec& f, double r);

// mu with f(r) = int_0^inf exp(-r y) mu(y) dy, decomposed by term kind:
//   power:  c * y^e            (from a r^(-x): c = a/Gamma(x), e = x-1)
//   step:   a * [y >= x]       (from a exp(-x r)/r)
//   heat:   c * y^(-3/2) * exp(-q^2/(4y))
//           (from b exp(-t sqrt(r)): c = b t/(2 sqrt(pi)), q = t)
struct MuPowerTerm {
    double c = 0, e = 0;
};
struct MuStepTerm {
    double a = 0, x = 0;
};
struct MuHeatTerm {
    double c = 0, q = 0;
};

struct InverseLaplaceForm {
    std::vector<MuPowerTerm> power_terms;
    std::vector<MuStepTerm> step_terms;
    std::vector<MuHeatTerm> heat_terms;
};

InverseLaplaceForm inverse_laplace(const PotentialSpec& f);

double mu_eval(const InverseLaplaceForm& mu, double y);
// d mu / dy; throws UnsupportedFamily when step terms are present.
double mu_derivative(const InverseLaplaceForm& mu, double y);

enum class MonotonicityClass {
    completely_monotonic,
    not_cm_certified,
    unknown_sampled_nonneg,
    unknown_sampled_negative,
};
const char* to_string(MonotonicityClass c);

struct MonotonicityReport {
    MonotonicityClass cls = MonotonicityClass::unknown_sampled_nonneg;
    // (y, mu(y)) samples backing the verdict; for negative verdicts the first
    // entries witness mu < 0.
    std::vector<std::pair<double, double>> witnesses;
};

// Complete monotonicity of f via the sign of mu. Exact for families whose mu
// sign is decidable in closed form; sampled (with witnesses) otherwise.
MonotonicityReport classify_monotonicity(const PotentialSpec& f);

enum class StationaryKind {
    monotone,         // no stationary point: f strictly decreasing
    single_minimum,   // one interior minimum (LJ)
    yukawa_threshold, // increasing auxiliary g with root alpha
    window,           // local min at r_m, local max at r_M (Buckingham case)
};
const char* to_string(StationaryKind k);

struct StationaryReport {
    StationaryKind kind = StationaryKind::monotone;
    double r_min = 0;    // location of the minimum (single_minimum / window)
    double f_min = 0;    // value there
    double alpha = 0;    // yukawa_threshold root
    double r_max = 0;    // window local max
    std::string description;
};

// Well structure of f for the families with one (LJ, Yukawa, Buckingham).
// Throws UnsupportedFamily for the sum families.
StationaryReport stationary_analysis(const PotentialSpec& f);

}  // namespace lopt
