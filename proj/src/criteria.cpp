#include "lopt/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lopt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

std::vector<GPTerm> sorted_terms(const GeneralizedPolynomial& p) {
    if (p.terms.empty()) throw DomainError("generalized polynomial: needs at least one term");
    std::vector<GPTerm> ts = p.terms;
    std::sort(ts.begin(), ts.end(),
              [](const GPTerm& a, const GPTerm& b) { return a.exponent < b.exponent; });
    for (const auto& t : ts)
        if (!(t.exponent >= 0))
            throw DomainError("generalized polynomial: exponents must be >= 0");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ts[i].exponent - ts[i - 1].exponent < 1e-9)
            throw DomainError("generalized polynomial: exponents must be distinct");
    if (!(ts.back().coefficient > 0))
        throw DomainError("generalized polynomial: leading coefficient must be positive");
    return ts;
}

}  // namespace

double gpoly_eval(const GeneralizedPolynomial& p, double t) {
    if (!(t > 0)) throw DomainError("gpoly_eval: t must be positive");
    double s = 0;
    for (const auto& term : p.terms) s += term.coefficient * std::pow(t, term.exponent);
    return s;
}

bool gpoly_has_negative(const GeneralizedPolynomial& p) {
    for (const auto& term : p.terms)
        if (term.coefficient < 0) return true;
    return false;
}

double cauchy_bound(const GeneralizedPolynomial& p) {
    const std::vector<GPTerm> ts = sorted_terms(p);
    const double cn = ts.back().coefficient;
    const double en = ts.back().exponent;
    double lambda = 0;
    for (const auto& t : ts)
        if (t.coefficient < 0) lambda += 1.0;
    if (lambda == 0) return 0.0;
    double bound = 0.0;
    for (const auto& t : ts)
        if (t.coefficient < 0)
            bound = std::max(
                bound, std::pow(lambda * -t.coefficient / cn, 1.0 / (en - t.exponent)));
    return bound;
}

namespace {

std::string echo(const PotentialSpec& f) { return potential_to_json(f); }

BoundResult hd_screened(const ScreenedCoulombSum& g, const PotentialSpec& f) {
    double total = 0;
    for (const auto& t : g.terms) total += t.a;
    double bound = kInf;
    double prefix = 0;
    bool any_negative_prefix = false;
    for (std::size_t k = 0; k + 1 < g.terms.size(); ++k) {
        prefix += g.terms[k].a;
        if (prefix < 0) {
            any_negative_prefix = true;
            bound = std::min(bound, (kPi / g.terms[k + 1].x) * (-total / prefix));
        }
    }
    if (!any_negative_prefix)
        throw NotApplicable(
            "area_bound_high_density: no negative prefix sum, the potential is completely "
            "monotonic and every area is certified");
    bound = std::min(bound, kPi / g.terms.back().x);
    return {bound, "screened-prefix-certificate", echo(f)};
}

BoundResult hd_inverse_power(const std::vector<PowerTerm>& terms, const PotentialSpec& f) {
    const double an = terms.back().a;
    const double xn = terms.back().x;
    double nneg = 0;
    for (const auto& t : terms)
        if (t.a < 0) nneg += 1.0;
    if (nneg == 0)
        throw NotApplicable(
            "area_bound_high_density: all coefficients positive, the potential is completely "
            "monotonic and every area is certified");
    double bound = kInf;
    for (const auto& t : terms)
        if (t.a < 0)
            bound = std::min(bound,
                             kPi * std::pow(an * std::tgamma(t.x) /
                                                (2.0 * nneg * -t.a * std::tgamma(xn)),
                                            1.0 / (xn - t.x)));
    return {bound, "inverse-power-crossover", echo(f)};
}

}  // namespace

BoundResult area_bound_high_density(const PotentialSpec& f) {
    validate(f);
    return std::visit(
        Overload{
            [&](const ScreenedCoulombSum& g) { return hd_screened(g, f); },
            [&](const InversePowerSum& g) { return hd_inverse_power(g.terms, f); },
            [&](const LennardJonesType& g) {
                // Family-specific bound, sharper than the generic crossover
                // rule: g_A(1) = 0 exactly at this area.
                const double bound =
                    kPi * std::pow(g.a2 * std::tgamma(g.x1) / (g.a1 * std::tgamma(g.x2)),
                                   1.0 / (g.x2 - g.x1));
                return BoundResult{bound, "lj-g1-certificate", echo(f)};
            },
            [&](const AttractiveRepulsiveYukawa& g) {
                const double bound = (kPi / g.x2) * std::min(g.a2 / g.a1 - 1.0, 1.0);
                return BoundResult{bound, "yukawa-steps-certificate", echo(f)};
            },
            [&](const ExpDecay& g) {
                const double an = g.power_terms.back().a;
                const double xn = g.power_terms.back().x;
                double nneg = 0;
                for (const auto& t : g.power_terms)
                    if (t.a < 0) nneg += 1.0;
                double B = 0;
                for (const auto& t : g.exp_terms) B += std::abs(t.b) * t.t;
                bool any_negative_b = false;
                for (const auto& t : g.exp_terms)
                    if (t.b < 0) any_negative_b = true;
                if (nneg == 0 && !any_negative_b)
                    throw NotApplicable(
                        "area_bound_high_density: all coefficients positive, the potential is "
                        "completely monotonic and every area is certified");
                double bound = kInf;
                for (const auto& t : g.power_terms)
                    if (t.a < 0)
                        bound = std::min(
                            bound, kPi * std::pow(an * std::tgamma(t.x) /
                                                      ((2.0 * nneg + 2.0) * -t.a * std::tgamma(xn)),
                                                  1.0 / (xn - t.x)));
                if (B > 0)
                    bound = std::min(bound, std::pow(an * std::pow(kPi, xn + 1.0) /
                                                         ((nneg + 1.0) * B * std::tgamma(xn)),
                                                     1.0 / (xn + 0.5)));
                return BoundResult{bound, "exp-decay-split-certificate", echo(f)};
            },
            [&](const OppBuckingham& g) {
                if (classify_monotonicity(f).cls == MonotonicityClass::completely_monotonic)
                    throw NotApplicable(
                        "area_bound_high_density: mu is nonnegative everywhere, the potential "
                        "is completely monotonic and every area is certified");
                const double bound = std::pow(
                    g.a2 * std::pow(kPi, g.x2 + 1.0) / (g.a1 * g.x1 * std::tgamma(g.x2)),
                    1.0 / (g.x2 + 0.5));
                return BoundResult{bound, "buckingham-gaussian-tail", echo(f)};
            }},
        f);
}

namespace {

std::vector<PowerTerm> power_view(const PotentialSpec& f) {
    return std::visit(
        Overload{[&](const InversePowerSum& g) { return g.terms; },
                 [&](const LennardJonesType& g) {
                     return std::vector<PowerTerm>{{-g.a1, g.x1}, {g.a2, g.x2}};
                 },
                 [&](const auto&) -> std::vector<PowerTerm> {
                     throw NotApplicable(
                         "area_bound_low_density: only pure inverse-power families have a "
                         "power-law low-density comparison");
                 }},
        f);
}

}  // namespace

double area_bound_low_density(const PotentialSpec& f, const ReducedLattice& comparison,
                              const Precision& p) {
    validate(f);
    const std::vector<PowerTerm> terms = power_view(f);
    if (!(terms.front().a < 0))
        throw NotApplicable(
            "area_bound_low_density: leading low-density term is repulsive, no non-optimality "
            "window is certified");
    const ReducedLattice comp = make_lattice(comparison.x, comparison.y, 1.0);
    if (std::abs(comp.x - 0.5) < 1e-9 && std::abs(comp.y - std::sqrt(3.0) / 2.0) < 1e-9)
        throw DomainError("area_bound_low_density: comparison lattice must not be triangular");
    const bool is_square = std::abs(comp.x) < 1e-12 && std::abs(comp.y - 1.0) < 1e-12;

    auto dvalue = [&](double x) {
        const double two_s = 2.0 * x;
        const double zl = is_square ? epstein_zeta_closed(LatticeShape::square, two_s, p)
                                    : epstein_zeta_direct(comp, two_s, p);
        return zl - epstein_zeta_closed(LatticeShape::triangular, two_s, p);
    };

    const double a1 = -terms.front().a;  // > 0
    const double d1 = dvalue(terms.front().x);
    double npos = 0;
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].a > 0) npos += 1.0;
    double bound = 0.0;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (!(terms[i].a > 0)) continue;
        const double di = dvalue(terms[i].x);
        bound = std::max(bound, std::pow(npos * terms[i].a * di / (a1 * d1),
                                         1.0 / (terms[i].x - terms.front().x)));
    }
    return bound;
}

YukawaGlobalResult yukawa_global_check(const AttractiveRepulsiveYukawa& f) {
    validate(PotentialSpec{f});
    const double ratio = f.x1 / f.x2;
    YukawaGlobalResult out;
    out.lhs1 = (f.a1 * (1.0 + ratio * kPi)) / (f.a2 * (1.0 + kPi)) *
               std::exp((1.0 - ratio) * kPi);
    out.lhs2 = (f.a1 * (f.a1 * f.x2 + f.x1 * (f.a2 - f.a1) * kPi)) /
               (f.a2 * f.x2 * (f.a1 + (f.a2 - f.a1) * kPi)) *
               std::exp((1.0 - ratio) * (f.a2 / f.a1 - 1.0) * kPi);
    out.holds = out.lhs1 >= 1.0 && out.lhs2 >= 1.0;
    return out;
}

LJGlobalResult lj_global_check(const LennardJonesType& f, const Precision& p) {
    validate(PotentialSpec{f});
    LJGlobalResult out;
    out.holds = h_eval(f.x2) <= h_eval(f.x1);
    const double z1 = epstein_zeta_closed(LatticeShape::triangular, 2.0 * f.x1, p);
    const double z2 = epstein_zeta_closed(LatticeShape::triangular, 2.0 * f.x2, p);
    out.minimizer_area =
        std::pow(f.a2 * f.x2 * z2 / (f.a1 * f.x1 * z1), 1.0 / (f.x2 - f.x1));
    return out;
}

double buckingham_rate_threshold(const OppBuckingham& f, double A0) {
    if (!(A0 > 0)) throw DomainError("buckingham_rate_threshold: A0 must be positive");
    validate(PotentialSpec{f});
    return f.a2 * std::pow(kPi, f.x2 + 1.0) /
           (f.a1 * std::pow(A0, f.x2 + 0.5) * std::tgamma(f.x2));
}

double h_eval(double t) {
    if (!(t > 0)) throw DomainError("h_eval: t must be positive");
    // pi^-t Gamma(t) t = pi^-t Gamma(t+1); via lgamma for large t.
    return std::exp(std::lgamma(t + 1.0) - t * std::log(kPi));
}

HAnalysis h_analysis() {
    HAnalysis out;
    // h'(t)/h(t) = psi(t+1) - ln pi.
    out.argmin = digamma_inverse(std::log(kPi)) - 1.0;
    const double target = h_eval(1.0);
    double lo = out.argmin, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h_eval(mid) < target ? lo : hi) = mid;
    }
    out.conjugate_M = 0.5 * (lo + hi);
    return out;
}

double h_conjugate_of(double x1) {
    const HAnalysis an = h_analysis();
    if (!(x1 > 1.0) || !(x1 <= an.argmin))
        throw DomainError("h_conjugate_of: x1 must lie in (1, argmin]");
    const double target = h_eval(x1);
    double lo = an.argmin, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h_eval(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CounterexampleInterval counterexample_interval(const Precision& p) {
    auto d = [&](double two_s) {
        return epstein_zeta_closed(LatticeShape::square, two_s, p) -
               epstein_zeta_closed(LatticeShape::triangular, two_s, p);
    };
    const double d4 = d(4.0), d6 = d(6.0), d8 = d(8.0);
    CounterexampleInterval out;
    out.discriminant = 1600.0 * d6 * d6 - 1960.0 * d4 * d8;
    const double root = std::sqrt(out.discriminant);
    out.A1 = (40.0 * d6 - root) / (28.0 * d4);
    out.A2 = (40.0 * d6 + root) / (28.0 * d4);
    return out;
}

const char* to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::certified_positive: return "certified_positive";
        case ConditionStatus::certified_negative: return "certified_negative";
        case ConditionStatus::sampled_positive: return "sampled_positive";
        case ConditionStatus::sampled_negative: return "sampled_negative";
        case ConditionStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// |mu| with all coefficients made positive: local scale for sign decisions.
InverseLaplaceForm abs_mu(const InverseLaplaceForm& mu) {
    InverseLaplaceForm am = mu;
    for (auto& t : am.power_terms) t.c = std::abs(t.c);
    for (auto& t : am.step_terms) t.a = std::abs(t.a);
    for (auto& t : am.heat_terms) t.c = std::abs(t.c);
    return am;
}

std::vector<double> condition_sample_points(const InverseLaplaceForm& mu, double A, double ystar) {
    std::vector<double> ys;
    ys.reserve(12500);
    for (int i = 0; i <= 10000; ++i)
        ys.push_back(1.0 + (ystar - 1.0) * static_cast<double>(i) / 10000.0);
    // Log-spaced refinement near 1 plus the step switch points.
    const double lr = std::log(ystar);
    for (int i = 1; i < 2000; ++i) ys.push_back(std::exp(lr * i / 2000.0));
    for (const auto& t : mu.step_terms) {
        for (double yk : {kPi / (A * t.x), A * t.x / kPi}) {
            if (yk > 1.0 && yk < ystar)
                ys.insert(ys.end(), {yk * (1.0 - 1e-9), yk, yk * (1.0 + 1e-9)});
        }
    }
    std::sort(ys.begin(), ys.end());
    return ys;
}

}  // namespace

ConditionReport check_sufficient_condition(const PotentialSpec& f, double A) {
    if (!(A > 0)) throw NonPositiveArea("check_sufficient_condition: area must be positive");
    validate(f);
    ConditionReport rep;
    rep.area = A;
    const InverseLaplaceForm mu = inverse_laplace(f);

    const MonotonicityReport mono = classify_monotonicity(f);
    if (mono.cls == MonotonicityClass::completely_monotonic) {
        rep.status = ConditionStatus::certified_positive;
        rep.certification_route = "complete-monotonicity";
        rep.witnesses.emplace_back(1.0, g_eval(mu, A, 1.0));
        return rep;
    }

    try {
        const BoundResult hd = area_bound_high_density(f);
        rep.area_threshold = hd.area_bound;
        if (A <= hd.area_bound) {
            rep.status = ConditionStatus::certified_positive;
            rep.certification_route = hd.route;
            rep.witnesses.emplace_back(1.0, g_eval(mu, A, 1.0));
            return rep;
        }
    } catch (const NotApplicable&) {
    }

    // Dense sampling with a tail-dominance certificate.
    const std::optional<double> ytail = g_tail_nonneg_from(mu, A);
    const double ystar = ytail.value_or(1e4);
    const InverseLaplaceForm am = abs_mu(mu);
    double min_y = 1.0, min_g = g_eval(mu, A, 1.0);
    std::vector<std::pair<double, double>> negatives;
    for (double y : condition_sample_points(mu, A, ystar)) {
        const double g = g_eval(mu, A, y);
        if (g < min_g) {
            min_g = g;
            min_y = y;
        }
        if (g < 0 && negatives.size() < 4) negatives.emplace_back(y, g);
    }
    rep.witnesses.emplace_back(min_y, min_g);
    for (const auto& w : negatives)
        if (w.first != min_y) rep.witnesses.push_back(w);

    if (min_g < 0) {
        const double scale = g_eval(am, A, min_y);
        rep.status = min_g < -1e-12 * scale ? ConditionStatus::certified_negative
                                            : ConditionStatus::sampled_negative;
        rep.certification_route = "g-sample-negative";
        return rep;
    }
    if (ytail) {
        rep.status = ConditionStatus::sampled_positive;
        rep.certification_route = "g-sampling-with-tail-dominance";
    } else {
        rep.status = ConditionStatus::inconclusive;
        rep.certification_route = "g-sampling-without-tail-certificate";
    }
    return rep;
}

namespace {

// Last sign change of mu on (0, inf), 0 when mu >= 0 everywhere (sampled on a
// wide log grid, refined by bisection).
double mu_last_onset(const InverseLaplaceForm& mu) {
    // Scan window: generously beyond every power crossover and heat bump.
    double lo = 1e-8, hi = 10.0;
    const auto& pw = mu.power_terms;
    const double cn = pw.back().c, en = pw.back().e;
    const auto n = static_cast<double>(pw.size() + mu.heat_terms.size());
    for (const auto& t : pw)
        if (t.e < en)
            hi = std::max(hi, 2.0 * std::pow(n * std::abs(t.c) / cn, 1.0 / (en - t.e)));
    for (const auto& t : mu.heat_terms) {
        hi = std::max(hi, 2.0 * std::pow(n * std::abs(t.c) / cn, 1.0 / (en + 1.5)));
        lo = std::min(lo, 0.001 * t.q * t.q / 6.0);
    }
    double onset = 0.0;
    double yprev = lo, vprev = mu_eval(mu, lo);
    const double lr = std::log(hi / lo);
    for (int i = 1; i <= 20000; ++i) {
        const double y = lo * std::exp(lr * i / 20000.0);
        const double v = mu_eval(mu, y);
        if (vprev < 0 && v >= 0) {
            double a = yprev, b = y;
            for (int k = 0; k < 100; ++k) {
                const double m = 0.5 * (a + b);
                (mu_eval(mu, m) < 0 ? a : b) = m;
            }
            onset = 0.5 * (a + b);
        }
        yprev = y;
        vprev = v;
    }
    return onset;
}

// Dominance point past which D(y) = mu'(pi y/A) - y^-3 mu'(pi/(A y)) inherits
// the sign of the leading derivative term.
double derivative_tail_start(const InverseLaplaceForm& mu, double A) {
    const double R = kPi / A;
    const auto& pw = mu.power_terms;
    const double cn = pw.back().c * pw.back().e;  // > 0
    const double en = pw.back().e - 1.0;          // leading derivative exponent
    const double N = 2.0 * static_cast<double>(pw.size() + mu.heat_terms.size() + 1);
    const double Cn = cn * std::pow(R, en);
    double Y = 10.0;
    auto need = [&](double K, double pdecay) {
        // Cn y^en >= N K y^pdecay with en > pdecay.
        Y = std::max(Y, std::pow(N * K / Cn, 1.0 / (en - pdecay)));
    };
    for (const auto& t : pw) {
        const double ce = std::abs(t.c * t.e);
        if (ce == 0) continue;
        if (t.e - 1.0 < en) need(ce * std::pow(R, t.e - 1.0), t.e - 1.0);  // big side
        need(ce * std::max(1.0, std::pow(R, t.e - 1.0)), -2.0 - t.e);      // small side / y^3
    }
    for (const auto& t : mu.heat_terms) {
        const double c = std::abs(t.c), q2 = t.q * t.q;
        need(c * (1.5 + 0.25 * q2), -2.5);  // big side envelope
        const double peak = 1.5 * std::pow(10.0 / q2, 2.5) * std::exp(-2.5) +
                            0.25 * q2 * std::pow(14.0 / q2, 3.5) * std::exp(-3.5);
        need(c * peak, -3.0);  // small side, constant envelope times y^-3
    }
    return 2.0 * Y;
}

}  // namespace

ConditionReport check_c1_criterion(const PotentialSpec& f, double A) {
    if (!(A > 0)) throw NonPositiveArea("check_c1_criterion: area must be positive");
    validate(f);
    const InverseLaplaceForm mu = inverse_laplace(f);
    if (!mu.step_terms.empty())
        throw UnsupportedFamily(
            "check_c1_criterion: mu has step discontinuities, the derivative criterion does "
            "not apply to this family");

    ConditionReport rep;
    rep.area = A;

    const double r0 = mu_last_onset(mu);
    const double A0 = r0 == 0.0 ? kInf : kPi / r0;
    rep.area_threshold = A0;
    if (!(A <= A0)) {
        rep.status = ConditionStatus::inconclusive;
        rep.certification_route = "mu-negative-on-integration-range";
        const double tbad = 0.5 * (kPi / A + std::min(r0, kPi / A * 2.0));
        rep.witnesses.emplace_back(tbad, mu_eval(mu, tbad));
        return rep;
    }

    auto D = [&](double y) {
        return mu_derivative(mu, kPi * y / A) -
               std::pow(y, -3.0) * mu_derivative(mu, kPi / (A * y));
    };
    const double ytail = derivative_tail_start(mu, A);
    double min_y = 1.0, min_d = D(1.0);
    for (int i = 1; i <= 10000; ++i) {
        const double y = 1.0 + (ytail - 1.0) * static_cast<double>(i) / 10000.0;
        const double v = D(y);
        if (v < min_d) {
            min_d = v;
            min_y = y;
        }
    }
    rep.witnesses.emplace_back(min_y, min_d);
    if (min_d < 0) {
        rep.status = ConditionStatus::sampled_negative;
        rep.certification_route = "derivative-comparison-violated";
        return rep;
    }

    // Convex nonnegative mu gives the criterion analytically.
    bool convex = mu.heat_terms.empty();
    for (const auto& t : mu.power_terms)
        if (t.c * t.e * (t.e - 1.0) < 0) convex = false;
    if (convex) {
        rep.status = ConditionStatus::certified_positive;
        rep.certification_route = "c1-convex-mu";
    } else {
        rep.status = ConditionStatus::sampled_positive;
        rep.certification_route = "c1-derivative-sampling";
    }
    return rep;
}

}  // namespace lopt
