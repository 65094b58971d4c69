#include "lopt/energy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lopt/quadrature.hpp"
#include "lopt/specfun.hpp"

namespace lopt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// One summable piece of f, viewed as a function of the point distance rho
// (the potential argument is rho^2).
struct SumPart {
    enum class Kind { power, screen, expo } kind;
    double a = 0;  // coefficient
    double x = 0;  // exponent (power: f += a r^-x), rate (screen: a e^{-x r}/r,
                   // expo: a e^{-x sqrt(r)} = a e^{-x rho})
};

std::vector<SumPart> summable_parts(const PotentialSpec& f) {
    std::vector<SumPart> parts;
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ScreenedCoulombSum>) {
                for (const auto& t : g.terms) parts.push_back({SumPart::Kind::screen, t.a, t.x});
            } else if constexpr (std::is_same_v<T, InversePowerSum>) {
                for (const auto& t : g.terms) parts.push_back({SumPart::Kind::power, t.a, t.x});
            } else if constexpr (std::is_same_v<T, LennardJonesType>) {
                parts.push_back({SumPart::Kind::power, -g.a1, g.x1});
                parts.push_back({SumPart::Kind::power, g.a2, g.x2});
            } else if constexpr (std::is_same_v<T, AttractiveRepulsiveYukawa>) {
                parts.push_back({SumPart::Kind::screen, -g.a1, g.x1});
                parts.push_back({SumPart::Kind::screen, g.a2, g.x2});
            } else if constexpr (std::is_same_v<T, ExpDecay>) {
                for (const auto& t : g.power_terms)
                    parts.push_back({SumPart::Kind::power, t.a, t.x});
                for (const auto& t : g.exp_terms) parts.push_back({SumPart::Kind::expo, t.b, t.t});
            } else {
                static_assert(std::is_same_v<T, OppBuckingham>);
                parts.push_back({SumPart::Kind::power, g.a2, g.x2});
                parts.push_back({SumPart::Kind::expo, -g.a1, g.x1});
            }
        },
        f);
    return parts;
}

// Disk-packing tail bounds: sum over |p| >= X of the part magnitude.
double part_tail_bound(const SumPart& t, double m, double X) {
    const double a = std::abs(t.a);
    switch (t.kind) {
        case SumPart::Kind::power:
            // |p|^(-2x): needs 2x > 2, guaranteed by validation.
            return a * (8.0 / (m * m)) *
                   (std::pow(X, 2.0 - 2.0 * t.x) / (2.0 * t.x - 2.0) +
                    0.5 * m * std::pow(X, 1.0 - 2.0 * t.x) / (2.0 * t.x - 1.0));
        case SumPart::Kind::screen:
            // e^{-x rho^2}/rho^2 <= decreasing; integral bound.
            return a * (8.0 / (m * m)) * (1.0 + 0.5 * m / X) * std::exp(-t.x * X * X) /
                   (2.0 * t.x * X * X);
        case SumPart::Kind::expo:
            return a * (8.0 / (m * m)) * std::exp(-t.x * X) *
                   (X / t.x + 1.0 / (t.x * t.x) + 0.5 * m / t.x);
    }
    return 0.0;
}

// Smallest enumeration radius with part_tail_bound <= tau (tau > 0).
double part_cutoff(const SumPart& t, double m, double tau) {
    double X = std::max(2.0 * m, 1.0);
    switch (t.kind) {
        case SumPart::Kind::power:
            X = std::max(X, std::pow(std::abs(t.a) * 8.0 / (m * m * (2.0 * t.x - 2.0) * tau),
                                     1.0 / (2.0 * t.x - 2.0)));
            break;
        case SumPart::Kind::screen: {
            const double C = std::abs(t.a) * (8.0 / (m * m)) * 1.5 / (2.0 * t.x * m * m);
            X = std::max(X, std::sqrt(std::max(4.0 * m * m,
                                               std::log(std::max(C / tau, 1.0)) / t.x)));
            break;
        }
        case SumPart::Kind::expo: {
            const double C =
                std::abs(t.a) * (8.0 / (m * m)) * (2.0 * m / t.x + 1.0 / (t.x * t.x) + m / t.x);
            X = std::max(X, std::log(std::max(C / tau, 1.0)) / t.x);
            break;
        }
    }
    while (part_tail_bound(t, m, X) > tau) X *= 1.3;
    return X;
}

double part_term(const SumPart& t, double r2) {
    switch (t.kind) {
        case SumPart::Kind::power:
            return t.a * std::pow(r2, -t.x);
        case SumPart::Kind::screen:
            return t.a * std::exp(-t.x * r2) / r2;
        case SumPart::Kind::expo:
            return t.a * std::exp(-t.x * std::sqrt(r2));
    }
    return 0.0;
}

// First-shell magnitude, used to set the per-part relative target.
double part_scale(const SumPart& t, double m2) {
    return std::abs(part_term(t, m2)) * 2.0;
}

}  // namespace

EnergyValue energy_direct(const PotentialSpec& f, const ReducedLattice& L, const Precision& p) {
    validate(f);
    const std::vector<SumPart> parts = summable_parts(f);
    const double m2 = min_norm2(L);
    const double m = std::sqrt(m2);
    const auto nparts = static_cast<double>(parts.size());

    // Plan: one shared enumeration radius for every part that can afford shell
    // summation; inverse-power parts that cannot go through the zeta integral.
    double r2_enum = 0.0;
    std::vector<int> route(parts.size(), 0);  // 0 = shells, 1 = zeta integral
    std::vector<double> tails(parts.size(), 0.0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const SumPart& t = parts[i];
        const double tau = std::max(p.abs_tol / nparts, p.rel_tol * part_scale(t, m2));
        const double X = part_cutoff(t, m, tau);
        const double points = 3.7 * X * X / L.area + 16.0;
        if (t.kind == SumPart::Kind::power && points > static_cast<double>(p.max_terms)) {
            route[i] = 1;
            continue;
        }
        if (points > static_cast<double>(p.max_terms))
            throw BudgetExceeded("energy_direct: exponential part exceeds the point budget");
        tails[i] = part_tail_bound(t, m, X);
        r2_enum = std::max(r2_enum, X * X);
    }

    EnergyValue out;
    out.method = "direct";
    out.cutoff_r2 = r2_enum;

    ShellList sl;
    if (r2_enum > 0) sl = shells(L, r2_enum);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const SumPart& t = parts[i];
        if (route[i] == 1) {
            Precision pz = p;
            pz.abs_tol = p.abs_tol / (nparts * std::max(std::abs(t.a), 1e-300));
            const double z = epstein_zeta_direct(L, 2.0 * t.x, pz);
            out.value += t.a * z;
            out.error_bound += std::abs(t.a) * std::max(pz.abs_tol, p.rel_tol * z);
            continue;
        }
        double sum = 0.0;
        for (std::size_t k = sl.entries.size(); k-- > 0;)
            sum += static_cast<double>(sl.entries[k].multiplicity) *
                   part_term(t, sl.entries[k].r2);
        out.value += sum;
        out.error_bound += tails[i];
    }
    return out;
}

double g_eval(const InverseLaplaceForm& mu, double A, double y) {
    if (!(A > 0)) throw NonPositiveArea("g_eval: area must be positive");
    if (!(y > 0)) throw DomainError("g_eval: y must be positive");
    return mu_eval(mu, kPi / (y * A)) / y + mu_eval(mu, kPi * y / A);
}

double g_eval(const PotentialSpec& f, double A, double y) {
    return g_eval(inverse_laplace(f), A, y);
}

namespace {

// Constant bound on |mu(pi/(yA))/y| + |heat/step pieces of mu(pi y/A)| for
// y >= 1, plus the power-law growth envelope |mu(pi y/A)| <= G1 * y^emax.
struct GEnvelope {
    double G0 = 0;    // constant part
    double G1 = 0;    // coefficient of y^emax
    double emax = 0;  // leading power exponent (0 when no power terms)
};

GEnvelope g_envelope(const InverseLaplaceForm& mu, double A) {
    GEnvelope env;
    const double R = kPi / A;
    for (const auto& t : mu.power_terms) {
        env.emax = std::max(env.emax, t.e);
        env.G1 += std::abs(t.c) * std::pow(R, t.e);
        env.G0 += std::abs(t.c) * std::max(1.0, std::pow(R, t.e));  // small side, y >= 1
    }
    for (const auto& t : mu.step_terms) env.G0 += 2.0 * std::abs(t.a);  // both sides
    for (const auto& t : mu.heat_terms) {
        const double peak = std::pow(6.0 / (t.q * t.q * 2.718281828459045), 1.5);
        env.G0 += std::abs(t.c) * 2.0 * peak;  // both sides, crude but safe
    }
    return env;
}

double ca_constant(const InverseLaplaceForm& mu, double A) {
    const double R = kPi / A;
    double ca = 0.0;
    for (const auto& t : mu.power_terms)
        ca += t.c * std::pow(R, t.e + 1.0) / (t.e * (t.e + 1.0));
    for (const auto& t : mu.step_terms)
        if (t.x < R) ca += t.a * (R * std::log(R / t.x) - (R - t.x));
    for (const auto& t : mu.heat_terms) {
        const double q = t.q;
        const double X = q / (2.0 * std::sqrt(R));
        const double erfcX = std::erfc(X);
        ca += t.c * (R * (8.0 * X * std::exp(-X * X) + 4.0 * std::sqrt(kPi) * erfcX) / (q * q * q) -
                     2.0 * std::sqrt(kPi) * erfcX / q);
    }
    return ca;
}

}  // namespace

EnergyValue energy_integral(const PotentialSpec& f, const ReducedLattice& L, const Precision& p) {
    validate(f);
    const InverseLaplaceForm mu = inverse_laplace(f);
    const double A = L.area;
    const double m2 = min_norm2(L);
    const double kappa = kPi * m2 / A;  // theta decay rate in y
    ThetaSums ts(L, p);

    // Interior breakpoints: step thresholds of mu seen through both arguments.
    std::vector<double> knots{1.0};
    for (const auto& t : mu.step_terms) {
        const double y1 = kPi / (A * t.x);
        const double y2 = A * t.x / kPi;
        if (y1 > 1.0) knots.push_back(y1);
        if (y2 > 1.0) knots.push_back(y2);
    }
    const GEnvelope env = g_envelope(mu, A);
    double Y = std::max(4.0, 2.0 * *std::max_element(knots.begin(), knots.end()));
    Y = std::max(Y, 2.0 * env.emax / kappa);

    auto integrand = [&](double y) { return ts.punctured(0.5 * y / A) * g_eval(mu, A, y); };
    auto tail_bound = [&](double yb) {
        const double P = ts.punctured(0.5 * yb / A);
        const double denom = kappa - env.emax / yb;
        return (kPi / A) * P * (env.G0 / kappa + env.G1 * std::pow(yb, env.emax) / denom);
    };

    QuadOptions qo;
    qo.abs_tol = 0.5 * p.abs_tol * A / kPi;
    qo.rel_tol = 0.5 * p.rel_tol;
    std::vector<double> ks = knots;
    for (double t = 2.0; t < Y; t *= 2.0) ks.push_back(t);
    ks.push_back(Y);
    QuadResult q = integrate_adaptive(integrand, ks, qo);
    // Extend the truncation until the analytic tail is negligible.
    double total_abs = std::abs(q.value);
    for (int rounds = 0; rounds < 60; ++rounds) {
        const double tb = tail_bound(Y);
        if (tb <= std::max(p.abs_tol, 0.5 * p.rel_tol * (kPi / A) * total_abs)) break;
        std::vector<double> ext{Y, 1.5 * Y, 2.0 * Y};
        QuadResult qe = integrate_adaptive(integrand, ext, qo);
        q.value += qe.value;
        q.error_bound += qe.error_bound;
        Y *= 2.0;
        total_abs = std::max(total_abs, std::abs(q.value));
    }

    EnergyValue out;
    out.method = "integral";
    out.constant_CA = ca_constant(mu, A);
    out.value = (kPi / A) * q.value + *out.constant_CA;
    out.error_bound = (kPi / A) * q.error_bound + tail_bound(Y);
    out.cutoff_r2 = ts.primal_cutoff_r2();
    return out;
}

std::optional<double> g_tail_nonneg_from(const InverseLaplaceForm& mu, double A) {
    const double R = kPi / A;
    if (!mu.power_terms.empty()) {
        const double cn = mu.power_terms.back().c;
        const double en = mu.power_terms.back().e;
        if (!(cn > 0)) return std::nullopt;
        const double N =
            2.0 * static_cast<double>(mu.power_terms.size() + mu.step_terms.size() +
                                      mu.heat_terms.size() + 1);
        double Y = 10.0;
        auto need_const = [&](double bound) {
            // c_n (R y)^{e_n} >= N * bound  =>  y >= (N bound / (c_n R^{e_n}))^{1/e_n}
            Y = std::max(Y, std::pow(N * bound / (cn * std::pow(R, en)), 1.0 / en));
        };
        for (const auto& t : mu.power_terms) {
            if (t.e < en)  // big-argument side, lower exponents
                Y = std::max(Y, (1.0 / R) * std::pow(N * std::abs(t.c) / cn, 1.0 / (en - t.e)));
            // small-argument side: |c| max(1, R^e) / y <= const
            need_const(std::abs(t.c) * std::max(1.0, std::pow(R, t.e)));
        }
        for (const auto& t : mu.step_terms) need_const(2.0 * std::abs(t.a));
        for (const auto& t : mu.heat_terms) {
            const double peak = std::pow(6.0 / (t.q * t.q * 2.718281828459045), 1.5);
            need_const(2.0 * std::abs(t.c) * std::max(peak, 1.0));
        }
        return 2.0 * Y;
    }
    if (!mu.step_terms.empty()) {
        // Pure step mu: beyond both switch points, g = sum of coefficients >= 0.
        double ssum = 0;
        for (const auto& t : mu.step_terms) ssum += t.a;
        if (ssum < 0) return std::nullopt;
        const double xlo = mu.step_terms.front().x;
        double xhi = xlo;
        for (const auto& t : mu.step_terms) xhi = std::max(xhi, t.x);
        return std::max({10.0, A * xhi / kPi * 1.001, kPi / (A * xlo) * 1.001});
    }
    return std::nullopt;
}

}  // namespace lopt
