#include "lopt/specfun.hpp"

#include <cmath>

#include "lopt/errors.hpp"

namespace lopt {

namespace {

// B_2, B_4, ..., B_16.
constexpr double kBernoulli[8] = {1.0 / 6.0,  -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
                                  5.0 / 66.0, -691.0 / 2730.0,  7.0 / 6.0,  -3617.0 / 510.0};

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

double hurwitz_zeta(double s, double x, const Precision&) {
    if (!(x > 0)) throw DomainError("hurwitz_zeta: x must be positive");
    if (s == 1.0) throw DomainError("hurwitz_zeta: pole at s = 1");
    if (!std::isfinite(s) || !std::isfinite(x))
        throw DomainError("hurwitz_zeta: non-finite argument");

    // Shift until a = x + N is large enough that the Euler–Maclaurin tail
    // with 8 Bernoulli terms is far below double precision.
    const double target = std::max(18.0, std::abs(s) + 2.0);
    double head = 0.0;
    double a = x;
    while (a < target) {
        head += std::pow(a, -s);
        a += 1.0;
    }

    double tail = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
    // Correction sum: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}.
    double poch = s;            // rising factorial s(s+1)...(s+2j-2)
    double apow = std::pow(a, -s - 1.0);
    for (int j = 1; j <= 8; ++j) {
        tail += kBernoulli[j - 1] / factorial(2 * j) * poch * apow;
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        apow /= a * a;
    }
    return head + tail;
}

double riemann_zeta(double s, const Precision& p) { return hurwitz_zeta(s, 1.0, p); }

double digamma(double t) {
    if (!(t > 0)) throw DomainError("digamma: argument must be positive");
    double acc = 0.0;
    while (t < 12.0) {
        acc -= 1.0 / t;
        t += 1.0;
    }
    // psi(t) ~ ln t - 1/(2t) - sum_j B_{2j}/(2j) t^{-2j}
    const double inv2 = 1.0 / (t * t);
    double series = 0.0;
    double power = inv2;
    for (int j = 1; j <= 7; ++j) {
        series += kBernoulli[j - 1] / (2.0 * j) * power;
        power *= inv2;
    }
    return acc + std::log(t) - 0.5 / t - series;
}

double trigamma(double t) {
    if (!(t > 0)) throw DomainError("trigamma: argument must be positive");
    double acc = 0.0;
    while (t < 12.0) {
        acc += 1.0 / (t * t);
        t += 1.0;
    }
    // psi'(t) ~ 1/t + 1/(2t^2) + sum_j B_{2j} t^{-2j-1}
    const double inv2 = 1.0 / (t * t);
    double series = 0.0;
    double power = inv2 / t;
    for (int j = 1; j <= 7; ++j) {
        series += kBernoulli[j - 1] * power;
        power *= inv2;
    }
    return acc + 1.0 / t + 0.5 * inv2 + series;
}

double gamma_like(GammaKind kind, double t) {
    if (!(t > 0)) throw DomainError("gamma_like: argument must be positive");
    switch (kind) {
        case GammaKind::gamma:
            return std::tgamma(t);
        case GammaKind::log_gamma:
            return std::lgamma(t);
        case GammaKind::digamma:
            return digamma(t);
    }
    throw DomainError("gamma_like: unknown kind");
}

double digamma_inverse(double target) {
    if (!std::isfinite(target)) throw DomainError("digamma_inverse: non-finite target");
    // Standard starting guess, then safeguarded Newton on the monotone psi.
    double t = target >= -2.22 ? std::exp(target) + 0.5 : -1.0 / (target + 0.5772156649015329);
    double lo = 1e-300, hi = 1e300;
    for (int iter = 0; iter < 200; ++iter) {
        const double f = digamma(t) - target;
        if (f > 0)
            hi = std::min(hi, t);
        else
            lo = std::max(lo, t);
        const double step = f / trigamma(t);
        double next = t - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 1e-12 * std::abs(t)) {
            t = next;
            break;
        }
        t = next;
    }
    return t;
}

}  // namespace lopt
