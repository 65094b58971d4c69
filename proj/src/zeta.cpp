// zeta.cpp — lattice theta sums and Epstein zeta evaluation.
#include <cmath>
#include <vector>

#include "lopt/errors.hpp"
#include "lopt/quadrature.hpp"
#include "lopt/specfun.hpp"

namespace lopt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Enumeration radius X whose Gaussian tail sum_{|p| >= X} exp(-c*|p|^2) is
// below tau (tau > 0): pack unit-area disks of radius m/2 (m = minimal
// distance) around points and bound the integral of the decreasing Gaussian.
double gaussian_cutoff(double c, double m, double tau) {
    // erfc(z) <= exp(-z^2) turns the bound into C * exp(-c X^2).
    const double C = (8.0 / (m * m)) * (0.5 / c + 0.25 * m * std::sqrt(kPi / c));
    const double x2 = std::max(4.0 * m * m, std::log(std::max(C / tau, 1.0)) / c);
    return std::sqrt(x2);
}

struct SideCache {
    ReducedLattice lat;
    double m2 = 0;
    ShellList list;  // grown lazily

    explicit SideCache(const ReducedLattice& L) : lat(L), m2(min_norm2(L)) {}

    void ensure(double r2max) {
        if (list.r2max >= r2max) return;
        list = shells(lat, 1.1 * r2max);
    }

    // sum_{0 < |p| <= X} exp(-c |p|^2), summed smallest-terms-first.
    double partial_sum(double c, double X2) const {
        double sum = 0.0;
        std::size_t hi = list.entries.size();
        while (hi > 0 && list.entries[hi - 1].r2 > X2) --hi;
        for (std::size_t k = hi; k-- > 0;) {
            const Shell& sh = list.entries[k];
            sum += static_cast<double>(sh.multiplicity) * std::exp(-c * sh.r2);
        }
        return sum;
    }
};

}  // namespace

struct ThetaSums::Impl {
    Precision prec;
    SideCache primal;
    SideCache dual_side;
    double alpha_switch;  // 1 / (2*area)

    Impl(const ReducedLattice& L, const Precision& p)
        : prec(p), primal(L), dual_side(dual(L)), alpha_switch(0.5 / L.area) {}

    double punctured_direct(SideCache& side, double alpha) {
        const double c = 2.0 * kPi * alpha;
        const double lead = c * side.m2;
        if (lead > 745.0) return 0.0;  // below double underflow
        const double tau =
            std::max(prec.rel_tol * 2.0 * std::exp(-lead), 1e-320);
        const double X = gaussian_cutoff(c, std::sqrt(side.m2), tau);
        side.ensure(X * X);
        return side.partial_sum(c, X * X);
    }

    double value(double alpha) {
        if (!(alpha > 0)) throw DomainError("theta: alpha must be positive");
        if (alpha >= alpha_switch) return 1.0 + punctured_direct(primal, alpha);
        // Dual fold: theta_L(alpha) = theta_dual(1/(4 alpha)) / (2 alpha area).
        const double u = 0.25 / alpha;
        const double dual_theta = 1.0 + punctured_direct(dual_side, u);
        return dual_theta * (alpha_switch / alpha);  // = dual_theta / (2 alpha area)
    }

    double punctured(double alpha) {
        if (!(alpha > 0)) throw DomainError("theta: alpha must be positive");
        if (alpha >= alpha_switch) return punctured_direct(primal, alpha);
        return value(alpha) - 1.0;
    }
};

ThetaSums::ThetaSums(const ReducedLattice& L, const Precision& p)
    : impl_(std::make_unique<Impl>(L, p)) {}
ThetaSums::~ThetaSums() = default;
ThetaSums::ThetaSums(ThetaSums&&) noexcept = default;
ThetaSums& ThetaSums::operator=(ThetaSums&&) noexcept = default;

double ThetaSums::value(double alpha) const { return impl_->value(alpha); }
double ThetaSums::punctured(double alpha) const { return impl_->punctured(alpha); }
double ThetaSums::primal_cutoff_r2() const { return impl_->primal.list.r2max; }

double theta(const ReducedLattice& L, double alpha, const Precision& p) {
    return ThetaSums(L, p).value(alpha);
}

double theta_punctured(const ReducedLattice& L, double alpha, const Precision& p) {
    return ThetaSums(L, p).punctured(alpha);
}

double epstein_zeta_closed(LatticeShape shape, double two_s, const Precision& p) {
    if (!(two_s > 2)) throw DomainError("epstein_zeta_closed: need two_s > 2");
    const double s = 0.5 * two_s;
    if (shape == LatticeShape::square) {
        // 4 zeta(s) beta(s), beta via Hurwitz.
        return std::pow(4.0, 1.0 - s) * riemann_zeta(s, p) *
               (hurwitz_zeta(s, 0.25, p) - hurwitz_zeta(s, 0.75, p));
    }
    // Hexagonal: 6 zeta(s) L_{-3}(s), rescaled from unit edge to unit area.
    return 6.0 * std::pow(std::sqrt(3.0) / 2.0, s) * std::pow(3.0, -s) * riemann_zeta(s, p) *
           (hurwitz_zeta(s, 1.0 / 3.0, p) - hurwitz_zeta(s, 2.0 / 3.0, p));
}

namespace {

// Power-law tail over the disk packing: sum_{|p| >= X} |p|^(-2s).
double power_tail_bound(double m, double two_s, double X) {
    return (8.0 / (m * m)) * (std::pow(X, 2.0 - two_s) / (two_s - 2.0) +
                              0.5 * m * std::pow(X, 1.0 - two_s) / (two_s - 1.0));
}

}  // namespace

double epstein_zeta_direct(const ReducedLattice& L, double two_s, const Precision& p) {
    if (!(two_s > 2)) throw DomainError("epstein_zeta_direct: need two_s > 2");
    const double m2 = min_norm2(L);
    const double m = std::sqrt(m2);
    const double estimate = 2.0 * std::pow(m2, -0.5 * two_s);  // first-shell lower bound
    const double tau = std::max(p.abs_tol, p.rel_tol * estimate);

    // Route 1: plain shell summation if the enumeration fits the budget.
    double X = std::pow(8.0 / (m2 * (two_s - 2.0) * tau), 1.0 / (two_s - 2.0));
    X = std::max(X, 2.0 * m);
    while (power_tail_bound(m, two_s, X) > tau) X *= 1.4142135623730951;
    const double points = 3.7 * X * X / L.area + 16.0;  // bounding-box estimate
    if (points <= static_cast<double>(p.max_terms)) {
        ShellList sl = shells(L, X * X);
        double sum = 0.0;
        for (std::size_t k = sl.entries.size(); k-- > 0;)
            sum += static_cast<double>(sl.entries[k].multiplicity) *
                   std::pow(sl.entries[k].r2, -0.5 * two_s);
        return sum;
    }

    // Route 2: integral of the punctured theta function. With s = two_s/2,
    //   Gamma(s) (2 pi)^(-s) zeta_L(2s) = (2A)^(-s) [1/(s-1) - 1/s]
    //     + int_{1/(2A)}^inf (theta_L - 1) a^(s-1) da
    //     + (2/A) 4^(-s) int_{A/2}^inf (theta_dual - 1) u^(-s) du.
    try {
        const double s = 0.5 * two_s;
        const double A = L.area;
        ThetaSums ts(L, p);
        const ReducedLattice Ld = dual(L);
        ThetaSums tsd(Ld, p);
        const double front = std::tgamma(s) * std::pow(2.0 * kPi, -s);
        const double tau_rhs = 0.25 * tau * front;

        const double a0 = 0.5 / A;
        const double m2d = min_norm2(Ld);

        double Y1 = std::max(2.0 * a0, s / (kPi * m2));
        while (true) {
            const double denom = 2.0 * kPi * m2 - std::max(s - 1.0, 0.0) / Y1;
            if (denom > 0) {
                const double bound = ts.punctured(Y1) * std::pow(Y1, s - 1.0) / denom;
                if (bound <= tau_rhs) break;
            }
            Y1 *= 2.0;
            if (Y1 > 1e12) throw SlowConvergence("epstein_zeta_direct: theta tail will not close");
        }
        double Y2 = std::max(2.0 * (A / 2.0), s / (kPi * m2d));
        while (true) {
            const double bound = tsd.punctured(Y2) * std::pow(Y2, -s) / (2.0 * kPi * m2d);
            if (bound <= tau_rhs) break;
            Y2 *= 2.0;
            if (Y2 > 1e12) throw SlowConvergence("epstein_zeta_direct: dual theta tail will not close");
        }

        auto geometric_knots = [](double lo, double hi) {
            std::vector<double> ks{lo};
            for (double t = 2.0 * lo; t < hi; t *= 2.0) ks.push_back(t);
            ks.push_back(hi);
            return ks;
        };
        QuadOptions qo;
        qo.abs_tol = tau_rhs;
        qo.rel_tol = 0.1 * p.rel_tol;
        const QuadResult I1 = integrate_adaptive(
            [&](double a) { return ts.punctured(a) * std::pow(a, s - 1.0); },
            geometric_knots(a0, Y1), qo);
        const QuadResult I2 = integrate_adaptive(
            [&](double u) { return tsd.punctured(u) * std::pow(u, -s); },
            geometric_knots(0.5 * A, Y2), qo);

        const double rhs = std::pow(2.0 * A, -s) * (1.0 / (s - 1.0) - 1.0 / s) + I1.value +
                           (2.0 / A) * std::pow(4.0, -s) * I2.value;
        return rhs / front;
    } catch (const QuadratureFailure& e) {
        throw SlowConvergence(std::string("epstein_zeta_direct: ") + e.what());
    } catch (const BudgetExceeded& e) {
        throw SlowConvergence(std::string("epstein_zeta_direct: ") + e.what());
    }
}

}  // namespace lopt
