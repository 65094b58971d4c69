#include "lopt/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace lopt {

namespace {

using njson = nlohmann::json;

constexpr double kPi = 3.141592653589793238462643383279502884;

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

void check_increasing(const std::vector<double>& xs, const char* what) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        require(xs[i] - xs[i - 1] >= kExponentGap,
                std::string(what) + " must be strictly increasing (gap >= 1e-9)");
}

}  // namespace

std::string family_name(const PotentialSpec& f) {
    return std::visit(
        Overload{[](const ScreenedCoulombSum&) { return std::string("screened_coulomb_sum"); },
                 [](const InversePowerSum&) { return std::string("inverse_power_sum"); },
                 [](const LennardJonesType&) { return std::string("lennard_jones_type"); },
                 [](const AttractiveRepulsiveYukawa&) {
                     return std::string("attractive_repulsive_yukawa");
                 },
                 [](const ExpDecay&) { return std::string("exp_decay"); },
                 [](const OppBuckingham&) { return std::string("opp_buckingham"); }},
        f);
}

std::vector<std::string> validate(const PotentialSpec& f) {
    std::vector<std::string> flags;
    std::visit(
        Overload{
            [&](const ScreenedCoulombSum& g) {
                require(!g.terms.empty(), "screened_coulomb_sum: needs at least one term");
                std::vector<double> xs;
                double sum = 0;
                for (const auto& t : g.terms) {
                    require(t.a != 0, "screened_coulomb_sum: coefficients must be nonzero");
                    require(t.x > 0, "screened_coulomb_sum: rates must be positive");
                    xs.push_back(t.x);
                    sum += t.a;
                }
                check_increasing(xs, "screened_coulomb_sum rates");
                require(sum >= 0, "screened_coulomb_sum: coefficient sum must be >= 0");
                if (sum == 0)
                    flags.push_back(
                        "coefficient sum is exactly zero: several area bounds degenerate and the "
                        "fixed-area energy may be unbounded below");
            },
            [&](const InversePowerSum& g) {
                require(!g.terms.empty(), "inverse_power_sum: needs at least one term");
                std::vector<double> xs;
                for (const auto& t : g.terms) {
                    require(t.a != 0, "inverse_power_sum: coefficients must be nonzero");
                    require(t.x > 1, "inverse_power_sum: exponents must exceed 1");
                    xs.push_back(t.x);
                }
                check_increasing(xs, "inverse_power_sum exponents");
                require(g.terms.back().a > 0,
                        "inverse_power_sum: leading (largest-exponent) coefficient must be positive");
            },
            [&](const LennardJonesType& g) {
                require(g.a1 > 0 && g.a2 > 0, "lennard_jones_type: a1, a2 must be positive");
                require(g.x1 > 1, "lennard_jones_type: x1 must exceed 1");
                require(g.x2 - g.x1 >= kExponentGap, "lennard_jones_type: needs x1 < x2");
            },
            [&](const AttractiveRepulsiveYukawa& g) {
                require(g.a1 > 0, "attractive_repulsive_yukawa: a1 must be positive");
                require(g.a2 > g.a1, "attractive_repulsive_yukawa: needs a1 < a2");
                require(g.x1 > 0, "attractive_repulsive_yukawa: x1 must be positive");
                require(g.x2 - g.x1 >= kExponentGap, "attractive_repulsive_yukawa: needs x1 < x2");
            },
            [&](const ExpDecay& g) {
                require(!g.power_terms.empty(), "exp_decay: needs at least one power term");
                std::vector<double> xs;
                for (const auto& t : g.power_terms) {
                    require(t.a != 0, "exp_decay: power coefficients must be nonzero");
                    require(t.x > 1.5, "exp_decay: power exponents must exceed 3/2");
                    xs.push_back(t.x);
                }
                check_increasing(xs, "exp_decay power exponents");
                require(g.power_terms.back().a > 0,
                        "exp_decay: leading (largest-exponent) power coefficient must be positive");
                for (const auto& t : g.exp_terms) {
                    require(t.b != 0, "exp_decay: exponential coefficients must be nonzero");
                    require(t.t > 0, "exp_decay: exponential rates must be positive");
                }
            },
            [&](const OppBuckingham& g) {
                require(g.a1 > 0 && g.a2 > 0, "opp_buckingham: a1, a2 must be positive");
                require(g.x1 > 0, "opp_buckingham: x1 must be positive");
                require(g.x2 > 1.5, "opp_buckingham: x2 must exceed 3/2");
            }},
        f);
    return flags;
}

namespace {

double json_number(const njson& obj, const char* key, const char* ctx) {
    if (!obj.contains(key))
        throw ValidationError(std::string(ctx) + ": missing field '" + key + "'");
    const njson& v = obj.at(key);
    if (!v.is_number())
        throw ValidationError(std::string(ctx) + ": field '" + key + "' must be a number");
    return v.get<double>();
}

void reject_unknown(const njson& obj, const std::vector<std::string>& allowed, const char* ctx) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw ValidationError(std::string(ctx) + ": unknown field '" + it.key() + "'");
    }
}

const njson& json_array(const njson& obj, const char* key, const char* ctx) {
    if (!obj.contains(key))
        throw ValidationError(std::string(ctx) + ": missing field '" + key + "'");
    const njson& v = obj.at(key);
    if (!v.is_array())
        throw ValidationError(std::string(ctx) + ": field '" + key + "' must be an array");
    return v;
}

}  // namespace

PotentialSpec parse_potential_json(const std::string& text) {
    njson doc;
    try {
        doc = njson::parse(text);
    } catch (const njson::exception& e) {
        throw ParseError(std::string("potential JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("potential JSON: top level must be an object");
    if (!doc.contains("family") || !doc.at("family").is_string())
        throw ValidationError("potential JSON: needs a string field 'family'");
    const std::string fam = doc.at("family").get<std::string>();

    auto read_terms = [&](const njson& arr, const char* ka, const char* kb,
                          const char* ctx) {
        std::vector<std::pair<double, double>> out;
        for (const auto& e : arr) {
            if (!e.is_object())
                throw ValidationError(std::string(ctx) + ": each term must be an object");
            reject_unknown(e, {ka, kb}, ctx);
            out.emplace_back(json_number(e, ka, ctx), json_number(e, kb, ctx));
        }
        return out;
    };

    PotentialSpec spec;
    if (fam == "screened_coulomb_sum") {
        reject_unknown(doc, {"family", "terms"}, "screened_coulomb_sum");
        ScreenedCoulombSum g;
        for (auto [a, x] : read_terms(json_array(doc, "terms", fam.c_str()), "a", "x",
                                      "screened_coulomb_sum term"))
            g.terms.push_back({a, x});
        spec = g;
    } else if (fam == "inverse_power_sum") {
        reject_unknown(doc, {"family", "terms"}, "inverse_power_sum");
        InversePowerSum g;
        for (auto [a, x] : read_terms(json_array(doc, "terms", fam.c_str()), "a", "x",
                                      "inverse_power_sum term"))
            g.terms.push_back({a, x});
        spec = g;
    } else if (fam == "lennard_jones_type" || fam == "attractive_repulsive_yukawa" ||
               fam == "opp_buckingham") {
        reject_unknown(doc, {"family", "a1", "a2", "x1", "x2"}, fam.c_str());
        const double a1 = json_number(doc, "a1", fam.c_str());
        const double a2 = json_number(doc, "a2", fam.c_str());
        const double x1 = json_number(doc, "x1", fam.c_str());
        const double x2 = json_number(doc, "x2", fam.c_str());
        if (fam == "lennard_jones_type")
            spec = LennardJonesType{a1, a2, x1, x2};
        else if (fam == "attractive_repulsive_yukawa")
            spec = AttractiveRepulsiveYukawa{a1, a2, x1, x2};
        else
            spec = OppBuckingham{a1, a2, x1, x2};
    } else if (fam == "exp_decay") {
        reject_unknown(doc, {"family", "power_terms", "exp_terms"}, "exp_decay");
        ExpDecay g;
        for (auto [a, x] : read_terms(json_array(doc, "power_terms", fam.c_str()), "a", "x",
                                      "exp_decay power term"))
            g.power_terms.push_back({a, x});
        if (doc.contains("exp_terms"))
            for (auto [b, t] : read_terms(doc.at("exp_terms"), "b", "t", "exp_decay exp term"))
                g.exp_terms.push_back({b, t});
        spec = g;
    } else {
        throw ValidationError("potential JSON: unknown family '" + fam + "'");
    }
    validate(spec);  // throws ValidationError on constraint violations; flags are advisory
    return spec;
}

std::string potential_to_json(const PotentialSpec& f) {
    njson doc;
    doc["family"] = family_name(f);
    std::visit(Overload{[&](const ScreenedCoulombSum& g) {
                            njson arr = njson::array();
                            for (const auto& t : g.terms) arr.push_back({{"a", t.a}, {"x", t.x}});
                            doc["terms"] = arr;
                        },
                        [&](const InversePowerSum& g) {
                            njson arr = njson::array();
                            for (const auto& t : g.terms) arr.push_back({{"a", t.a}, {"x", t.x}});
                            doc["terms"] = arr;
                        },
                        [&](const LennardJonesType& g) {
                            doc["a1"] = g.a1;
                            doc["a2"] = g.a2;
                            doc["x1"] = g.x1;
                            doc["x2"] = g.x2;
                        },
                        [&](const AttractiveRepulsiveYukawa& g) {
                            doc["a1"] = g.a1;
                            doc["a2"] = g.a2;
                            doc["x1"] = g.x1;
                            doc["x2"] = g.x2;
                        },
                        [&](const ExpDecay& g) {
                            njson pw = njson::array();
                            for (const auto& t : g.power_terms)
                                pw.push_back({{"a", t.a}, {"x", t.x}});
                            njson ex = njson::array();
                            for (const auto& t : g.exp_terms)
                                ex.push_back({{"b", t.b}, {"t", t.t}});
                            doc["power_terms"] = pw;
                            doc["exp_terms"] = ex;
                        },
                        [&](const OppBuckingham& g) {
                            doc["a1"] = g.a1;
                            doc["a2"] = g.a2;
                            doc["x1"] = g.x1;
                            doc["x2"] = g.x2;
                        }},
               f);
    return doc.dump();
}

double evaluate(const PotentialSpec& f, double r) {
    if (!(r > 0)) throw DomainError("evaluate: r must be positive");
    return std::visit(
        Overload{[&](const ScreenedCoulombSum& g) {
                     double s = 0;
                     for (const auto& t : g.terms) s += t.a * std::exp(-t.x * r);
                     return s / r;
                 },
                 [&](const InversePowerSum& g) {
                     double s = 0;
                     for (const auto& t : g.terms) s += t.a * std::pow(r, -t.x);
                     return s;
                 },
                 [&](const LennardJonesType& g) {
                     return g.a2 * std::pow(r, -g.x2) - g.a1 * std::pow(r, -g.x1);
                 },
                 [&](const AttractiveRepulsiveYukawa& g) {
                     return (g.a2 * std::exp(-g.x2 * r) - g.a1 * std::exp(-g.x1 * r)) / r;
                 },
                 [&](const ExpDecay& g) {
                     double s = 0;
                     for (const auto& t : g.power_terms) s += t.a * std::pow(r, -t.x);
                     const double sq = std::sqrt(r);
                     for (const auto& t : g.exp_terms) s += t.b * std::exp(-t.t * sq);
                     return s;
                 },
                 [&](const OppBuckingham& g) {
                     return g.a2 * std::pow(r, -g.x2) - g.a1 * std::exp(-g.x1 * std::sqrt(r));
                 }},
        f);
}

InverseLaplaceForm inverse_laplace(const PotentialSpec& f) {
    InverseLaplaceForm mu;
    auto add_power = [&](double a, double x) {
        mu.power_terms.push_back({a / std::tgamma(x), x - 1.0});
    };
    auto add_exp = [&](double b, double t) {
        mu.heat_terms.push_back({b * t / (2.0 * std::sqrt(kPi)), t});
    };
    std::visit(Overload{[&](const ScreenedCoulombSum& g) {
                            for (const auto& t : g.terms) mu.step_terms.push_back({t.a, t.x});
                        },
                        [&](const InversePowerSum& g) {
                            for (const auto& t : g.terms) add_power(t.a, t.x);
                        },
                        [&](const LennardJonesType& g) {
                            add_power(-g.a1, g.x1);
                            add_power(g.a2, g.x2);
                        },
                        [&](const AttractiveRepulsiveYukawa& g) {
                            mu.step_terms.push_back({-g.a1, g.x1});
                            mu.step_terms.push_back({g.a2, g.x2});
                        },
                        [&](const ExpDecay& g) {
                            for (const auto& t : g.power_terms) add_power(t.a, t.x);
                            for (const auto& t : g.exp_terms) add_exp(t.b, t.t);
                        },
                        [&](const OppBuckingham& g) {
                            add_power(g.a2, g.x2);
                            add_exp(-g.a1, g.x1);
                        }},
               f);
    return mu;
}

double mu_eval(const InverseLaplaceForm& mu, double y) {
    if (!(y > 0)) throw DomainError("mu_eval: y must be positive");
    double s = 0;
    for (const auto& t : mu.power_terms) s += t.c * std::pow(y, t.e);
    for (const auto& t : mu.step_terms)
        if (y >= t.x) s += t.a;
    for (const auto& t : mu.heat_terms)
        s += t.c * std::pow(y, -1.5) * std::exp(-t.q * t.q / (4.0 * y));
    return s;
}

double mu_derivative(const InverseLaplaceForm& mu, double y) {
    if (!(y > 0)) throw DomainError("mu_derivative: y must be positive");
    if (!mu.step_terms.empty())
        throw UnsupportedFamily(
            "mu_derivative: mu has step terms, the derivative criterion does not apply");
    double s = 0;
    for (const auto& t : mu.power_terms) s += t.c * t.e * std::pow(y, t.e - 1.0);
    for (const auto& t : mu.heat_terms) {
        const double q2 = t.q * t.q;
        s += t.c * std::exp(-q2 / (4.0 * y)) *
             (-1.5 * std::pow(y, -2.5) + 0.25 * q2 * std::pow(y, -3.5));
    }
    return s;
}

const char* to_string(MonotonicityClass c) {
    switch (c) {
        case MonotonicityClass::completely_monotonic: return "completely_monotonic";
        case MonotonicityClass::not_cm_certified: return "not_cm_certified";
        case MonotonicityClass::unknown_sampled_nonneg: return "unknown_sampled_nonneg";
        case MonotonicityClass::unknown_sampled_negative: return "unknown_sampled_negative";
    }
    return "?";
}

const char* to_string(StationaryKind k) {
    switch (k) {
        case StationaryKind::monotone: return "monotone";
        case StationaryKind::single_minimum: return "single_minimum";
        case StationaryKind::yukawa_threshold: return "yukawa_threshold";
        case StationaryKind::window: return "window";
    }
    return "?";
}

namespace {

// Scan mu over [lo, hi] on a log grid; returns the minimizing sample.
std::pair<double, double> scan_mu_min(const InverseLaplaceForm& mu, double lo, double hi, int n) {
    double best_y = lo, best_v = mu_eval(mu, lo);
    const double ratio = std::log(hi / lo);
    for (int i = 1; i <= n; ++i) {
        const double y = lo * std::exp(ratio * i / n);
        const double v = mu_eval(mu, y);
        if (v < best_v) {
            best_v = v;
            best_y = y;
        }
    }
    return {best_y, best_v};
}

MonotonicityReport classify_power_heat(const InverseLaplaceForm& mu) {
    // Only power + heat terms here. Leading power coefficient is positive by
    // validation, so mu > 0 for large y; near zero the smallest power
    // exponent dominates (heat terms vanish to all orders).
    MonotonicityReport rep;
    const auto& pw = mu.power_terms;
    double c1 = pw.front().c, e1 = pw.front().e;
    const double cn = pw.back().c, en = pw.back().e;
    const std::size_t nterms = pw.size() + mu.heat_terms.size();

    // Upper dominance point: c_n y^{e_n} exceeds n * |term| for every term.
    double hi = 1.0;
    for (const auto& t : pw)
        if (t.e < en)
            hi = std::max(hi, std::pow(static_cast<double>(nterms) * std::abs(t.c) / cn,
                                       1.0 / (en - t.e)));
    for (const auto& t : mu.heat_terms)
        hi = std::max(hi, std::pow(static_cast<double>(nterms) * std::abs(t.c) / cn,
                                   1.0 / (en + 1.5)));
    hi *= 2.0;
    // Lower end of the scan: below the power-term crossovers and the heat
    // bumps (each heat term peaks at y = q^2/6 and vanishes to all orders
    // below, so near zero the sign is that of c1).
    double lo = 1.0;
    for (const auto& t : pw)
        if (t.e > e1)
            lo = std::min(lo, std::pow(std::abs(c1) / (static_cast<double>(nterms) * std::abs(t.c)),
                                       1.0 / (t.e - e1)));
    for (const auto& t : mu.heat_terms) lo = std::min(lo, 0.01 * t.q * t.q / 6.0);
    lo *= 0.5;

    auto [wy, wv] = scan_mu_min(mu, lo, hi, 4000);
    rep.witnesses.emplace_back(wy, wv);
    const bool all_positive_coeffs = [&] {
        for (const auto& t : pw)
            if (t.c < 0) return false;
        for (const auto& t : mu.heat_terms)
            if (t.c < 0) return false;
        return true;
    }();
    if (all_positive_coeffs) {
        rep.cls = MonotonicityClass::completely_monotonic;
        return rep;
    }
    if (c1 < 0) {
        rep.cls = MonotonicityClass::not_cm_certified;  // mu < 0 near y = 0
        if (wv >= 0) rep.witnesses.emplace_back(0.5 * lo, mu_eval(mu, 0.5 * lo));
        return rep;
    }
    rep.cls = wv < 0 ? MonotonicityClass::unknown_sampled_negative
                     : MonotonicityClass::unknown_sampled_nonneg;
    return rep;
}

}  // namespace

MonotonicityReport classify_monotonicity(const PotentialSpec& f) {
    MonotonicityReport rep;
    const InverseLaplaceForm mu = inverse_laplace(f);
    return std::visit(
        Overload{
            [&](const ScreenedCoulombSum& g) {
                double prefix = 0;
                for (std::size_t k = 0; k < g.terms.size(); ++k) {
                    prefix += g.terms[k].a;
                    if (prefix < 0) {
                        // mu == prefix on [x_k, x_{k+1})
                        const double yhi = k + 1 < g.terms.size() ? g.terms[k + 1].x
                                                                  : g.terms[k].x + 1.0;
                        const double yw = 0.5 * (g.terms[k].x + yhi);
                        rep.cls = MonotonicityClass::not_cm_certified;
                        rep.witnesses.emplace_back(yw, prefix);
                        return rep;
                    }
                }
                rep.cls = MonotonicityClass::completely_monotonic;
                rep.witnesses.emplace_back(g.terms.front().x, g.terms.front().a);
                return rep;
            },
            [&](const InversePowerSum&) { return classify_power_heat(mu); },
            [&](const LennardJonesType& g) {
                const double c1 = g.a1 / std::tgamma(g.x1);
                const double c2 = g.a2 / std::tgamma(g.x2);
                const double ycross = std::pow(c1 / c2, 1.0 / (g.x2 - g.x1));
                rep.cls = MonotonicityClass::not_cm_certified;
                rep.witnesses.emplace_back(0.5 * ycross, mu_eval(mu, 0.5 * ycross));
                return rep;
            },
            [&](const AttractiveRepulsiveYukawa& g) {
                rep.cls = MonotonicityClass::not_cm_certified;
                const double yw = 0.5 * (g.x1 + g.x2);
                rep.witnesses.emplace_back(yw, -g.a1);
                return rep;
            },
            [&](const ExpDecay&) { return classify_power_heat(mu); },
            [&](const OppBuckingham& g) {
                // mu >= 0 iff G(y) = ln(c2/h) + (x2+1/2) ln y + x1^2/(4y) >= 0,
                // with exact minimum at y* = x1^2 / (4 x2 + 2).
                const double c2 = g.a2 / std::tgamma(g.x2);
                const double h = g.a1 * g.x1 / (2.0 * std::sqrt(kPi));
                const double ystar = g.x1 * g.x1 / (4.0 * g.x2 + 2.0);
                const double Gmin = std::log(c2 / h) + (g.x2 + 0.5) * std::log(ystar) +
                                    g.x1 * g.x1 / (4.0 * ystar);
                rep.cls = Gmin >= 0 ? MonotonicityClass::completely_monotonic
                                    : MonotonicityClass::not_cm_certified;
                rep.witnesses.emplace_back(ystar, mu_eval(mu, ystar));
                return rep;
            }},
        f);
}

namespace {

// Bisection for a root of fn on [lo, hi] with fn(lo), fn(hi) of opposite sign.
template <class Fn>
double bisect(Fn&& fn, double lo, double hi) {
    double flo = fn(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fn(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-14 * std::max(1.0, std::abs(lo))) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

StationaryReport stationary_analysis(const PotentialSpec& f) {
    StationaryReport rep;
    return std::visit(
        Overload{
            [&](const LennardJonesType& g) {
                rep.kind = StationaryKind::single_minimum;
                rep.r_min = std::pow(g.a2 * g.x2 / (g.a1 * g.x1), 1.0 / (g.x2 - g.x1));
                rep.f_min = evaluate(f, rep.r_min);
                rep.description = "single interior minimum of a2 r^-x2 - a1 r^-x1";
                return rep;
            },
            [&](const AttractiveRepulsiveYukawa& g) {
                rep.kind = StationaryKind::yukawa_threshold;
                // Increasing auxiliary g(r); its unique positive root.
                auto aux = [&](double r) {
                    return (g.x2 - g.x1) * r + std::log1p(g.x1 * r) - std::log1p(g.x2 * r) +
                           std::log(g.a1 / g.a2);
                };
                double hi = 1.0;
                while (aux(hi) < 0) hi *= 2.0;
                rep.alpha = bisect(aux, 0.0, hi);
                // Well of f itself: minimum past the sign change r0.
                const double r0 = std::log(g.a2 / g.a1) / (g.x2 - g.x1);
                auto fprime = [&](double r) {
                    const double e1 = g.a1 * std::exp(-g.x1 * r), e2 = g.a2 * std::exp(-g.x2 * r);
                    return (-g.x2 * e2 + g.x1 * e1) / r - (e2 - e1) / (r * r);
                };
                double rhi = 2.0 * r0 + 1.0;
                while (fprime(rhi) < 0) rhi *= 2.0;
                rep.r_min = bisect(fprime, r0, rhi);
                rep.f_min = evaluate(f, rep.r_min);
                rep.description = "negative well past r0 with increasing threshold auxiliary";
                return rep;
            },
            [&](const OppBuckingham& g) {
                // V'(r) = 0  <=>  W(r) = ln(a1 x1/(2 a2 x2)) + (x2+1/2) ln r - x1 sqrt(r) = 0.
                const double lead = std::log(g.a1 * g.x1 / (2.0 * g.a2 * g.x2));
                auto W = [&](double r) {
                    return lead + (g.x2 + 0.5) * std::log(r) - g.x1 * std::sqrt(r);
                };
                const double rpeak = std::pow((2.0 * g.x2 + 1.0) / g.x1, 2.0);
                if (W(rpeak) <= 1e-14) {
                    rep.kind = StationaryKind::monotone;
                    rep.description = "strictly decreasing: repulsion dominates everywhere";
                    return rep;
                }
                double lo = rpeak;
                while (W(lo) > 0) lo *= 0.5;
                rep.r_min = bisect(W, lo, rpeak);
                double hi = rpeak;
                while (W(hi) > 0) hi *= 2.0;
                rep.r_max = bisect([&](double r) { return -W(r); }, rpeak, hi);
                rep.f_min = evaluate(f, rep.r_min);
                rep.kind = StationaryKind::window;
                rep.description = "local minimum then local maximum (well window)";
                return rep;
            },
            [&](const auto&) -> StationaryReport {
                throw UnsupportedFamily(
                    "stationary_analysis: only the well families (lennard_jones_type, "
                    "attractive_repulsive_yukawa, opp_buckingham) are supported");
            }},
        f);
}

}  // namespace lopt
