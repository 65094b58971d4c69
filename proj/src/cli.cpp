#include "lopt/cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lopt/criteria.hpp"
#include "lopt/energy.hpp"
#include "lopt/lattice.hpp"
#include "lopt/parallel.hpp"
#include "lopt/potentials.hpp"
#include "lopt/precision.hpp"
#include "lopt/search.hpp"
#include "lopt/specfun.hpp"

namespace lopt {

namespace {

using ordered_json = nlohmann::ordered_json;

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}
std::string f17(double v) { return fmt(v, 17); }
std::string f6(double v) { return fmt(v, 6); }

struct RunConfig {
    std::string subcommand;
    std::string potential_file;
    std::optional<double> area;
    double tol = 1e-10;
    std::string format = "text";  // json | csv | text
    int threads = 0;              // 0 = auto
    std::optional<long long> seed;
};

Precision precision_from(const RunConfig& cfg) {
    Precision p;
    p.rel_tol = cfg.tol;
    p.abs_tol = cfg.tol * 1e-3;
    return p;
}

PotentialSpec load_potential(const std::string& path) {
    if (path.empty())
        throw ValidationError("this subcommand needs --potential <file.json>");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open potential file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_potential_json(ss.str());
}

std::pair<double, double> parse_xy(const std::string& s, const char* what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ValidationError(std::string(what) + ": expected two comma-separated reals");
    try {
        std::size_t e1 = 0, e2 = 0;
        const double a = std::stod(s.substr(0, comma), &e1);
        const double b = std::stod(s.substr(comma + 1), &e2);
        if (e1 != comma || e2 != s.size() - comma - 1)
            throw ValidationError(std::string(what) + ": trailing characters in number");
        return {a, b};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError(std::string(what) + ": expected two comma-separated reals");
    }
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& s, const char* what) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ValidationError(std::string(what) +
                                  ": expected colon-separated pairs like 1.5:3,2:2.5");
        try {
            out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ValidationError(std::string(what) + ": malformed pair '" + item + "'");
        }
    }
    if (out.empty()) throw ValidationError(std::string(what) + ": no pairs given");
    return out;
}

const std::vector<std::pair<double, double>>& default_table1_pairs() {
    static const std::vector<std::pair<double, double>> pairs = {
        {1.1, 1.5}, {1.1, 2.0}, {1.5, 2.0}, {1.1, 2.5}, {1.5, 2.5}, {2.0, 2.5},
        {1.1, 3.0}, {1.5, 3.0}, {2.0, 3.0}, {1.1, 3.5}, {1.5, 3.5}, {1.1, 4.0}};
    return pairs;
}

const std::vector<std::pair<double, double>>& default_table2_pairs() {
    static const std::vector<std::pair<double, double>> pairs = [] {
        const double cols[] = {1.1, 1.5, 2, 3, 4, 5, 6, 7, 8, 9};
        const double rows[] = {1.5, 2, 2.5, 3, 3.5, 4, 5, 6, 7, 8, 9, 10};
        std::vector<std::pair<double, double>> p;
        for (double x2 : rows)
            for (double x1 : cols)
                if (x1 < x2) p.emplace_back(x1, x2);
        return p;
    }();
    return pairs;
}

// ---- rendering helpers -----------------------------------------------------

class Emitter {
public:
    Emitter(std::ostream& out, const RunConfig& cfg) : out_(out), cfg_(cfg) {}

    bool json() const { return cfg_.format == "json"; }
    bool csv() const { return cfg_.format == "csv"; }

    ordered_json root(const char* subcommand) const {
        ordered_json j;
        j["schema"] = 1;
        j["subcommand"] = subcommand;
        if (cfg_.seed) j["seed"] = *cfg_.seed;
        return j;
    }

    void write_json(const ordered_json& j) { out_ << j.dump(2) << "\n"; }

    void csv_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out_ << cells[i] << (i + 1 == cells.size() ? "" : ",");
        out_ << "\n";
    }

    void text_kv(const char* key, const std::string& value) {
        out_ << key << " = " << value << "\n";
    }

    std::ostream& stream() { return out_; }

private:
    std::ostream& out_;
    const RunConfig& cfg_;
};

ordered_json energy_json(const EnergyValue& e) {
    ordered_json j;
    j["value"] = e.value;
    j["error_bound"] = e.error_bound;
    j["method"] = e.method;
    j["cutoff_r2"] = e.cutoff_r2;
    if (e.constant_CA) j["constant_CA"] = *e.constant_CA;
    return j;
}

ordered_json minimization_json(const MinimizationResult& r, bool with_clamp) {
    ordered_json j;
    j["shape"] = {{"x", r.shape.x}, {"y", r.shape.y}};
    j["area"] = r.area;
    j["classification"] = to_string(r.classification);
    j["shape_tol"] = r.shape_tol;
    j["special_distance"] = r.special_distance;
    j["energy"] = energy_json(r.energy);
    j["grid_energy"] = r.grid_energy;
    if (with_clamp) j["area_clamped"] = r.area_clamped;
    return j;
}

void emit_minimization(Emitter& em, const RunConfig& cfg, const char* name,
                       const MinimizationResult& r, bool with_clamp) {
    if (em.json()) {
        ordered_json j = em.root(name);
        j.update(minimization_json(r, with_clamp), true);
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"area", "x", "y", "classification", "energy", "error_bound"});
        em.csv_row({f17(r.area), f17(r.shape.x), f17(r.shape.y), to_string(r.classification),
                    f17(r.energy.value), f17(r.energy.error_bound)});
    } else {
        em.text_kv("classification", to_string(r.classification));
        em.text_kv("shape.x", f6(r.shape.x));
        em.text_kv("shape.y", f6(r.shape.y));
        em.text_kv("area", f6(r.area));
        em.text_kv("energy", f6(r.energy.value));
        em.text_kv("energy.error_bound", f6(r.energy.error_bound));
        em.text_kv("energy.method", r.energy.method);
        em.text_kv("special_distance", f6(r.special_distance));
        if (with_clamp) em.text_kv("area_clamped", r.area_clamped ? "true" : "false");
    }
    (void)cfg;
}

// ---- subcommand bodies -----------------------------------------------------

void cmd_energy(Emitter& em, const RunConfig& cfg, const std::string& lattice_arg) {
    const PotentialSpec f = load_potential(cfg.potential_file);
    if (!cfg.area) throw ValidationError("energy: needs --area");
    const auto [x, y] = parse_xy(lattice_arg, "--lattice");
    const ReducedLattice L = make_lattice(x, y, *cfg.area);
    const Precision p = precision_from(cfg);
    const EnergyValue direct = energy_direct(f, L, p);
    const EnergyValue integral = energy_integral(f, L, p);
    if (em.json()) {
        ordered_json j = em.root("energy");
        j["lattice"] = {{"x", L.x}, {"y", L.y}, {"area", L.area}};
        j["direct"] = energy_json(direct);
        j["integral"] = energy_json(integral);
        j["difference"] = direct.value - integral.value;
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"method", "value", "error_bound", "cutoff_r2"});
        em.csv_row({"direct", f17(direct.value), f17(direct.error_bound), f17(direct.cutoff_r2)});
        em.csv_row({"integral", f17(integral.value), f17(integral.error_bound),
                    f17(integral.cutoff_r2)});
    } else {
        em.text_kv("lattice", "(" + f6(L.x) + ", " + f6(L.y) + ") area " + f6(L.area));
        em.text_kv("energy.direct", f6(direct.value));
        em.text_kv("energy.integral", f6(integral.value));
        em.text_kv("difference", f6(direct.value - integral.value));
    }
}

void cmd_theta(Emitter& em, const RunConfig& cfg, const std::string& lattice_arg, double alpha) {
    if (!cfg.area) throw ValidationError("theta: needs --area");
    const auto [x, y] = parse_xy(lattice_arg, "--lattice");
    const ReducedLattice L = make_lattice(x, y, *cfg.area);
    const Precision p = precision_from(cfg);
    const double full = theta(L, alpha, p);
    const double punct = theta_punctured(L, alpha, p);
    if (em.json()) {
        ordered_json j = em.root("theta");
        j["lattice"] = {{"x", L.x}, {"y", L.y}, {"area", L.area}};
        j["alpha"] = alpha;
        j["theta"] = full;
        j["theta_minus_one"] = punct;
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"alpha", "theta", "theta_minus_one"});
        em.csv_row({f17(alpha), f17(full), f17(punct)});
    } else {
        em.text_kv("alpha", f6(alpha));
        em.text_kv("theta", f6(full));
        em.text_kv("theta_minus_one", f6(punct));
    }
}

void cmd_zeta(Emitter& em, const RunConfig& cfg, const std::string& shape, double two_s) {
    LatticeShape sh;
    ReducedLattice L = make_square(1.0);
    if (shape == "square") {
        sh = LatticeShape::square;
    } else if (shape == "triangular") {
        sh = LatticeShape::triangular;
        L = make_triangular(1.0);
    } else {
        throw ValidationError("zeta: --shape must be square or triangular");
    }
    const Precision p = precision_from(cfg);
    const double closed = epstein_zeta_closed(sh, two_s, p);
    const double direct = epstein_zeta_direct(L, two_s, p);
    const double rel = std::abs(closed - direct) / std::abs(closed);
    if (em.json()) {
        ordered_json j = em.root("zeta");
        j["shape"] = shape;
        j["two_s"] = two_s;
        j["closed"] = closed;
        j["direct"] = direct;
        j["rel_difference"] = rel;
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"shape", "two_s", "closed", "direct", "rel_difference"});
        em.csv_row({shape, f17(two_s), f17(closed), f17(direct), f17(rel)});
    } else {
        em.text_kv("shape", shape);
        em.text_kv("two_s", f6(two_s));
        em.text_kv("zeta.closed", fmt(closed, 15));
        em.text_kv("zeta.direct", fmt(direct, 15));
        em.text_kv("rel_difference", f6(rel));
    }
}

void cmd_check(Emitter& em, const RunConfig& cfg, const std::string& criterion) {
    const PotentialSpec f = load_potential(cfg.potential_file);
    if (!cfg.area) throw ValidationError("check: needs --area");
    const ConditionReport rep = criterion == "c1" ? check_c1_criterion(f, *cfg.area)
                                                  : check_sufficient_condition(f, *cfg.area);
    if (em.json()) {
        ordered_json j = em.root("check");
        j["criterion"] = criterion;
        j["area"] = rep.area;
        j["status"] = to_string(rep.status);
        j["certification_route"] = rep.certification_route;
        if (rep.area_threshold)
            j["area_threshold"] = *rep.area_threshold;
        else
            j["area_threshold"] = nullptr;
        ordered_json w = ordered_json::array();
        for (const auto& [yy, vv] : rep.witnesses) w.push_back({yy, vv});
        j["witnesses"] = w;
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"area", "status", "route", "area_threshold", "witness_y", "witness_value"});
        em.csv_row({f17(rep.area), to_string(rep.status), rep.certification_route,
                    rep.area_threshold ? f17(*rep.area_threshold) : "",
                    rep.witnesses.empty() ? "" : f17(rep.witnesses.front().first),
                    rep.witnesses.empty() ? "" : f17(rep.witnesses.front().second)});
    } else {
        em.text_kv("area", f6(rep.area));
        em.text_kv("status", to_string(rep.status));
        em.text_kv("certification_route", rep.certification_route);
        if (rep.area_threshold) em.text_kv("area_threshold", f6(*rep.area_threshold));
        if (!rep.witnesses.empty()) {
            em.text_kv("witness.y", f6(rep.witnesses.front().first));
            em.text_kv("witness.value", f6(rep.witnesses.front().second));
        }
    }
}

void cmd_bounds(Emitter& em, const RunConfig& cfg) {
    const PotentialSpec f = load_potential(cfg.potential_file);
    const Precision p = precision_from(cfg);

    ordered_json j = em.json() ? em.root("bounds") : ordered_json{};
    std::vector<std::array<std::string, 3>> rows;  // route, applicable, value

    auto add = [&](const char* key, auto&& compute, auto&& to_json) {
        try {
            auto value = compute();
            ordered_json node = to_json(value);
            if (em.json()) {
                node["applicable"] = true;
                j[key] = node;
            }
        } catch (const NotApplicable& e) {
            if (em.json()) j[key] = {{"applicable", false}, {"reason", e.what()}};
            rows.push_back({key, "no", e.what()});
        }
    };

    add(
        "high_density", [&] { return area_bound_high_density(f); },
        [&](const BoundResult& b) {
            rows.push_back({"high_density", "yes", f17(b.area_bound)});
            return ordered_json{{"area_bound", b.area_bound}, {"route", b.route}};
        });
    add(
        "low_density_square_comparison", [&] { return area_bound_low_density(f, make_square(1.0), p); },
        [&](double b) {
            rows.push_back({"low_density_square_comparison", "yes", f17(b)});
            return ordered_json{{"area_bound", b}, {"critical_density", 1.0 / b}};
        });

    std::visit(Overload{[&](const AttractiveRepulsiveYukawa& g) {
                            const YukawaGlobalResult r = yukawa_global_check(g);
                            rows.push_back({"yukawa_global", "yes",
                                            std::string("holds=") + (r.holds ? "true" : "false") +
                                                " lhs1=" + f17(r.lhs1) + " lhs2=" + f17(r.lhs2)});
                            if (em.json())
                                j["yukawa_global"] = {{"holds", r.holds},
                                                      {"lhs1", r.lhs1},
                                                      {"lhs2", r.lhs2}};
                        },
                        [&](const LennardJonesType& g) {
                            const LJGlobalResult r = lj_global_check(g, p);
                            rows.push_back({"lj_global", "yes",
                                            std::string("holds=") + (r.holds ? "true" : "false") +
                                                " minimizer_area=" + f17(r.minimizer_area)});
                            if (em.json())
                                j["lj_global"] = {{"holds", r.holds},
                                                  {"minimizer_area", r.minimizer_area},
                                                  {"h_x1", h_eval(g.x1)},
                                                  {"h_x2", h_eval(g.x2)}};
                        },
                        [&](const OppBuckingham& g) {
                            const double c = buckingham_rate_threshold(g, 1.0);
                            rows.push_back({"rate_threshold_at_unit_area", "yes", f17(c)});
                            if (em.json())
                                j["rate_threshold_at_unit_area"] = {{"value", c},
                                                                    {"applies_to", "x1"}};
                        },
                        [&](const auto&) {}},
               f);

    if (em.json()) {
        j["family"] = family_name(f);
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"route", "applicable", "value"});
        for (const auto& r : rows) em.csv_row({r[0], r[1], r[2]});
    } else {
        em.text_kv("family", family_name(f));
        for (const auto& r : rows)
            em.text_kv(r[0].c_str(), r[1] == "yes" ? r[2] : ("not applicable: " + r[2]));
    }
}

SearchOptions search_options_from(const RunConfig& cfg, int nx, int ny, double y_cap,
                                  int refine_iters, double shape_tol) {
    SearchOptions o;
    o.nx = nx;
    o.ny = ny;
    o.y_cap = y_cap;
    o.refine_iters = refine_iters;
    o.shape_tol = shape_tol;
    o.final_prec = precision_from(cfg);
    if (o.final_prec.rel_tol > o.objective_prec.rel_tol)
        o.objective_prec = o.final_prec;
    return o;
}

void cmd_counterexample(Emitter& em, const RunConfig& cfg) {
    const CounterexampleInterval ci = counterexample_interval(precision_from(cfg));
    if (em.json()) {
        ordered_json j = em.root("counterexample");
        j["discriminant"] = ci.discriminant;
        j["A1"] = ci.A1;
        j["A2"] = ci.A2;
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"discriminant", "A1", "A2"});
        em.csv_row({f17(ci.discriminant), f17(ci.A1), f17(ci.A2)});
    } else {
        em.text_kv("discriminant", fmt(ci.discriminant, 9));
        em.text_kv("A1", fmt(ci.A1, 9));
        em.text_kv("A2", fmt(ci.A2, 9));
    }
}

void cmd_table1(Emitter& em, const RunConfig& cfg, const std::string& pairs_arg, double a1,
                double a2) {
    const auto pairs =
        pairs_arg.empty() ? default_table1_pairs() : parse_pairs(pairs_arg, "--pairs");
    const auto rows = table1(pairs, a1, a2);
    if (em.json()) {
        ordered_json j = em.root("table1");
        j["a1"] = a1;
        j["a2"] = a2;
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"x1", r.x1},
                           {"x2", r.x2},
                           {"y_min", r.y_min},
                           {"r", r.r},
                           {"d", r.d},
                           {"certified", r.certified}});
        j["rows"] = arr;
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"x1", "x2", "y_min", "r", "d", "certified"});
        for (const auto& r : rows)
            em.csv_row({f17(r.x1), f17(r.x2), f17(r.y_min), f17(r.r), f17(r.d),
                        r.certified ? "true" : "false"});
    } else {
        for (const auto& r : rows)
            em.stream() << "(x1=" << f6(r.x1) << ", x2=" << f6(r.x2) << ")  y_min=" << f6(r.y_min)
                        << "  r=" << f6(r.r) << "  d=" << f6(r.d)
                        << (r.certified ? "" : "  [not certified]") << "\n";
    }
    (void)cfg;
}

void cmd_table2(Emitter& em, const RunConfig& cfg, const std::string& grid_arg) {
    const auto pairs =
        grid_arg.empty() ? default_table2_pairs() : parse_pairs(grid_arg, "--grid");
    const auto rows = table2(pairs);
    if (em.json()) {
        ordered_json j = em.root("table2");
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"x1", r.x1}, {"x2", r.x2}, {"d0", r.d0}});
        j["rows"] = arr;
        em.write_json(j);
    } else if (em.csv()) {
        em.csv_row({"x1", "x2", "d0"});
        for (const auto& r : rows) em.csv_row({f17(r.x1), f17(r.x2), f17(r.d0)});
    } else {
        for (const auto& r : rows)
            em.stream() << "(x1=" << f6(r.x1) << ", x2=" << f6(r.x2) << ")  d0=" << f6(r.d0)
                        << "\n";
    }
    (void)cfg;
}

void cmd_scan(Emitter& em, const RunConfig& cfg, double from, double to, int steps,
              const SearchOptions& opts) {
    const PotentialSpec f = load_potential(cfg.potential_file);
    if (!(from > 0) || !(to > from) || steps < 2)
        throw ValidationError("scan: needs 0 < --area-from < --area-to and --steps >= 2");
    struct Row {
        double area;
        MinimizationResult res;
    };
    std::vector<Row> rows;
    for (int k = 0; k < steps; ++k) {
        const double A = from + (to - from) * static_cast<double>(k) / (steps - 1);
        rows.push_back({A, minimize_fixed_area(f, A, opts)});
    }
    if (em.json()) {
        ordered_json j = em.root("scan");
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json one = minimization_json(r.res, false);
            arr.push_back(one);
        }
        j["rows"] = arr;
        em.write_json(j);
    } else {
        em.csv_row({"area", "classification", "x", "y", "energy"});
        for (const auto& r : rows)
            em.csv_row({f17(r.area), to_string(r.res.classification), f17(r.res.shape.x),
                        f17(r.res.shape.y), f17(r.res.energy.value)});
    }
}

void cmd_plotdata(Emitter& em, const RunConfig& cfg, const std::string& what,
                  const std::string& range_arg, int steps) {
    const auto [lo, hi] = parse_xy(range_arg, "--range");
    if (!(lo < hi)) throw DomainError("plotdata: --range lo must be below hi");
    if (steps < 2) throw DomainError("plotdata: --steps must be at least 2");

    std::function<double(double)> fn;
    if (what == "h") {
        fn = [](double t) { return h_eval(t); };
    } else if (what == "potential") {
        const PotentialSpec f = load_potential(cfg.potential_file);
        fn = [f](double r) { return evaluate(f, r); };
    } else if (what == "gA") {
        const PotentialSpec f = load_potential(cfg.potential_file);
        if (!cfg.area) throw ValidationError("plotdata --what gA: needs --area");
        const double A = *cfg.area;
        fn = [f, A](double y) { return g_eval(f, A, y); };
    } else {
        throw ValidationError("plotdata: --what must be potential, gA, or h");
    }

    std::vector<std::pair<double, double>> series;
    series.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / (steps - 1);
        series.emplace_back(x, fn(x));
    }
    if (em.json()) {
        ordered_json j = em.root("plotdata");
        j["what"] = what;
        ordered_json arr = ordered_json::array();
        for (const auto& [x, v] : series) arr.push_back({x, v});
        j["rows"] = arr;
        em.write_json(j);
    } else {
        em.csv_row({"x", "value"});
        for (const auto& [x, v] : series) em.csv_row({f17(x), f17(v)});
    }
}

int exit_code_for(const Error& e) {
    const std::string& c = e.code();
    const bool computation = c == "BudgetExceeded" || c == "SlowConvergence" ||
                             c == "QuadratureFailure" || c == "UnboundedBelow" || c == "NoWell";
    return computation ? 3 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;

    CLI::App app{"lattice-optima: lattice interaction energies, triangular-optimality "
                 "certificates, and minimizer searches"};
    app.require_subcommand(1);
    app.fallthrough(false);

    // Options shared by every subcommand (registered per-subcommand so that
    // `lattice-optima <sub> --format json` parses naturally).
    auto add_common = [&](CLI::App* sub, bool with_potential) {
        sub->add_option("--format", cfg.format, "Output format: json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Relative tolerance for numerical evaluation")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--threads", cfg.threads,
                        "Worker threads (0 = all hardware threads)")
            ->envname("LATTICE_OPTIMA_THREADS")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", cfg.seed, "Seed echoed into the output record");
        if (with_potential)
            sub->add_option("--potential,-p", cfg.potential_file,
                            "Path to a potential spec JSON file");
    };

    std::string lattice_arg = "0.5,0.86602540378443865";
    double alpha = 1.0;
    std::string shape = "square";
    double two_s = 4.0;
    std::string criterion = "sufficient";
    double scan_from = 0.5, scan_to = 4.0;
    int scan_steps = 8;
    std::string what = "h", range_arg = "1,5";
    int steps = 101;
    std::string pairs_arg, grid_arg;
    double a1 = 1.0, a2 = 1.0;
    int nx = 60, ny = 60, refine_iters = 200;
    double y_cap = 8.0, shape_tol = 1e-4;

    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--nx", nx, "Grid columns")->check(CLI::Range(2, 4096));
        sub->add_option("--ny", ny, "Grid rows")->check(CLI::Range(2, 4096));
        sub->add_option("--y-cap", y_cap, "Elongation ceiling (auto-extended)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--refine-iters", refine_iters, "Simplex refinement iterations")
            ->check(CLI::Range(1, 100000));
        sub->add_option("--shape-tol", shape_tol, "Classification tolerance")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* c_energy = app.add_subcommand("energy", "Lattice energy, direct and integral");
    add_common(c_energy, true);
    c_energy->add_option("--lattice", lattice_arg, "Shape x,y in the fundamental domain");
    c_energy->add_option("--area", cfg.area, "Lattice cell area")->required();

    CLI::App* c_theta = app.add_subcommand("theta", "Lattice theta function");
    add_common(c_theta, false);
    c_theta->add_option("--lattice", lattice_arg, "Shape x,y in the fundamental domain");
    c_theta->add_option("--area", cfg.area, "Lattice cell area")->required();
    c_theta->add_option("--alpha", alpha, "Gaussian parameter")->required();

    CLI::App* c_zeta = app.add_subcommand("zeta", "Epstein zeta, closed form vs direct");
    add_common(c_zeta, false);
    c_zeta->add_option("--shape", shape, "square or triangular")->required();
    c_zeta->add_option("--two-s", two_s, "Exponent 2s > 2")->required();

    CLI::App* c_check = app.add_subcommand("check", "Triangular-optimality condition report");
    add_common(c_check, true);
    c_check->add_option("--area", cfg.area, "Area to certify")->required();
    c_check->add_option("--criterion", criterion, "sufficient (g >= 0) or c1 (derivative)")
        ->check(CLI::IsMember({"sufficient", "c1"}));

    CLI::App* c_bounds = app.add_subcommand("bounds", "All applicable area bounds and checks");
    add_common(c_bounds, true);

    CLI::App* c_min = app.add_subcommand("minimize", "Fixed-area energy minimization");
    add_common(c_min, true);
    c_min->add_option("--area", cfg.area, "Lattice cell area")->required();
    add_grid(c_min);

    CLI::App* c_gmin = app.add_subcommand("global-min", "Area-free energy minimization");
    add_common(c_gmin, true);
    add_grid(c_gmin);

    CLI::App* c_t1 = app.add_subcommand("table1", "Global LJ minimizer data per exponent pair");
    add_common(c_t1, false);
    c_t1->add_option("--pairs", pairs_arg, "x1:x2 pairs, comma separated (default: built-in)");
    c_t1->add_option("--a1", a1, "Attractive coefficient")->check(CLI::PositiveNumber);
    c_t1->add_option("--a2", a2, "Repulsive coefficient")->check(CLI::PositiveNumber);

    CLI::App* c_t2 = app.add_subcommand("table2", "Critical non-optimality densities");
    add_common(c_t2, false);
    c_t2->add_option("--grid", grid_arg, "x1:x2 pairs, comma separated (default: built-in)");

    CLI::App* c_ce = app.add_subcommand("counterexample",
                                        "Square-beats-triangular interval for the three-term "
                                        "convex decreasing potential");
    add_common(c_ce, false);

    CLI::App* c_scan = app.add_subcommand("scan", "Minimizer classification across areas");
    add_common(c_scan, true);
    c_scan->add_option("--area-from", scan_from, "First area")->required();
    c_scan->add_option("--area-to", scan_to, "Last area")->required();
    c_scan->add_option("--steps", scan_steps, "Number of areas")->required();
    add_grid(c_scan);

    CLI::App* c_plot = app.add_subcommand("plotdata", "x,value series for plotting");
    add_common(c_plot, true);
    c_plot->add_option("--what", what, "potential, gA, or h")->required();
    c_plot->add_option("--range", range_arg, "lo,hi sample range")->required();
    c_plot->add_option("--steps", steps, "Sample count")->required();
    c_plot->add_option("--area", cfg.area, "Area (for --what gA)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    set_worker_count(cfg.threads);
    Emitter em(out, cfg);

    try {
        if (c_energy->parsed()) {
            cfg.subcommand = "energy";
            cmd_energy(em, cfg, lattice_arg);
        } else if (c_theta->parsed()) {
            cfg.subcommand = "theta";
            cmd_theta(em, cfg, lattice_arg, alpha);
        } else if (c_zeta->parsed()) {
            cfg.subcommand = "zeta";
            cmd_zeta(em, cfg, shape, two_s);
        } else if (c_check->parsed()) {
            cfg.subcommand = "check";
            cmd_check(em, cfg, criterion);
        } else if (c_bounds->parsed()) {
            cfg.subcommand = "bounds";
            cmd_bounds(em, cfg);
        } else if (c_min->parsed()) {
            cfg.subcommand = "minimize";
            const PotentialSpec f = load_potential(cfg.potential_file);
            if (!cfg.area) throw ValidationError("minimize: needs --area");
            const SearchOptions opts =
                search_options_from(cfg, nx, ny, y_cap, refine_iters, shape_tol);
            emit_minimization(em, cfg, "minimize", minimize_fixed_area(f, *cfg.area, opts),
                              false);
        } else if (c_gmin->parsed()) {
            cfg.subcommand = "global-min";
            const PotentialSpec f = load_potential(cfg.potential_file);
            const SearchOptions opts =
                search_options_from(cfg, nx, ny, y_cap, refine_iters, shape_tol);
            emit_minimization(em, cfg, "global-min", minimize_global(f, opts), true);
        } else if (c_t1->parsed()) {
            cfg.subcommand = "table1";
            cmd_table1(em, cfg, pairs_arg, a1, a2);
        } else if (c_t2->parsed()) {
            cfg.subcommand = "table2";
            cmd_table2(em, cfg, grid_arg);
        } else if (c_ce->parsed()) {
            cfg.subcommand = "counterexample";
            cmd_counterexample(em, cfg);
        } else if (c_scan->parsed()) {
            cfg.subcommand = "scan";
            const SearchOptions opts =
                search_options_from(cfg, nx, ny, y_cap, refine_iters, shape_tol);
            cmd_scan(em, cfg, scan_from, scan_to, scan_steps, opts);
        } else if (c_plot->parsed()) {
            cfg.subcommand = "plotdata";
            cmd_plotdata(em, cfg, what, range_arg, steps);
        }
    } catch (const Error& e) {
        if (em.json()) {
            ordered_json j;
            j["schema"] = 1;
            j["error"] = {{"type", e.code()}, {"message", e.what()}};
            out << j.dump(2) << "\n";
        }
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        if (em.json()) {
            ordered_json j;
            j["schema"] = 1;
            j["error"] = {{"type", "Internal"}, {"message", e.what()}};
            out << j.dump(2) << "\n";
        }
        err << "error [Internal]: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace lopt
