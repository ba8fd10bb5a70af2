#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhkit/error.hpp"
#include "qhkit/extremal.hpp"
#include "qhkit/metrics.hpp"
#include "qhkit/mobius.hpp"
#include "qhkit/qh_ball.hpp"
#include "qhkit/special_functions.hpp"
#include "qhkit/verify.hpp"

namespace qhkit::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Plain, Csv, Json };

std::string num(double v, int precision) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string plain(double v) { return num(v, 13); }
std::string full(double v) { return num(v, 17); }

double parse_real(const std::string& text, const std::string& flag) {
    const char* first = text.data();
    const char* last = first + text.size();
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(v)) {
        throw UsageError("--" + flag + ": '" + text + "' is not a finite real number");
    }
    return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_real(text.substr(start, comma - start), flag));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Point parse_point(const std::string& text, const std::string& flag) {
    std::vector<double> c = parse_list(text, flag);
    if (c.size() < 2) throw UsageError("--" + flag + ": a point needs at least 2 coordinates");
    return Point(std::move(c));
}

ExtendedPoint parse_extended(const std::string& text, const std::string& flag, std::size_t dim) {
    if (text == "inf") return ExtendedPoint::infinity(dim);
    return parse_point(text, flag);
}

std::size_t infer_dim(const std::string& text) {
    if (text == "inf") return 0;
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), ',')) + 1;
}

json point_json(const Point& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

std::string point_plain(const Point& p) {
    std::string s;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) s += ',';
        s += plain(p[i]);
    }
    return s;
}

std::string csv_quote(const std::string& s) {
    std::string q = "\"";
    for (const char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

struct Globals {
    std::string format = "";
    std::uint64_t rng = 1;
    double tol = kDefaultQhTolerance;
    CLI::Option* rng_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
};

Format resolve_format(const Globals& g, Format fallback) {
    if (g.format.empty()) return fallback;
    if (g.format == "plain") return Format::Plain;
    if (g.format == "csv") return Format::Csv;
    return Format::Json;
}

// ---------------------------------------------------------------------------

struct DistArgs {
    std::string metric, x, y, z, boundary;
    CLI::Option *z_opt = nullptr, *b_opt = nullptr;
};

int cmd_dist(const DistArgs& a, const Globals& g, std::ostream& out) {
    static const std::set<std::string> metrics{"j", "rho", "k-punctured", "j-punctured", "k-ball", "q", "delta"};
    if (!metrics.count(a.metric)) throw UsageError("--metric must be one of j, rho, k-punctured, j-punctured, k-ball, q, delta");
    const bool punctured = a.metric == "k-punctured" || a.metric == "j-punctured";
    if (punctured != (a.z_opt->count() > 0)) {
        throw UsageError(punctured ? "--z is required for punctured metrics" : "--z only applies to punctured metrics");
    }
    if (a.b_opt->count() && a.metric != "delta") throw UsageError("--boundary only applies to --metric delta");
    if (g.tol_opt->count() && a.metric != "k-ball") throw UsageError("--tol only applies to --metric k-ball");

    const Format fmt = resolve_format(g, Format::Plain);
    double value = 0.0;
    std::optional<CertifiedDistance> interval;
    if (a.metric == "q") {
        const std::size_t dim = std::max(infer_dim(a.x), infer_dim(a.y));
        value = chordal(parse_extended(a.x, "x", dim), parse_extended(a.y, "y", dim));
    } else {
        const Point x = parse_point(a.x, "x");
        const Point y = parse_point(a.y, "y");
        if (a.metric == "j") value = j_ball(x, y);
        else if (a.metric == "rho") value = rho_ball(x, y);
        else if (a.metric == "k-punctured") value = k_punctured(parse_point(a.z, "z"), x, y);
        else if (a.metric == "j-punctured") value = j_punctured(parse_point(a.z, "z"), x, y);
        else if (a.metric == "k-ball") {
            interval = k_ball_refined(x, y, g.tol);
            value = interval->mid();
        } else {
            Boundary boundary = AnalyticBall{};
            if (a.b_opt->count()) {
                std::vector<ExtendedPoint> pts;
                std::stringstream ss(a.boundary);
                std::string item;
                while (std::getline(ss, item, ';')) pts.push_back(parse_extended(item, "boundary", x.dim()));
                boundary = std::move(pts);
            }
            value = delta(boundary, x, y);
        }
    }

    switch (fmt) {
        case Format::Plain:
            out << plain(value);
            if (interval) {
                out << " [" << plain(interval->lo) << ", " << plain(interval->hi) << "] "
                    << to_string(interval->method);
            }
            out << '\n';
            break;
        case Format::Csv:
            out << "metric,value" << (interval ? ",lo,hi,method" : "") << '\n';
            out << a.metric << ',' << full(value);
            if (interval) out << ',' << full(interval->lo) << ',' << full(interval->hi) << ',' << to_string(interval->method);
            out << '\n';
            break;
        case Format::Json: {
            json j{{"metric", a.metric}, {"value", value}};
            if (interval) {
                j["lo"] = interval->lo;
                j["hi"] = interval->hi;
                j["method"] = to_string(interval->method);
            }
            out << j.dump(2) << '\n';
            break;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct MobiusArgs {
    std::string a, x, kappa;
    CLI::Option* kappa_opt = nullptr;
};

int cmd_mobius(const MobiusArgs& m, const Globals& g, std::ostream& out) {
    const Point a = parse_point(m.a, "a");
    const Point x = parse_point(m.x, "x");
    require_same_dim(a, x);
    Point image = x;
    if (m.kappa_opt->count()) {
        image = BallMobius::make(a, parse_list(m.kappa, "kappa")).apply(x);
    } else {
        image = canonical_map(a, x);
    }
    switch (resolve_format(g, Format::Plain)) {
        case Format::Plain: out << point_plain(image) << '\n'; break;
        case Format::Csv:
            for (std::size_t i = 0; i < image.dim(); ++i) out << (i ? "," : "") << "image_" << i + 1;
            out << '\n';
            for (std::size_t i = 0; i < image.dim(); ++i) out << (i ? "," : "") << full(image[i]);
            out << '\n';
            break;
        case Format::Json:
            out << json{{"a", point_json(a)}, {"x", point_json(x)}, {"image", point_json(image)}}.dump(2) << '\n';
            break;
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 7;
    std::size_t samples = 10000;
    bool corrupt = false;
    CLI::Option* seed_opt = nullptr;
};

int cmd_verify(const VerifyArgs& v, const Globals& g, std::ostream& out) {
    const auto& suites = verify_suites();
    if (std::find(suites.begin(), suites.end(), v.suite) == suites.end()) {
        throw UsageError("--suite must be one of all, thm13, lemma23, thm31, lemma33, prop14, thm16, conj17, conj28");
    }
    if (v.samples < 1) throw UsageError("--samples must be >= 1");
    VerifyOptions opt;
    opt.suite = v.suite;
    opt.seed = v.seed_opt->count() ? v.seed : (g.rng_opt->count() ? g.rng : v.seed);
    opt.samples = v.samples;
    opt.corrupt = v.corrupt;
    const VerifyReport report = run_verify(opt);

    switch (resolve_format(g, Format::Plain)) {
        case Format::Plain: out << format_report(report); break;
        case Format::Csv:
            out << "name,passed,margin,detail\n";
            for (const auto& c : report.checks) {
                out << c.name << ',' << (c.passed ? "true" : "false") << ',' << full(c.margin) << ','
                    << csv_quote(c.detail) << '\n';
            }
            break;
        case Format::Json: {
            json checks = json::array();
            for (const auto& c : report.checks) {
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"margin", c.margin}, {"detail", c.detail}});
            }
            out << json{{"suite", opt.suite},
                        {"seed", opt.seed},
                        {"samples", opt.samples},
                        {"passed", report.passed()},
                        {"checks", checks}}
                       .dump(2)
                << '\n';
            break;
        }
    }
    return report.passed() ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
    std::string problem, z, ts;
    double a = 0.0;
    int seeds = 16;
    std::size_t budget = 20000;
    std::size_t ksteps = 31, rsteps = 199;
    double kmax = 4.0;
    CLI::Option *z_opt = nullptr, *a_opt = nullptr, *ts_opt = nullptr, *seeds_opt = nullptr,
                *budget_opt = nullptr, *ksteps_opt = nullptr, *rsteps_opt = nullptr, *kmax_opt = nullptr;
};

json search_json(const SearchResult& s, std::size_t dim) {
    auto args = [dim](std::span<const double> p) {
        json a = json::array();
        if (p.size() == 2 * dim) {
            a.push_back(std::vector<double>(p.begin(), p.begin() + dim));
            a.push_back(std::vector<double>(p.begin() + dim, p.end()));
        } else {
            a.push_back(std::vector<double>(p.begin(), p.end()));
        }
        return a;
    };
    json trace = json::array();
    for (const auto& t : s.trace) {
        trace.push_back({{"iteration", t.iteration}, {"best_value", t.best_value}, {"args", args(t.params)}});
    }
    json best = json::array();
    for (const Point& p : s.best_args) best.push_back(point_json(p));
    return {{"best_value", s.best_value}, {"best_args", best},     {"status", to_string(s.status)},
            {"tolerance", s.tolerance},   {"evaluations", s.evaluations}, {"trace", trace}};
}

void search_csv(const SearchResult& s, std::size_t dim, std::ostream& out) {
    out << "iteration,best_value";
    for (std::size_t i = 1; i <= dim; ++i) out << ",x_" << i;
    for (std::size_t i = 1; i <= dim; ++i) out << ",y_" << i;
    out << '\n';
    for (const auto& t : s.trace) {
        out << t.iteration << ',' << full(t.best_value);
        for (const double v : t.params) out << ',' << full(v);
        out << '\n';
    }
}

void search_plain(const SearchResult& s, std::ostream& out) {
    out << "best_value " << plain(s.best_value) << '\n';
    for (std::size_t i = 0; i < s.best_args.size(); ++i) {
        out << (i == 0 ? "x " : "y ") << point_plain(s.best_args[i]) << '\n';
    }
    out << "status " << to_string(s.status) << '\n';
    out << "tolerance " << plain(s.tolerance) << '\n';
    out << "evaluations " << s.evaluations << '\n';
}

int cmd_search(const SearchArgs& s, const Globals& g, std::ostream& out) {
    static const std::set<std::string> problems{"qk-sup", "thm13-sharpness", "conj17", "conj28-grid"};
    if (!problems.count(s.problem)) throw UsageError("--problem must be one of qk-sup, thm13-sharpness, conj17, conj28-grid");
    auto only = [&](std::initializer_list<CLI::Option*> allowed) {
        for (CLI::Option* o : {s.z_opt, s.a_opt, s.ts_opt, s.seeds_opt, s.budget_opt, s.ksteps_opt, s.rsteps_opt,
                               s.kmax_opt, g.rng_opt, g.tol_opt}) {
            if (o->count() && std::find(allowed.begin(), allowed.end(), o) == allowed.end()) {
                throw UsageError(o->get_name() + " does not apply to --problem " + s.problem);
            }
        }
    };
    if (s.seeds < 1) throw UsageError("--seeds must be >= 1");
    if (s.budget < 1) throw UsageError("--budget must be >= 1");
    const Format fmt = resolve_format(g, Format::Json);

    if (s.problem == "qk-sup") {
        only({s.z_opt, s.seeds_opt, s.budget_opt, g.rng_opt});
        if (!s.z_opt->count()) throw UsageError("--z is required for qk-sup");
        const Point z = parse_point(s.z, "z");
        RatioProblem p{MetricTerm::chordal(), MetricTerm::k_punctured(z), SearchSpace::box(z, 3.0), {}};
        const SearchResult r = maximize(p, s.seeds, s.budget, g.rng);
        const double bound = (z.norm() + std::sqrt(1.0 + z.norm_squared())) / 2.0;
        if (fmt == Format::Csv) search_csv(r, z.dim(), out);
        else if (fmt == Format::Plain) {
            search_plain(r, out);
            out << "bound " << plain(bound) << '\n';
        } else {
            json j = search_json(r, z.dim());
            j["problem"] = s.problem;
            j["bound"] = bound;
            out << j.dump(2) << '\n';
        }
        return kOk;
    }

    if (s.problem == "thm13-sharpness") {
        only({s.a_opt, s.ts_opt});
        if (!s.a_opt->count()) throw UsageError("--a is required for thm13-sharpness");
        const std::vector<double> ts =
            s.ts_opt->count() ? parse_list(s.ts, "ts") : std::vector<double>{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
        const auto rows = thm13_sharpness(s.a, ts);
        std::vector<double> fw, inv;
        for (const auto& r : rows) {
            fw.push_back(r.ratio_forward);
            inv.push_back(r.ratio_inverse);
        }
        const double lf = richardson_limit(ts, fw);
        const double li = richardson_limit(ts, inv);
        if (fmt == Format::Csv) {
            out << "t,ratio_forward,ratio_inverse\n";
            for (const auto& r : rows) out << full(r.t) << ',' << full(r.ratio_forward) << ',' << full(r.ratio_inverse) << '\n';
        } else if (fmt == Format::Plain) {
            for (const auto& r : rows) out << plain(r.t) << ' ' << plain(r.ratio_forward) << ' ' << plain(r.ratio_inverse) << '\n';
            out << "limit " << plain(lf) << ' ' << plain(li) << '\n';
        } else {
            json jr = json::array();
            for (const auto& r : rows) jr.push_back({{"t", r.t}, {"ratio_forward", r.ratio_forward}, {"ratio_inverse", r.ratio_inverse}});
            out << json{{"problem", s.problem},
                        {"absa", s.a},
                        {"rows", jr},
                        {"limit_forward", lf},
                        {"limit_inverse", li},
                        {"expected_forward", 1.0 / (1.0 + s.a)},
                        {"expected_inverse", 1.0 + s.a}}
                       .dump(2)
                << '\n';
        }
        return kOk;
    }

    if (s.problem == "conj17") {
        only({s.a_opt, s.seeds_opt, s.budget_opt, g.rng_opt});
        if (!s.a_opt->count()) throw UsageError("--a is required for conj17");
        const Conj17Report rep = conjecture17_explore(s.a, s.budget, g.rng, s.seeds);
        if (fmt == Format::Csv) search_csv(rep.search, 2, out);
        else if (fmt == Format::Plain) {
            search_plain(rep.search, out);
            out << "bound " << plain(rep.bound) << '\n';
            out << "diameter_ratio " << plain(rep.diameter_ratio) << '\n';
            out << "diameter_limit " << plain(rep.diameter_limit) << '\n';
            out << "verdict " << rep.verdict << '\n';
        } else {
            json j = search_json(rep.search, 2);
            j["problem"] = s.problem;
            j["absa"] = rep.absa;
            j["bound"] = rep.bound;
            j["diameter_ratio"] = rep.diameter_ratio;
            j["diameter_limit"] = rep.diameter_limit;
            j["exceeded"] = rep.exceeded;
            j["verdict"] = rep.verdict;
            out << j.dump(2) << '\n';
        }
        return kOk;
    }

    only({s.ksteps_opt, s.rsteps_opt, s.kmax_opt});
    const Conj28Grid grid = conj28_grid(s.ksteps, s.rsteps, s.kmax);
    if (fmt == Format::Csv) {
        out << "points,violations,max_ratio,worst_K,worst_r\n"
            << grid.points << ',' << grid.violations << ',' << full(grid.max_ratio) << ',' << full(grid.worst_K)
            << ',' << full(grid.worst_r) << '\n';
    } else if (fmt == Format::Plain) {
        out << "points " << grid.points << "\nviolations " << grid.violations << "\nmax_ratio "
            << plain(grid.max_ratio) << "\nworst_K " << plain(grid.worst_K) << "\nworst_r " << plain(grid.worst_r)
            << '\n';
    } else {
        out << json{{"problem", s.problem},
                    {"points", grid.points},
                    {"violations", grid.violations},
                    {"max_ratio", grid.max_ratio},
                    {"worst_K", grid.worst_K},
                    {"worst_r", grid.worst_r}}
                   .dump(2)
            << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------

struct SpecfunArgs {
    std::string fn;
    double r = 0, K = 0, t = 0, a = 0, m = 0, eta1 = 0, lambda = 0;
    int n = 2;
    CLI::Option *r_opt, *K_opt, *t_opt, *a_opt, *m_opt, *eta_opt, *lambda_opt, *n_opt;
};

int cmd_specfun(const SpecfunArgs& s, const Globals& g, std::ostream& out) {
    const std::vector<std::pair<std::string, CLI::Option*>> all{
        {"r", s.r_opt}, {"K", s.K_opt}, {"t", s.t_opt}, {"a", s.a_opt}, {"m", s.m_opt},
        {"eta1", s.eta_opt}, {"lambda", s.lambda_opt}, {"n", s.n_opt}};
    auto want = [&](std::set<std::string> required, std::set<std::string> optional = {}) {
        for (const auto& [name, opt] : all) {
            const bool given = opt->count() > 0;
            if (required.count(name) && !given) throw UsageError("--" + name + " is required for --fn " + s.fn);
            if (given && !required.count(name) && !optional.count(name)) {
                throw UsageError("--" + name + " does not apply to --fn " + s.fn);
            }
        }
        if (g.rng_opt->count() || g.tol_opt->count()) throw UsageError("--rng/--tol do not apply to specfun");
    };

    std::vector<std::pair<std::string, double>> values;
    if (s.fn == "mu") {
        want({"r"});
        values = {{"mu", mu(s.r)}};
    } else if (s.fn == "mu-inverse") {
        want({"m"});
        const ModulusPair p = mu_inverse(s.m);
        values = {{"r", p.r}, {"complement", p.complement}};
    } else if (s.fn == "phi") {
        want({"K", "r"});
        values = {{"phi", phi_K2(s.K, s.r)}};
    } else if (s.fn == "eta") {
        want({"K"});
        values = {{"eta", eta_K2_at_one(s.K)}};
    } else if (s.fn == "b") {
        want({"K"}, {"n", "eta1", "lambda"});
        const DistortionParams p = DistortionParams::make(
            s.n, s.K, s.eta_opt->count() ? std::optional<double>(s.eta1) : std::nullopt,
            s.lambda_opt->count() ? std::optional<double>(s.lambda) : std::nullopt);
        values = {{"b", seittenranta_b(p)}, {"alpha", p.alpha}};
    } else if (s.fn == "lemma22") {
        want({"r", "t"});
        values = {{"f", lemma22_f(s.r, s.t)}};
    } else if (s.fn == "remark") {
        want({"a", "t"});
        values = {{"f", remark_f(s.a, s.t)}};
    } else if (s.fn == "remark-quotient") {
        want({"a", "t"});
        values = {{"quotient", remark_quotient(s.a, s.t)}};
    } else if (s.fn == "lemma33") {
        want({"a"});
        const Lemma33Max l = lemma33_max(s.a);
        values = {{"maxval", l.maxval}, {"argr", l.argr}};
    } else {
        throw UsageError("--fn must be one of mu, mu-inverse, phi, eta, b, lemma22, remark, remark-quotient, lemma33");
    }

    switch (resolve_format(g, Format::Plain)) {
        case Format::Plain:
            if (values.size() == 1) {
                out << plain(values[0].second) << '\n';
            } else {
                for (const auto& [k, v] : values) out << k << ' ' << plain(v) << '\n';
            }
            break;
        case Format::Csv:
            for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].first;
            out << '\n';
            for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << full(values[i].second);
            out << '\n';
            break;
        case Format::Json: {
            json j{{"fn", s.fn}};
            for (const auto& [k, v] : values) j[k] = v;
            out << j.dump(2) << '\n';
            break;
        }
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qhkit: hyperbolic-type metrics of the unit ball and punctured space", "qhkit"};
    app.require_subcommand(1, 1);

    Globals g;
    app.add_option("--format", g.format, "plain | csv | json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    g.rng_opt = app.add_option("--rng", g.rng, "RNG seed for searches");
    g.tol_opt = app.add_option("--tol", g.tol, "target interval width for k-ball")->check(CLI::PositiveNumber);

    DistArgs dist;
    CLI::App* d = app.add_subcommand("dist", "evaluate a metric between two points")->fallthrough();
    d->add_option("--metric", dist.metric, "j | rho | k-punctured | j-punctured | k-ball | q | delta")->required();
    d->add_option("--x", dist.x, "comma-separated coordinates")->required();
    d->add_option("--y", dist.y, "comma-separated coordinates")->required();
    dist.z_opt = d->add_option("--z", dist.z, "puncture point");
    dist.b_opt = d->add_option("--boundary", dist.boundary, "boundary sample for delta, ';'-separated points, 'inf' allowed");

    MobiusArgs mob;
    CLI::App* mo = app.add_subcommand("mobius", "apply T_a (or kappa . T_a) to a point")->fallthrough();
    mo->add_option("--a", mob.a, "center a with |a| < 1")->required();
    mo->add_option("--x", mob.x, "point in the closed unit ball")->required();
    mob.kappa_opt = mo->add_option("--kappa", mob.kappa, "orthogonal matrix, row-major, comma-separated");

    VerifyArgs ver;
    CLI::App* v = app.add_subcommand("verify", "run verification suites")->fallthrough();
    v->add_option("--suite", ver.suite, "all | thm13 | lemma23 | thm31 | lemma33 | prop14 | thm16 | conj17 | conj28");
    ver.seed_opt = v->add_option("--seed", ver.seed, "sampling seed");
    v->add_option("--samples", ver.samples, "random samples per check");
    v->add_flag("--corrupt", ver.corrupt, "scale proven constants by 0.98 (must fail)");

    SearchArgs se;
    CLI::App* s = app.add_subcommand("search", "extremal searches")->fallthrough();
    s->add_option("--problem", se.problem, "qk-sup | thm13-sharpness | conj17 | conj28-grid")->required();
    se.z_opt = s->add_option("--z", se.z, "puncture point (qk-sup)");
    se.a_opt = s->add_option("--a", se.a, "|a| (thm13-sharpness, conj17)");
    se.ts_opt = s->add_option("--ts", se.ts, "comma-separated t sequence (thm13-sharpness)");
    se.seeds_opt = s->add_option("--seeds", se.seeds, "local refinements");
    se.budget_opt = s->add_option("--budget", se.budget, "objective evaluations");
    se.ksteps_opt = s->add_option("--ksteps", se.ksteps, "K grid size (conj28-grid)");
    se.rsteps_opt = s->add_option("--rsteps", se.rsteps, "r grid size (conj28-grid)");
    se.kmax_opt = s->add_option("--kmax", se.kmax, "largest K (conj28-grid)");

    SpecfunArgs sf;
    CLI::App* f = app.add_subcommand("specfun", "special functions")->fallthrough();
    f->add_option("--fn", sf.fn, "mu | mu-inverse | phi | eta | b | lemma22 | remark | remark-quotient | lemma33")->required();
    sf.r_opt = f->add_option("--r", sf.r);
    sf.K_opt = f->add_option("--K", sf.K);
    sf.t_opt = f->add_option("--t", sf.t);
    sf.a_opt = f->add_option("--a", sf.a);
    sf.m_opt = f->add_option("--m", sf.m);
    sf.eta_opt = f->add_option("--eta1", sf.eta1);
    sf.lambda_opt = f->add_option("--lambda", sf.lambda);
    sf.n_opt = f->add_option("--n", sf.n);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (d->parsed()) return cmd_dist(dist, g, out);
        if (mo->parsed()) return cmd_mobius(mob, g, out);
        if (v->parsed()) return cmd_verify(ver, g, out);
        if (s->parsed()) return cmd_search(se, g, out);
        return cmd_specfun(sf, g, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

}  // namespace qhkit::cli
