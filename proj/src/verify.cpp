#include "qhkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "qhkit/error.hpp"
#include "qhkit/extremal.hpp"
#include "qhkit/metrics.hpp"
#include "qhkit/mobius.hpp"
#include "qhkit/qh_ball.hpp"
#include "qhkit/special_functions.hpp"
#include "qhkit/test_maps.hpp"

namespace qhkit {
namespace {

using Rng = std::mt19937_64;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Point random_direction(Rng& rng, std::size_t n) {
    std::normal_distribution<double> g;
    for (;;) {
        std::vector<double> c(n);
        for (double& v : c) v = g(rng);
        Point p(std::move(c));
        const double len = p.norm();
        if (len > 1e-6) return p / len;
    }
}

// Radii cluster both in the bulk and within 1e-6 of the rim.
Point random_ball_point(Rng& rng, std::size_t n, double rmax = 1.0) {
    const double u = uniform(rng, 0.0, 1.0);
    double r;
    if (rng() & 1U) {
        r = rmax * std::pow(u, 1.0 / static_cast<double>(n));
    } else {
        r = rmax * (1.0 - std::pow(10.0, -6.0 * u));
    }
    return random_direction(rng, n) * std::min(r, std::nextafter(rmax, 0.0));
}

std::pair<Point, Point> random_ball_pair(Rng& rng, std::size_t n, double rmax = 1.0) {
    const Point x = random_ball_point(rng, n, rmax);
    if (rng() % 4 == 0) {
        for (int tries = 0; tries < 16; ++tries) {
            const double scale = std::pow(10.0, -uniform(rng, 1.0, 8.0)) * (rmax - x.norm());
            Point y = x + random_direction(rng, n) * scale;
            if (y.norm() < rmax && !(y == x)) return {x, y};
        }
    }
    return {x, random_ball_point(rng, n, rmax)};
}

class Runner {
public:
    Runner(const VerifyOptions& o) : opt_(o), kappa_(o.corrupt ? 0.98 : 1.0) {}

    double kappa() const { return kappa_; }
    std::size_t samples() const { return opt_.samples; }

    Rng rng(const std::string& name) const { return Rng(opt_.seed ^ fnv1a(name)); }

    void add(std::string name, double margin, std::string detail) {
        results_.push_back({std::move(name), margin >= 0.0 && std::isfinite(margin), margin, std::move(detail)});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    VerifyOptions opt_;
    double kappa_;
    std::vector<CheckResult> results_;
};

// ---------------------------------------------------------------------------

void suite_thm13(Runner& R) {
    const double k = R.kappa();
    {
        const std::vector<double> ts{1e-4};
        const SharpnessRow row = thm13_sharpness(0.5, ts).front();
        R.add("thm13.sharpness_forward", 1e-3 - std::abs(row.ratio_forward - k * 2.0 / 3.0),
              "ratio " + fmt("%.12g", row.ratio_forward) + " at t=1e-4");
        R.add("thm13.sharpness_inverse", 1e-3 - std::abs(row.ratio_inverse - k * 1.5),
              "ratio " + fmt("%.12g", row.ratio_inverse) + " at t=1e-4");
    }
    {
        const std::vector<double> ts{1e-2, 1e-3, 1e-4};
        const auto rows = thm13_sharpness(0.5, ts);
        std::vector<double> fw, inv;
        for (const auto& r : rows) {
            fw.push_back(r.ratio_forward);
            inv.push_back(r.ratio_inverse);
        }
        const double lf = richardson_limit(ts, fw);
        const double li = richardson_limit(ts, inv);
        R.add("thm13.richardson_forward", 1e-6 - std::abs(lf - k * 2.0 / 3.0), "limit " + fmt("%.12g", lf));
        R.add("thm13.richardson_inverse", 1e-6 - std::abs(li - k * 1.5), "limit " + fmt("%.12g", li));
    }
    {
        const double absa = 1.0 - 1e-3;
        const std::vector<double> ts{1e-7};
        const SharpnessRow row = thm13_sharpness(absa, ts).front();
        R.add("thm13.factor_two_context", row.ratio_inverse - (2.0 * k - 2e-3),
              "inverse ratio " + fmt("%.12g", row.ratio_inverse) + " at |a|=1-1e-3, t=1e-7");
    }
    {
        Rng rng = R.rng("thm13.bound_certified");
        const double tol = 1e-4;
        double margin = std::numeric_limits<double>::infinity();
        std::size_t violations = 0;
        for (std::size_t i = 0; i < R.samples(); ++i) {
            const std::size_t n = 2 + (i % 2);
            const Point a = random_ball_point(rng, n, 0.95);
            const auto [x, y] = random_ball_pair(rng, n);
            const Point tx = canonical_map(a, x);
            const Point ty = canonical_map(a, y);
            if (!(tx.norm() < 1.0) || !(ty.norm() < 1.0)) continue;
            const double hi_img = k_ball_refined(tx, ty, tol).hi;
            const double hi_src = k_ball_refined(x, y, tol).hi;
            const double slack = k * (1.0 + a.norm()) * hi_src + 3.0 * tol - hi_img;
            if (slack < 0.0) ++violations;
            margin = std::min(margin, slack);
        }
        R.add("thm13.bound_certified", margin, "violations " + std::to_string(violations));
    }
    {
        Rng rng = R.rng("thm13.bilipschitz");
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < R.samples(); ++i) {
            const std::size_t n = 2 + (i % 3);
            const Point a = random_ball_point(rng, n, 0.99);
            const auto [x, y] = random_ball_pair(rng, n);
            const double L = k * BallMobius::canonical(a).bilipschitz_constant();
            const double d = distance(x, y);
            const double di = image_separation(a, x, y);
            margin = std::min(margin, std::min(L * d - di, di - d / L) / d);
        }
        R.add("thm13.bilipschitz", margin + 1e-12, "relative slack");
    }
    {
        const Point a{0.7, 0.0};
        RatioProblem p{MetricTerm::rho_ball().composed_with(BallMobius::canonical(a)),
                       MetricTerm::rho_ball(), SearchSpace::ball(2), {}};
        const SearchResult s = maximize(p, 4, 2000, 7);
        R.add("thm13.rho_invariance_search", 1e-9 - std::abs(s.best_value - k),
              "best " + fmt("%.15g", s.best_value));
    }
    {
        const double absa = 0.5;
        RatioProblem p{MetricTerm::k_ball(1e-8).composed_with(BallMobius::canonical(Point{absa, 0.0})),
                       MetricTerm::k_ball(1e-8), SearchSpace::ball(2), {1e-6}};
        const SearchResult s = maximize(p, 4, 3000, 7);
        R.add("thm13.k_ratio_search_guard", k * (1.0 + absa) + s.tolerance + 1e-8 - s.best_value,
              "best " + fmt("%.12g", s.best_value));
    }
}

void suite_lemma23(Runner& R) {
    const double k = R.kappa();
    {
        Rng rng = R.rng("lemma23.sandwich");
        const std::size_t count = 10 * R.samples();
        double margin = std::numeric_limits<double>::infinity();
        std::size_t violations = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t n = 2 + (i % 3);
            const auto [x, y] = random_ball_pair(rng, n);
            const double rho = rho_ball(x, y);
            const double j = j_ball(x, y);
            const CertifiedDistance kd = k_ball_refined(x, y);
            const double r = std::max(x.norm(), y.norm());
            const double slack = 1e-12 * (1.0 + rho);
            const double m = std::min({j - rho / (2.0 * k) + slack,
                                       kd.hi - j + slack,
                                       k * (1.0 + r) / 2.0 * rho + 1e-6 - kd.hi,
                                       kd.lo - rho / (2.0 * k) + slack});
            if (m < 0.0) ++violations;
            margin = std::min(margin, m);
        }
        R.add("lemma23.sandwich", margin,
              "pairs " + std::to_string(count) + ", violations " + std::to_string(violations));
    }
    {
        double worst = 0.0;
        bool strict = true;
        for (const double r : {0.1, 0.5, 0.9}) {
            const MonotoneScan s = monotone_scan({ScalarKind::Lemma22, r}, 0.0, 2.0 * r, 1000);
            strict = strict && s.strictly_decreasing;
            worst = std::max(worst, s.max_violation);
        }
        R.add("lemma22.monotone", strict ? 0.0 : -std::max(worst, 1e-300), "max increase " + fmt("%.3e", worst));
    }
    {
        double margin = std::numeric_limits<double>::infinity();
        for (const double r : {0.1, 0.5, 0.9}) {
            margin = std::min(margin, 1e-4 - std::abs(lemma22_f(r, 1e-6) - k * (1.0 + r)));
            margin = std::min(margin, 1e-4 - std::abs(lemma22_f(r, 2.0 * r - 1e-6) - k));
        }
        R.add("lemma22.endpoints", margin, "t=1e-6 and t=2r-1e-6");
    }
}

void suite_thm31(Runner& R) {
    const double k = R.kappa();
    auto bound = [k](double absz) { return k * (absz + std::sqrt(1.0 + absz * absz)) / 2.0; };
    {
        Rng rng = R.rng("thm31.bound_random");
        double margin = std::numeric_limits<double>::infinity();
        std::size_t violations = 0;
        for (std::size_t i = 0; i < R.samples(); ++i) {
            const std::size_t n = 2 + (i % 2);
            std::vector<double> zc(n);
            for (double& v : zc) v = uniform(rng, -2.0, 2.0);
            const Point z(zc);
            const Point x = z + random_direction(rng, n) * std::pow(10.0, uniform(rng, -3.0, 3.0));
            Point y = x;
            if (rng() & 1U) {
                y = z + random_direction(rng, n) * std::pow(10.0, uniform(rng, -3.0, 3.0));
            } else {
                y = x + random_direction(rng, n) * (distance(x, z) * std::pow(10.0, -uniform(rng, 1.0, 7.0)));
            }
            if (x == y || y == z) continue;
            const double ratio = chordal(x, y) / k_punctured(z, x, y);
            const double slack = bound(z.norm()) + 1e-9 - ratio;
            if (slack < 0.0) ++violations;
            margin = std::min(margin, slack);
        }
        R.add("thm31.bound_random", margin, "violations " + std::to_string(violations));
    }
    for (const double absz : {0.0, 0.75}) {
        const Point z{absz, 0.0};
        RatioProblem p{MetricTerm::chordal(), MetricTerm::k_punctured(z), SearchSpace::box(z, 3.0), {}};
        const SearchResult s = maximize(p, 16, 20000, 1);
        const double target = bound(absz);
        const std::string tag = absz == 0.0 ? "z0" : "z075";
        R.add("thm31.search_" + tag, 1e-3 - std::abs(s.best_value - target),
              "best " + fmt("%.12g", s.best_value));
        R.add("thm31.search_guard_" + tag, target + 1e-9 - s.best_value, "bound " + fmt("%.12g", target));
        if (absz > 0.0) {
            const Point w{-0.5, 0.0};
            const double d = std::max(distance(s.best_args[0], w), distance(s.best_args[1], w));
            R.add("thm31.search_args_z075", 0.05 - d, "distance to -0.5 z/|z| " + fmt("%.3e", d));
        }
    }
}

double lemma33_grid_oracle(double a) {
    const int N = 2000;
    const double span = 3.0;
    double best = -1.0, br = 0.0, bs = 0.0;
    for (int i = 0; i <= N; ++i) {
        const double r = span * i / N;
        for (int j = 0; j <= N; ++j) {
            const double s = span * j / N;
            const double v = lemma33_objective(a, r, s);
            if (v > best) {
                best = v;
                br = r;
                bs = s;
            }
        }
    }
    double h = span / N;
    for (int zoom = 0; zoom < 12; ++zoom) {
        const double cr = br, cs = bs;
        for (int i = -20; i <= 20; ++i) {
            for (int j = -20; j <= 20; ++j) {
                const double r = std::max(0.0, cr + h * i / 10.0);
                const double s = std::max(0.0, cs + h * j / 10.0);
                const double v = lemma33_objective(a, r, s);
                if (v > best) {
                    best = v;
                    br = r;
                    bs = s;
                }
            }
        }
        h /= 10.0;
    }
    return best;
}

void suite_lemma33(Runner& R) {
    const double k = R.kappa();
    double margin = std::numeric_limits<double>::infinity();
    for (const double a : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        margin = std::min(margin, 1e-6 - std::abs(lemma33_grid_oracle(a) - k * lemma33_max(a).maxval));
    }
    R.add("lemma33.grid_oracle", margin, "a in {0,0.5,1,2,5}");

    margin = std::numeric_limits<double>::infinity();
    for (const double a : {0.0, 1.0, 2.0}) {
        const BoxObjective f = [a](std::span<const double> p) -> std::optional<double> {
            return lemma33_objective(a, p[0], p[1]);
        };
        const std::vector<double> lo{0.0, 0.0}, hi{3.0, 3.0};
        const BoxSearchResult s = maximize_box(f, lo, hi, 4, 4000, 7);
        margin = std::min(margin, 1e-6 - std::abs(s.best_value - k * lemma33_max(a).maxval));
    }
    R.add("lemma33.maximizer_crosscheck", margin, "a in {0,1,2}");

    margin = std::numeric_limits<double>::infinity();
    for (double a = 0.0; a <= 10.0; a += 0.25) {
        margin = std::min(margin, k * lemma33_max(a).maxval - (1.0 + a * a));
    }
    R.add("lemma33.dominates_boundary", margin + 1e-12, "maxval >= 1+a^2");
}

void suite_prop14(Runner& R) {
    const double k = R.kappa();
    const Prop14Ratio p = prop14_ratio(1e-3, 0.1);
    R.add("prop14.ratio_t1e-3", 0.02 * 4.0 - std::abs(p.value - 4.0 * k), "ratio " + fmt("%.12g", p.value));

    const std::vector<double> ts{1e-2, 1e-3, 1e-4};
    std::vector<double> vals;
    for (const double t : ts) vals.push_back(prop14_ratio(t, 0.1).value);
    const double lim = richardson_limit(ts, vals);
    R.add("prop14.extrapolation", 1e-3 - std::abs(lim - 4.0 * k), "limit " + fmt("%.12g", lim));
    R.add("prop14.monotone_approach", vals[1] - vals[0], "t=1e-2 below t=1e-3");

    {
        Rng rng = R.rng("prop14.sup_bound");
        double margin = std::numeric_limits<double>::infinity();
        std::size_t used = 0;
        for (std::size_t i = 0; i < std::min<std::size_t>(R.samples(), 500); ++i) {
            const double t = std::pow(10.0, -uniform(rng, 0.3, 4.0));
            const double theta = uniform(rng, 1e-3, 1.2);
            try {
                const Prop14Ratio q = prop14_ratio(t, theta);
                margin = std::min(margin, 4.0 * k + 0.05 - q.hi);
                ++used;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Precondition) throw;
            }
        }
        R.add("prop14.sup_bound", margin, "admissible samples " + std::to_string(used));
    }
    {
        Rng rng = R.rng("lemma24.density_ratio");
        double margin = std::numeric_limits<double>::infinity();
        std::size_t violations = 0;
        for (std::size_t i = 0; i < R.samples(); ++i) {
            const Point z = random_ball_point(rng, 2);
            const double v = koebe_density_ratio(z);
            const double m = std::min(v - 0.25 / k, 4.0 * k - v) + 1e-12;
            if (m < 0.0) ++violations;
            margin = std::min(margin, m);
        }
        R.add("lemma24.density_ratio", margin, "violations " + std::to_string(violations));
    }
}

void suite_thm16(Runner& R) {
    const double k = R.kappa();
    {
        double margin = std::numeric_limits<double>::infinity();
        for (int i = 1; i < 100; ++i) {
            const double r = i / 100.0;
            margin = std::min(margin, 1e-12 - std::abs(phi_K2(k, r) - r));
        }
        R.add("phi.identity", margin, "K=1 grid");
    }
    {
        double margin = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 9; ++i) {
            const double r = i / 10.0;
            margin = std::min(margin, 1e-9 - std::abs(phi_K2(2.0 * k, r) - 2.0 * std::sqrt(r) / (1.0 + r)));
        }
        R.add("phi.k2_closed_form", margin, "r in {0.1..0.9}");
    }
    {
        const double m = mu(std::sqrt(0.5));
        R.add("mu.symmetry_point", 1e-12 - std::abs(m - k * std::numbers::pi / 2.0), "mu " + fmt("%.17g", m));
        double margin = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 9; ++i) {
            const ModulusPair p = ModulusPair::from_value(i / 10.0);
            const double prod = mu(p) * mu(ModulusPair{p.complement, p.r});
            margin = std::min(margin, 1e-12 - std::abs(prod - k * std::numbers::pi * std::numbers::pi / 4.0));
        }
        R.add("mu.functional_identity", margin, "mu(r) mu(r') = pi^2/4");
    }
    {
        double margin = 0.0;
        for (int n = 2; n <= 6; ++n) {
            const double b = seittenranta_b(DistortionParams::make(n, 1.0));
            if (b != k) margin = -std::abs(b - k) - 1e-300;
        }
        R.add("b.k_one", margin, "b(1,n) for n=2..6");
    }
    for (const double K : {1.2, 2.0}) {
        Rng rng = R.rng("rhodistortion.K" + fmt("%g", K));
        const RadialStretch f = RadialStretch::make(2, K);
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < R.samples(); ++i) {
            const auto [x, y] = random_ball_pair(rng, 2);
            const Point fx = radial_stretch(f, x);
            const Point fy = radial_stretch(f, y);
            if (!(fx.norm() < 1.0) || !(fy.norm() < 1.0)) continue;
            const double rho = rho_ball(x, y);
            if (!(rho > 0.0)) continue;
            const double lhs = std::tanh(rho_ball(fx, fy) / 2.0);
            const double rhs = phi_K2(K * k, ModulusPair::from_tanh(rho / 2.0)).r;
            margin = std::min(margin, rhs + 1e-9 - lhs);
        }
        R.add("rhodistortion.K" + fmt("%g", K), margin, "radial stretch, n=2");
    }
    {
        Rng rng = R.rng("cor26.rho_bound");
        const double K = 1.5;
        const RadialStretch f = RadialStretch::make(2, K);
        const DistortionParams dp = DistortionParams::make(2, K);
        const double b = k * seittenranta_b(dp);
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < R.samples(); ++i) {
            const auto [x, y] = random_ball_pair(rng, 2);
            const double rho = rho_ball(x, y);
            const Point fx = radial_stretch(f, x);
            const Point fy = radial_stretch(f, y);
            if (!(fx.norm() < 1.0) || !(fy.norm() < 1.0) || !std::isfinite(rho)) continue;
            const double bound = b * std::max(rho, std::pow(rho, dp.alpha));
            margin = std::min(margin, (bound - rho_ball(fx, fy)) / (1.0 + bound) + 1e-12);
        }
        R.add("cor26.rho_bound", margin, "K=1.5, b=" + fmt("%.12g", b));
    }
    {
        Rng rng = R.rng("thm16.j_inequality");
        const double K = 1.1, r = 0.3;
        const RadialStretch f = RadialStretch::make(2, K);
        const DistortionParams dp = DistortionParams::make(2, K);
        const double c = k * (1.0 + r) * seittenranta_b(dp);
        double margin = std::numeric_limits<double>::infinity();
        std::size_t used = 0;
        for (std::size_t i = 0; i < R.samples(); ++i) {
            const auto [x, y] = random_ball_pair(rng, 2, r);
            const Point fx = radial_stretch(f, x);
            const Point fy = radial_stretch(f, y);
            if (!(fx.norm() < r) || !(fy.norm() < r)) continue;
            const double j = j_ball(x, y);
            const double bound = c * std::max(j, std::pow(j, dp.alpha));
            margin = std::min(margin, (bound - j_ball(fx, fy)) / (1.0 + bound) + 1e-12);
            ++used;
        }
        R.add("thm16.j_inequality", margin,
              "c=" + fmt("%.12g", c) + ", admissible pairs " + std::to_string(used));
    }
    {
        const double b11 = seittenranta_b(DistortionParams::make(2, 1.1));
        const double b12 = seittenranta_b(DistortionParams::make(2, 1.2));
        R.add("b.monotone_in_K", b12 - b11, "b(1.2,2) - b(1.1,2)");
    }
}

void suite_conj17(Runner& R) {
    const double k = R.kappa();
    for (const double absa : {0.3, 0.6, 0.9}) {
        const std::string tag = fmt("%g", absa);
        const Conj17Report rep = conjecture17_explore(absa, 10 * R.samples(), 7);
        R.add("conj17.explore_a" + tag, k * rep.bound + 1e-6 - rep.search.best_value,
              "evidence: best " + fmt("%.12g", rep.search.best_value) + ", verdict " + rep.verdict);
        R.add("conj17.diameter_a" + tag,
              std::min(1e-3 - std::abs(rep.diameter_ratio - k * rep.bound),
                       1e-6 - std::abs(rep.diameter_limit - k * rep.bound)),
              "t=1e-3 ratio " + fmt("%.12g", rep.diameter_ratio) + ", limit " + fmt("%.12g", rep.diameter_limit));
    }
    {
        bool strict = true;
        double worst = 0.0;
        for (const double absa : {0.3, 0.5, 0.9}) {
            const MonotoneScan s = monotone_scan({ScalarKind::RemarkQuotient, absa}, 0.0, 1.0, 1000);
            strict = strict && s.strictly_decreasing;
            worst = std::max(worst, s.max_violation);
        }
        R.add("remark.monotone", strict ? 0.0 : -std::max(worst, 1e-300), "max increase " + fmt("%.3e", worst));
    }
    {
        double margin = std::numeric_limits<double>::infinity();
        for (const double absa : {0.3, 0.5, 0.9}) {
            margin = std::min(margin, 1e-4 - std::abs(remark_f(absa, 1e-6) - k * (1.0 + absa)));
            margin = std::min(margin, 1e-4 - std::abs(remark_f_hyperbolic(absa, 1e5) - k));
        }
        R.add("remark.endpoints", margin, "t->0 and t->1");
    }
}

void suite_conj28(Runner& R) {
    const Conj28Grid g = conj28_grid(31, 199, 4.0);
    const double margin = R.kappa() * (1.0 + 1e-12) - g.max_ratio;
    R.add("conj28.grid_n2", margin,
          "points " + std::to_string(g.points) + ", max lhs/rhs " + fmt("%.12g", g.max_ratio) +
              " at K=" + fmt("%.6g", g.worst_K) + " r=" + fmt("%.6g", g.worst_r));
}

const std::map<std::string, std::function<void(Runner&)>>& registry() {
    static const std::map<std::string, std::function<void(Runner&)>> m{
        {"thm13", suite_thm13},   {"lemma23", suite_lemma23}, {"thm31", suite_thm31},
        {"lemma33", suite_lemma33}, {"prop14", suite_prop14}, {"thm16", suite_thm16},
        {"conj17", suite_conj17}, {"conj28", suite_conj28},
    };
    return m;
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"all",    "thm13",  "lemma23", "thm31", "lemma33",
                                                "prop14", "thm16", "conj17",  "conj28"};
    return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.samples < 1) fail(ErrorKind::Precondition, "samples must be >= 1");
    Runner runner(options);
    if (options.suite == "all") {
        for (const auto& [name, fn] : registry()) fn(runner);
    } else {
        const auto it = registry().find(options.suite);
        if (it == registry().end()) fail(ErrorKind::Precondition, "unknown suite '" + options.suite + "'");
        it->second(runner);
    }
    VerifyReport report{runner.take()};
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::string out;
    char buf[96];
    for (const CheckResult& c : report.checks) {
        std::snprintf(buf, sizeof buf, "%s %-34s margin %+.6e  ", c.passed ? "PASS" : "FAIL",
                      c.name.c_str(), c.margin);
        out += buf;
        out += c.detail;
        out += '\n';
    }
    std::snprintf(buf, sizeof buf, "%zu/%zu checks passed\n", report.checks.size() - report.failures(),
                  report.checks.size());
    out += buf;
    return out;
}

}  // namespace qhkit
