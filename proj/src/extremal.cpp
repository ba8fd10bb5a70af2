#include "qhkit/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <boost/random/sobol.hpp>

#include "qhkit/error.hpp"
#include "qhkit/metrics.hpp"
#include "qhkit/qh_ball.hpp"
#include "qhkit/special_functions.hpp"

namespace qhkit {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Point split_point(std::span<const double> params, std::size_t offset, std::size_t dim) {
    return Point(std::vector<double>(params.begin() + offset, params.begin() + offset + dim));
}

class Tracker {
public:
    Tracker(const BoxObjective& f, std::size_t budget) : f_(f), budget_(budget) {}

    bool exhausted() const { return used_ >= budget_; }
    std::size_t used() const { return used_; }
    std::size_t budget() const { return budget_; }

    double operator()(std::span<const double> p) {
        ++used_;
        const std::optional<double> v = f_(p);
        if (!v || !std::isfinite(*v)) return kNegInf;
        if (*v > best_) {
            best_ = *v;
            best_params_.assign(p.begin(), p.end());
            trace_.push_back({used_, best_, best_params_});
        }
        return *v;
    }

    double best() const { return best_; }
    const std::vector<double>& best_params() const { return best_params_; }
    std::vector<TraceEntry>& trace() { return trace_; }

private:
    const BoxObjective& f_;
    std::size_t budget_;
    std::size_t used_ = 0;
    double best_ = kNegInf;
    std::vector<double> best_params_;
    std::vector<TraceEntry> trace_;
};

struct Sample {
    double value;
    std::vector<double> params;
};

void clip(std::vector<double>& p, std::span<const double> lo, std::span<const double> hi) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::clamp(p[i], lo[i], hi[i]);
}

// One Nelder-Mead run on the maximization problem. Returns true when the
// simplex collapsed before the local budget ran out.
bool nelder_mead(Tracker& f, std::vector<double>& x0, double& f0, std::span<const double> lo,
                 std::span<const double> hi, double step_fraction, std::mt19937_64& rng,
                 std::size_t local_budget) {
    const std::size_t d = x0.size();
    const std::size_t stop_at = std::min(f.budget(), f.used() + local_budget);
    auto out_of_budget = [&] { return f.used() >= stop_at; };

    std::vector<std::vector<double>> simplex(d + 1, x0);
    std::vector<double> vals(d + 1, kNegInf);
    vals[0] = f0;
    for (std::size_t i = 0; i < d; ++i) {
        double step = step_fraction * (hi[i] - lo[i]);
        if (rng() & 1U) step = -step;
        if (x0[i] + step > hi[i] || x0[i] + step < lo[i]) step = -step;
        simplex[i + 1][i] += step;
        clip(simplex[i + 1], lo, hi);
        if (out_of_budget()) return false;
        vals[i + 1] = f(simplex[i + 1]);
    }

    std::vector<std::size_t> order(d + 1);
    std::vector<double> centroid(d), trial(d), trial2(d);
    auto point_at = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
        for (std::size_t k = 0; k < d; ++k) out[k] = centroid[k] + coef * (worst[k] - centroid[k]);
        clip(out, lo, hi);
    };

    bool converged = false;
    while (!out_of_budget()) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[d - 1];

        double diam = 0.0;
        for (std::size_t i = 0; i <= d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                diam = std::max(diam, std::abs(simplex[i][k] - simplex[best][k]) / (hi[k] - lo[k]));
            }
        }
        const double spread = vals[best] - vals[worst];
        if (diam <= 1e-13 || (std::isfinite(spread) && spread <= 1e-15 * (1.0 + std::abs(vals[best])))) {
            converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < d; ++k) centroid[k] += simplex[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(d);

        point_at(-1.0, simplex[worst], trial);
        const double fr = f(trial);
        if (fr > vals[best]) {
            if (out_of_budget()) {
                simplex[worst] = trial;
                vals[worst] = fr;
                break;
            }
            point_at(-2.0, simplex[worst], trial2);
            const double fe = f(trial2);
            if (fe > fr) {
                simplex[worst] = trial2;
                vals[worst] = fe;
            } else {
                simplex[worst] = trial;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr > vals[second]) {
            simplex[worst] = trial;
            vals[worst] = fr;
            continue;
        }
        if (out_of_budget()) break;
        const bool outside = fr > vals[worst];
        point_at(outside ? -0.5 : 0.5, simplex[worst], trial2);
        const double fc = f(trial2);
        if (fc > std::max(fr, vals[worst]) || (outside && fc >= fr)) {
            simplex[worst] = trial2;
            vals[worst] = fc;
            continue;
        }
        if (outside) {
            simplex[worst] = trial;
            vals[worst] = fr;
        }
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == best) continue;
            if (out_of_budget()) break;
            for (std::size_t k = 0; k < d; ++k) {
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            }
            vals[i] = f(simplex[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        if (vals[i] > vals[best]) best = i;
    }
    if (vals[best] > f0) {
        x0 = simplex[best];
        f0 = vals[best];
    }
    return converged;
}

}  // namespace

const char* to_string(MetricKind kind) noexcept {
    switch (kind) {
        case MetricKind::JBall: return "j";
        case MetricKind::RhoBall: return "rho";
        case MetricKind::KBall: return "k-ball";
        case MetricKind::JPunctured: return "j-punctured";
        case MetricKind::KPunctured: return "k-punctured";
        case MetricKind::Chordal: return "q";
    }
    return "unknown";
}

const char* to_string(SearchStatus status) noexcept {
    return status == SearchStatus::Converged ? "converged" : "budget-exhausted";
}

MetricValue evaluate(const MetricTerm& term, const Point& x, const Point& y) {
    auto need_puncture = [&]() -> const Point& {
        if (!term.puncture) fail(ErrorKind::Precondition, "punctured metric needs a puncture point");
        return *term.puncture;
    };

    if (term.kind == MetricKind::JBall && term.map) {
        const Point& a = term.map->center();
        require_same_dim(a, x);
        require_same_dim(a, y);
        if (!(x.norm() < 1.0) || !(y.norm() < 1.0)) fail(ErrorKind::Domain, "j needs points of the open ball");
        const double sep = image_separation(a, x, y);
        const double gap = std::min(image_boundary_gap(a, x), image_boundary_gap(a, y));
        if (!(gap > 0.0)) fail(ErrorKind::Domain, "image reached the boundary");
        return {std::log1p(sep / gap), 0.0};
    }

    const Point px = term.map ? term.map->apply(x) : x;
    const Point py = term.map ? term.map->apply(y) : y;
    switch (term.kind) {
        case MetricKind::JBall: return {j_ball(px, py), 0.0};
        case MetricKind::RhoBall: return {rho_ball(px, py), 0.0};
        case MetricKind::JPunctured: return {j_punctured(need_puncture(), px, py), 0.0};
        case MetricKind::KPunctured: return {k_punctured(need_puncture(), px, py), 0.0};
        case MetricKind::Chordal: return {chordal(px, py), 0.0};
        case MetricKind::KBall: {
            CertifiedDistance d;
            try {
                d = k_ball_refined(px, py, term.tol);
            } catch (const BudgetExceeded& e) {
                d = e.best();
            }
            return {d.mid(), 0.5 * d.width()};
        }
    }
    fail(ErrorKind::Precondition, "unknown metric");
}

SearchSpace SearchSpace::ball(std::size_t dim, double radius) {
    if (dim < 2) fail(ErrorKind::Domain, "dimension must be >= 2");
    if (!(radius > 0.0 && radius <= 1.0)) fail(ErrorKind::Domain, "ball radius must lie in (0,1]");
    SearchSpace s;
    s.kind = SpaceKind::Ball;
    s.dim = dim;
    s.radius = radius;
    return s;
}

SearchSpace SearchSpace::box(Point center, double half_width) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) fail(ErrorKind::Domain, "box half-width must be positive");
    SearchSpace s;
    s.kind = SpaceKind::Box;
    s.dim = center.dim();
    s.center = std::move(center);
    s.half_width = half_width;
    return s;
}

SearchSpace SearchSpace::diameter(Point direction) {
    const double len = direction.norm();
    if (!(len > 0.0)) fail(ErrorKind::Domain, "diameter direction must be nonzero");
    SearchSpace s;
    s.kind = SpaceKind::Diameter;
    s.dim = direction.dim();
    s.direction = direction / len;
    return s;
}

std::size_t SearchSpace::parameter_count() const {
    return kind == SpaceKind::Diameter ? 1 : 2 * dim;
}

std::vector<double> SearchSpace::lower() const {
    switch (kind) {
        case SpaceKind::Ball: return std::vector<double>(2 * dim, -radius);
        case SpaceKind::Box: {
            std::vector<double> lo(2 * dim);
            for (std::size_t i = 0; i < 2 * dim; ++i) lo[i] = (*center)[i % dim] - half_width;
            return lo;
        }
        case SpaceKind::Diameter: return {0.0};
    }
    return {};
}

std::vector<double> SearchSpace::upper() const {
    switch (kind) {
        case SpaceKind::Ball: return std::vector<double>(2 * dim, radius);
        case SpaceKind::Box: {
            std::vector<double> hi(2 * dim);
            for (std::size_t i = 0; i < 2 * dim; ++i) hi[i] = (*center)[i % dim] + half_width;
            return hi;
        }
        case SpaceKind::Diameter: return {1.0};
    }
    return {};
}

std::optional<std::pair<Point, Point>> SearchSpace::decode(std::span<const double> params) const {
    if (params.size() != parameter_count()) {
        fail(ErrorKind::DimensionMismatch, "parameter vector has the wrong length");
    }
    if (kind == SpaceKind::Diameter) {
        const double t = params[0];
        if (!(t > 0.0 && t < 1.0)) return std::nullopt;
        return std::pair{*direction * (-t), *direction * t};
    }
    Point x = split_point(params, 0, dim);
    Point y = split_point(params, dim, dim);
    if (kind == SpaceKind::Ball && (!(x.norm() < radius) || !(y.norm() < radius))) return std::nullopt;
    return std::pair{std::move(x), std::move(y)};
}

BoxSearchResult maximize_box(const BoxObjective& objective, std::span<const double> lower,
                             std::span<const double> upper, int seeds, std::size_t budget,
                             std::uint64_t rng_seed) {
    if (seeds < 1) fail(ErrorKind::Precondition, "seeds must be >= 1");
    if (budget < 1) fail(ErrorKind::Precondition, "budget must be >= 1");
    const std::size_t d = lower.size();
    if (d == 0 || upper.size() != d) fail(ErrorKind::DimensionMismatch, "box bounds mismatch");
    for (std::size_t i = 0; i < d; ++i) {
        if (!(upper[i] > lower[i])) fail(ErrorKind::EmptySpace, "box has an empty side");
    }

    Tracker f(objective, budget);
    std::mt19937_64 master(splitmix(rng_seed));
    std::vector<double> shift(d);
    for (double& s : shift) s = std::uniform_real_distribution<double>(0.0, 1.0)(master);

    // phase 1: shifted Sobol sweep
    boost::random::sobol qrng(static_cast<unsigned>(d));
    const double qmax = static_cast<double>(qrng.max() - qrng.min()) + 1.0;
    const std::size_t sweep = std::max<std::size_t>(1, std::max<std::size_t>(seeds, budget / 2));
    std::vector<Sample> samples;
    std::vector<double> p(d);
    for (std::size_t it = 0; it < sweep && !f.exhausted(); ++it) {
        for (std::size_t i = 0; i < d; ++i) {
            double u = static_cast<double>(qrng() - qrng.min()) / qmax + shift[i];
            u -= std::floor(u);
            p[i] = lower[i] + u * (upper[i] - lower[i]);
        }
        const double v = f(p);
        if (v > kNegInf) samples.push_back({v, p});
    }
    if (samples.empty()) fail(ErrorKind::EmptySpace, "no admissible sample in the search space");

    std::stable_sort(samples.begin(), samples.end(),
                     [](const Sample& a, const Sample& b) { return a.value > b.value; });
    const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(seeds), samples.size());
    std::vector<const Sample*> starts;
    auto far_enough = [&](const Sample& s) {
        for (const Sample* t : starts) {
            double dist = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                dist = std::max(dist, std::abs(s.params[i] - t->params[i]) / (upper[i] - lower[i]));
            }
            if (dist < 0.02) return false;
        }
        return true;
    };
    for (const Sample& s : samples) {
        if (starts.size() == want) break;
        if (far_enough(s)) starts.push_back(&s);
    }
    for (const Sample& s : samples) {
        if (starts.size() == want) break;
        if (std::find(starts.begin(), starts.end(), &s) == starts.end()) starts.push_back(&s);
    }

    // phase 2: Nelder-Mead from each start, restarted on collapse
    bool all_converged = !f.exhausted();
    for (std::size_t k = 0; k < starts.size(); ++k) {
        if (f.exhausted()) {
            all_converged = false;
            break;
        }
        std::mt19937_64 rng(splitmix(rng_seed ^ splitmix(k + 1)));
        const std::size_t remaining = f.budget() - f.used();
        const std::size_t share = remaining / (starts.size() - k);
        const std::size_t stop_at = f.used() + std::max<std::size_t>(share, 1);
        std::vector<double> x = starts[k]->params;
        double fx = starts[k]->value;
        double step = 0.05;
        bool converged = false;
        for (int restart = 0; restart < 8 && f.used() < stop_at; ++restart) {
            const double before = fx;
            converged = nelder_mead(f, x, fx, lower, upper, step, rng, stop_at - f.used());
            if (!converged) break;
            if (restart > 0 && fx <= before + 1e-14 * (1.0 + std::abs(before))) break;
            step = 1e-3;
        }
        if (!converged) all_converged = false;
    }

    BoxSearchResult out;
    out.best_value = f.best();
    out.best_params = f.best_params();
    out.trace = std::move(f.trace());
    out.status = all_converged ? SearchStatus::Converged : SearchStatus::BudgetExhausted;
    out.evaluations = f.used();
    return out;
}

SearchResult maximize(const RatioProblem& problem, int seeds, std::size_t budget,
                      std::uint64_t rng_seed) {
    const SearchSpace& space = problem.space;
    const double min_sep = problem.constraints.min_separation;
    auto ratio = [&](std::span<const double> params) -> std::optional<std::pair<double, double>> {
        const auto pair = space.decode(params);
        if (!pair) return std::nullopt;
        const auto& [x, y] = *pair;
        if (!(distance(x, y) >= min_sep)) return std::nullopt;
        try {
            const MetricValue num = evaluate(problem.numerator, x, y);
            const MetricValue den = evaluate(problem.denominator, x, y);
            if (!(den.value > 0.0) || !std::isfinite(num.value)) return std::nullopt;
            const double r = num.value / den.value;
            return std::pair{r, (num.uncertainty + std::abs(r) * den.uncertainty) / den.value};
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    const BoxObjective objective = [&](std::span<const double> params) -> std::optional<double> {
        const auto r = ratio(params);
        if (!r) return std::nullopt;
        return r->first;
    };

    const std::vector<double> lo = space.lower();
    const std::vector<double> hi = space.upper();
    BoxSearchResult box = maximize_box(objective, lo, hi, seeds, budget, rng_seed);

    SearchResult out;
    out.best_value = box.best_value;
    const auto pair = space.decode(box.best_params);
    out.best_args = {pair->first, pair->second};
    out.tolerance = ratio(box.best_params)->second;
    out.trace = std::move(box.trace);
    out.status = box.status;
    out.evaluations = box.evaluations;
    return out;
}

double richardson_limit(std::span<const double> ts, std::span<const double> values) {
    if (ts.empty() || ts.size() != values.size()) {
        fail(ErrorKind::Precondition, "richardson_limit needs matching nonempty sequences");
    }
    // Neville's scheme evaluated at t = 0.
    std::vector<double> p(values.begin(), values.end());
    const std::size_t n = ts.size();
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i) {
            const double ti = ts[i];
            const double tj = ts[i + m];
            if (ti == tj) fail(ErrorKind::Precondition, "richardson_limit needs distinct t values");
            p[i] = (tj * p[i] - ti * p[i + 1]) / (tj - ti);
        }
    }
    return p[0];
}

std::vector<SharpnessRow> thm13_sharpness(double absa, std::span<const double> ts) {
    if (!(absa > 0.0 && absa < 1.0)) fail(ErrorKind::Domain, "|a| must lie in (0,1)");
    const Point a{absa, 0.0};
    const Point minus_a{-absa, 0.0};
    std::vector<SharpnessRow> rows;
    rows.reserve(ts.size());
    for (const double t : ts) {
        if (!(t > 0.0)) fail(ErrorKind::Domain, "t must be positive");
        if (!((1.0 + t) * absa < 1.0)) fail(ErrorKind::Domain, "(1+t)|a| must stay below 1");
        const Point y{(1.0 + t) * absa, 0.0};
        // T_a(a) = 0 exactly; the computed image can carry a stray sign
        const Point origin = Point::zero(2);
        const double forward = k_ball_radial(origin, canonical_map(a, y)) / k_ball_radial(a, y);

        const Point X = origin;
        const Point Y = canonical_map(minus_a, Point{-(1.0 + t) * absa, 0.0});
        const double inverse =
            k_ball_radial(canonical_map(a, X), canonical_map(a, Y)) / k_ball_radial(X, Y);
        rows.push_back({t, forward, inverse});
    }
    return rows;
}

Conj17Report conjecture17_explore(double absa, std::size_t budget, std::uint64_t rng_seed,
                                  int seeds) {
    if (!(absa > 0.0 && absa < 1.0)) fail(ErrorKind::Domain, "|a| must lie in (0,1)");
    const Point a{absa, 0.0};
    const MetricTerm image = MetricTerm::j_ball().composed_with(BallMobius::canonical(a));

    RatioProblem problem{image, MetricTerm::j_ball(), SearchSpace::ball(2), {}};
    Conj17Report report;
    report.absa = absa;
    report.search = maximize(problem, seeds, budget, rng_seed);
    report.bound = 1.0 + absa;

    const SearchSpace diam = SearchSpace::diameter(a);
    auto family = [&](double t) {
        const std::vector<double> params{t};
        const auto [x, y] = *diam.decode(params);
        return evaluate(image, x, y).value / j_ball(x, y);
    };
    report.diameter_ratio = family(1e-3);
    const std::vector<double> ts{1e-2, 1e-3, 1e-4};
    const std::vector<double> vals{family(ts[0]), family(ts[1]), family(ts[2])};
    report.diameter_limit = richardson_limit(ts, vals);

    report.exceeded = report.search.best_value > report.bound + 1e-6;
    report.verdict = report.exceeded ? "exceeded" : "consistent";
    return report;
}

double ScalarFunction::operator()(double t) const {
    switch (kind) {
        case ScalarKind::Lemma22: return lemma22_f(param, t);
        case ScalarKind::RemarkQuotient: return remark_quotient(param, t);
        case ScalarKind::RemarkF: return remark_f(param, t);
        case ScalarKind::Constant: return param;
    }
    fail(ErrorKind::Precondition, "unknown scalar function");
}

MonotoneScan monotone_scan(const ScalarFunction& f, double lo, double hi, std::size_t gridpoints) {
    if (gridpoints < 3) fail(ErrorKind::Precondition, "gridpoints must be >= 3");
    if (!(hi > lo)) fail(ErrorKind::Precondition, "empty interval");
    MonotoneScan scan{true, 0.0};
    const double h = (hi - lo) / static_cast<double>(gridpoints + 1);
    double prev = f(lo + h);
    for (std::size_t i = 1; i < gridpoints; ++i) {
        const double cur = f(lo + h * static_cast<double>(i + 1));
        if (!(cur < prev)) scan.strictly_decreasing = false;
        scan.max_violation = std::max(scan.max_violation, cur - prev);
        prev = cur;
    }
    return scan;
}

Conj28Grid conj28_grid(std::size_t k_steps, std::size_t r_steps, double k_max) {
    if (k_steps < 2 || r_steps < 1) fail(ErrorKind::Precondition, "grid too small");
    if (!(k_max > 1.0)) fail(ErrorKind::Precondition, "k_max must exceed 1");
    Conj28Grid g;
    for (std::size_t i = 0; i < k_steps; ++i) {
        const double K = 1.0 + (k_max - 1.0) * static_cast<double>(i) / static_cast<double>(k_steps - 1);
        for (std::size_t j = 0; j < r_steps; ++j) {
            const double r = static_cast<double>(j + 1) / static_cast<double>(r_steps + 1);
            const Conj28Terms t = conj28_terms(K, r);
            const double ratio = t.lhs / t.rhs;
            ++g.points;
            if (t.lhs > t.rhs * (1.0 + 1e-12)) ++g.violations;
            if (ratio > g.max_ratio) {
                g.max_ratio = ratio;
                g.worst_K = K;
                g.worst_r = r;
            }
        }
    }
    return g;
}

}  // namespace qhkit
