#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhkit/geometry.hpp"
#include "qhkit/mobius.hpp"

namespace qhkit {

// ---------------------------------------------------------------------------
// Metric evaluators

enum class MetricKind { JBall, RhoBall, KBall, JPunctured, KPunctured, Chordal };

const char* to_string(MetricKind kind) noexcept;

/// A metric, optionally precomposed with a Möbius self-map of the ball
/// applied to both arguments.
struct MetricTerm {
    MetricKind kind = MetricKind::JBall;
    std::optional<Point> puncture;
    std::optional<BallMobius> map;
    double tol = 1e-8;  // solver tolerance for KBall

    static MetricTerm j_ball() { return {MetricKind::JBall, {}, {}}; }
    static MetricTerm rho_ball() { return {MetricKind::RhoBall, {}, {}}; }
    static MetricTerm k_ball(double tol = 1e-8) { return {MetricKind::KBall, {}, {}, tol}; }
    static MetricTerm j_punctured(Point z) { return {MetricKind::JPunctured, std::move(z), {}}; }
    static MetricTerm k_punctured(Point z) { return {MetricKind::KPunctured, std::move(z), {}}; }
    static MetricTerm chordal() { return {MetricKind::Chordal, {}, {}}; }

    MetricTerm composed_with(BallMobius g) const {
        MetricTerm t = *this;
        t.map = std::move(g);
        return t;
    }
};

struct MetricValue {
    double value;
    double uncertainty;  // half-width of the enclosing interval, 0 for closed forms
};

/// Throws qhkit::Error when (x, y) is outside the metric's domain.
MetricValue evaluate(const MetricTerm& term, const Point& x, const Point& y);

// ---------------------------------------------------------------------------
// Search spaces and problems

enum class SpaceKind { Ball, Box, Diameter };

/// Where the pair (x, y) is sampled: the ball B^n(radius), an axis-aligned box
/// (for punctured spaces), or the one-parameter family (-t e, t e), t ∈ (0,1)
/// along a unit direction e.
struct SearchSpace {
    SpaceKind kind = SpaceKind::Ball;
    std::size_t dim = 2;
    double radius = 1.0;
    std::optional<Point> center;
    double half_width = 1.0;
    std::optional<Point> direction;

    static SearchSpace ball(std::size_t dim, double radius = 1.0);
    static SearchSpace box(Point center, double half_width);
    static SearchSpace diameter(Point direction);

    std::size_t parameter_count() const;
    std::vector<double> lower() const;
    std::vector<double> upper() const;
    /// nullopt if the parameters fall outside the space.
    std::optional<std::pair<Point, Point>> decode(std::span<const double> params) const;
};

struct Constraints {
    double min_separation = 1e-9;  // near-diagonal pairs are rejected
};

/// Maximize numerator(x,y) / denominator(x,y) over the space.
struct RatioProblem {
    MetricTerm numerator;
    MetricTerm denominator;
    SearchSpace space;
    Constraints constraints;
};

struct TraceEntry {
    std::size_t iteration;  // objective evaluations so far
    double best_value;
    std::vector<double> params;
};

enum class SearchStatus { Converged, BudgetExhausted };

const char* to_string(SearchStatus status) noexcept;

struct SearchResult {
    double best_value = 0.0;
    std::vector<Point> best_args;
    std::vector<TraceEntry> trace;
    SearchStatus status = SearchStatus::BudgetExhausted;
    double tolerance = 0.0;  // evaluator uncertainty at best_args
    std::size_t evaluations = 0;
};

/// Objective over a box; nullopt marks a rejected sample.
using BoxObjective = std::function<std::optional<double>(std::span<const double>)>;

struct BoxSearchResult {
    double best_value = 0.0;
    std::vector<double> best_params;
    std::vector<TraceEntry> trace;
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::size_t evaluations = 0;
};

/// Multi-start maximizer: half of `budget` goes to a randomly shifted Sobol
/// sweep of the box, the rest to Nelder-Mead refinements started from the
/// `seeds` best distinct samples, each with its own RNG stream. Deterministic
/// for a fixed rng_seed.
BoxSearchResult maximize_box(const BoxObjective& objective, std::span<const double> lower,
                             std::span<const double> upper, int seeds, std::size_t budget,
                             std::uint64_t rng_seed);

SearchResult maximize(const RatioProblem& problem, int seeds, std::size_t budget,
                      std::uint64_t rng_seed);

// ---------------------------------------------------------------------------
// Limit sequences

/// Value at t = 0 of the polynomial through (ts[i], values[i]) (Richardson
/// extrapolation for errors expanding in integer powers of t).
double richardson_limit(std::span<const double> ts, std::span<const double> values);

struct SharpnessRow {
    double t;
    double ratio_forward;  // k(T_a x, T_a y)/k(x, y) with x = a, y = (1+t)a; -> 1/(1+|a|)
    double ratio_inverse;  // the same ratio for the pair T_{-a}(-a), T_{-a}(-(1+t)a); -> 1+|a|
};

/// Radial ratios along the extremal sequence for T_a with a = |a| e1 in the plane.
std::vector<SharpnessRow> thm13_sharpness(double absa, std::span<const double> ts);

struct Conj17Report {
    double absa;
    SearchResult search;
    double bound;             // 1 + |a|
    double diameter_ratio;    // j-ratio along the diameter family at t = 1e-3
    double diameter_limit;    // Richardson limit of the diameter family as t -> 0
    bool exceeded;            // best_value > 1 + |a| + 1e-6
    std::string verdict;      // "consistent" or "exceeded"
};

/// Searches sup j(T_a x, T_a y)/j(x, y) over B² for a = |a| e1. The output is
/// evidence only; nothing is asserted about the supremum.
Conj17Report conjecture17_explore(double absa, std::size_t budget, std::uint64_t rng_seed,
                                  int seeds = 16);

// ---------------------------------------------------------------------------
// Monotonicity scans

enum class ScalarKind { Lemma22, RemarkQuotient, RemarkF, Constant };

struct ScalarFunction {
    ScalarKind kind;
    double param = 0.0;  // r for Lemma22, |a| for the remark functions, value for Constant

    double operator()(double t) const;
};

struct MonotoneScan {
    bool strictly_decreasing;
    double max_violation;  // largest f(t_{i+1}) - f(t_i), clamped at 0
};

/// Evaluates f at `gridpoints` interior points of (lo, hi).
MonotoneScan monotone_scan(const ScalarFunction& f, double lo, double hi, std::size_t gridpoints);

// ---------------------------------------------------------------------------
// φ-distortion grid in the plane

struct Conj28Grid {
    std::size_t points = 0;
    std::size_t violations = 0;  // lhs > rhs (1 + 1e-12)
    double max_ratio = 0.0;      // max lhs/rhs
    double worst_K = 0.0;
    double worst_r = 0.0;
};

Conj28Grid conj28_grid(std::size_t k_steps, std::size_t r_steps, double k_max = 4.0);

}  // namespace qhkit
