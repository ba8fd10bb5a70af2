#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qhkit/metrics.hpp"
#include "support.hpp"

using namespace qhkit;
using qhtest::cat;
using qhtest::Gen;

namespace {
const Point O{0.0, 0.0};
const Point E1{1.0, 0.0};
const Point E2{0.0, 1.0};
}  // namespace

TEST(JBall, Examples) {
    EXPECT_NEAR(j_ball(O, Point{0.5, 0.0}), std::log(2.0), 1e-15);
    EXPECT_EQ(j_ball(Point{0.3, 0.2}, Point{0.3, 0.2}), 0.0);
    EXPECT_NEAR(j_ball(Point{-0.5, 0.0}, Point{0.5, 0.0}), std::log(3.0), 1e-15);
    EXPECT_ERROR_KIND(j_ball(E1, O), ErrorKind::Domain);
}

TEST(JPunctured, Examples) {
    EXPECT_NEAR(j_punctured(O, E1, 2.0 * E1), std::log(2.0), 1e-15);
    EXPECT_EQ(j_punctured(O, E1, E1), 0.0);
    EXPECT_NEAR(j_punctured(O, E1, E2), 0.881373587019543, 1e-14);
    EXPECT_ERROR_KIND(j_punctured(O, O, E1), ErrorKind::Domain);
}

TEST(RhoBall, Examples) {
    EXPECT_NEAR(rho_ball(O, Point{0.5, 0.0}), std::log(3.0), 1e-15);
    EXPECT_EQ(rho_ball(Point{0.1, 0.1}, Point{0.1, 0.1}), 0.0);
    EXPECT_NEAR(rho_ball(Point{0.5, 0.0}, Point{0.0, 0.5}), 1.680699772428004, 1e-14);
    EXPECT_ERROR_KIND(rho_ball(O, Point{1.0, 0.0}), ErrorKind::Domain);
}

TEST(RhoBall, MatchesArcLengthOracle) {
    Gen g(31);
    for (int i = 0; i < 40; ++i) {
        const Point x = g.ball_point(2, 0.95), y = g.ball_point(2, 0.95);
        const double oracle = qhtest::oracle::rho_disk_arc(x, y);
        EXPECT_NEAR(rho_ball(x, y), oracle, 1e-9 * (1 + oracle)) << x.to_string() << " " << y.to_string();
    }
}

TEST(KPunctured, Examples) {
    EXPECT_NEAR(k_punctured(O, E1, 2.0 * E1), std::log(2.0), 1e-15);
    EXPECT_NEAR(k_punctured(O, E1, E2), std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(k_punctured(O, E1, 2.0 * E2), 1.716931598576525, 1e-14);
    EXPECT_ERROR_KIND(k_punctured(O, O, E1), ErrorKind::Domain);
    EXPECT_EQ(k_punctured(O, E1, E1), 0.0);
}

TEST(KPunctured, NearDiagonalFormAgreesWithLiteralFormula) {
    qhtest::for_all(10000, 32, [](Gen& g) -> std::optional<std::string> {
        const std::size_t n = g.dim();
        const Point z = g.point(n, 2.0);
        const Point x = z + g.direction(n) * g.log_uniform(1e-2, 1e2);
        const Point y = x + g.direction(n) * (distance(x, z) * g.uniform(0.01, 0.49));
        const double stable = k_punctured(z, x, y);
        const double literal = std::hypot(angle(x, z, y), std::log(distance(x, z) / distance(y, z)));
        if (std::abs(stable - literal) > 1e-12 * literal) return cat("stable ", stable, " vs literal ", literal);
        return std::nullopt;
    });
}

TEST(KPunctured, NearDiagonalMatchesDensity) {
    // ratio k/|x-y| tends to 1/|x-z| along a fixed direction
    const Point z{0.75, 0.0};
    const Point x{-0.5, 0.0};
    for (const double s : {1e-6, 1e-8, 1e-9}) {
        const Point y = x + Point{0.6, 0.8} * s;
        EXPECT_NEAR(k_punctured(z, x, y) / s, 1.0 / 1.25, 1e-6);
    }
}

TEST(Chordal, Examples) {
    EXPECT_DOUBLE_EQ(chordal(O, ExtendedPoint::infinity(2)), 1.0);
    EXPECT_DOUBLE_EQ(chordal(E1, -E1), 1.0);
    EXPECT_EQ(chordal(E2, E2), 0.0);
    EXPECT_EQ(chordal(ExtendedPoint::infinity(2), ExtendedPoint::infinity(2)), 0.0);
    EXPECT_ERROR_KIND(chordal(E1, Point{1.0, 0.0, 0.0}), ErrorKind::DimensionMismatch);
}

TEST(CrossRatio, Examples) {
    const ExtendedPoint inf = ExtendedPoint::infinity(2);
    EXPECT_NEAR(cross_ratio(O, E1, inf, 2.0 * E1), 1.0, 1e-15);
    EXPECT_NEAR(cross_ratio(inf, E1, O, 2.0 * E1), 0.5, 1e-15);
    EXPECT_EQ(cross_ratio(E2, E1, E2, 2.0 * E1), 0.0);
    EXPECT_ERROR_KIND(cross_ratio(E1, E1, O, E2), ErrorKind::DivisionDegenerate);
}

TEST(Delta, Examples) {
    const Point h{0.5, 0.0};
    EXPECT_DOUBLE_EQ(delta(AnalyticBall{}, O, h), rho_ball(O, h));
    const std::vector<ExtendedPoint> two{O, ExtendedPoint::infinity(2)};
    EXPECT_NEAR(delta(two, E1, 2.0 * E1), std::log(2.0), 1e-15);
    EXPECT_EQ(delta(two, E1, E1), 0.0);
    EXPECT_ERROR_KIND(delta(std::vector<ExtendedPoint>{O}, E1, E2), ErrorKind::InsufficientBoundary);
}

TEST(Delta, DenseCircleSampleApproachesRho) {
    std::vector<ExtendedPoint> circle;
    for (int i = 0; i < 720; ++i) {
        const double t = 2 * std::numbers::pi * i / 720;
        circle.push_back(Point{std::cos(t), std::sin(t)});
    }
    const Point x{0.2, -0.1}, y{-0.3, 0.4};
    const double sampled = delta(circle, x, y);
    EXPECT_LE(sampled, rho_ball(x, y) + 1e-12);
    EXPECT_NEAR(sampled, rho_ball(x, y), 1e-4);
}

TEST(Metrics, JBelowKOnPuncturedSpace) {
    qhtest::for_all(100000, 33, [](Gen& g) -> std::optional<std::string> {
        const std::size_t n = g.dim();
        const Point z = g.point(n, 2.0);
        const Point x = z + g.direction(n) * g.log_uniform(1e-3, 1e3);
        const Point y = z + g.direction(n) * g.log_uniform(1e-3, 1e3);
        const double j = j_punctured(z, x, y), k = k_punctured(z, x, y);
        if (j > k * (1 + 1e-12) + 1e-300) return cat("j ", j, " > k ", k);
        return std::nullopt;
    });
}

TEST(Metrics, BallSandwich) {
    qhtest::for_all(100000, 34, [](Gen& g) -> std::optional<std::string> {
        const std::size_t n = g.dim();
        const auto [x, y] = g.ball_pair(n);
        const double rho = rho_ball(x, y), j = j_ball(x, y);
        const double r = std::max(x.norm(), y.norm());
        // 1-|x| carries relative error eps/(1-|x|)
        const double rel = 1e-12 + 1e-15 / (1 - r);
        if (j < rho / 2 * (1 - rel)) return cat("j below rho/2 at ", x.to_string(), y.to_string());
        if (j > (1 + r) / 2 * rho * (1 + rel)) return cat("j ", j, " above (1+r)rho/2 = ", (1 + r) / 2 * rho, " at ", x.to_string(), " ", y.to_string());
        return std::nullopt;
    });
}

TEST(Metrics, KPuncturedInversionInvariance) {
    qhtest::for_all(10000, 35, [](Gen& g) -> std::optional<std::string> {
        const std::size_t n = g.dim();
        const Point x = g.direction(n) * g.log_uniform(1e-3, 1e3);
        const Point y = g.direction(n) * g.log_uniform(1e-3, 1e3);
        const double k0 = k_punctured(Point::zero(n), x, y);
        const double k1 = k_punctured(Point::zero(n), star(x).finite(), star(y).finite());
        if (std::abs(k0 - k1) > 1e-12 * (1 + k0)) return cat("k changed by ", k1 - k0);
        const double j0 = j_punctured(Point::zero(n), x, y);
        const double j1 = j_punctured(Point::zero(n), star(x).finite(), star(y).finite());
        if (j1 > 2 * j0 * (1 + 1e-12)) return cat("j more than doubled: ", j1 / j0);
        return std::nullopt;
    });
}

TEST(Metrics, ChordalOverKBound) {
    qhtest::for_all(100000, 36, [](Gen& g) -> std::optional<std::string> {
        const std::size_t n = g.dim();
        const Point z = g.point(n, 3.0);
        const Point x = z + g.direction(n) * g.log_uniform(1e-4, 1e4);
        const Point y = g.coin() ? z + g.direction(n) * g.log_uniform(1e-4, 1e4)
                                 : x + g.direction(n) * (distance(x, z) * g.log_uniform(1e-9, 1e-1));
        const double bound = (z.norm() + std::sqrt(1 + z.norm_squared())) / 2;
        const double ratio = chordal(x, y) / k_punctured(z, x, y);
        if (ratio > bound + 1e-9) return cat("q/k = ", ratio, " > ", bound);
        return std::nullopt;
    });
}

TEST(Metrics, Axioms) {
    qhtest::for_all(10000, 37, [](Gen& g) -> std::optional<std::string> {
        const std::size_t n = g.dim();
        const Point x = g.ball_point(n, 0.99), y = g.ball_point(n, 0.99), w = g.ball_point(n, 0.99);
        const Point z = g.point(n, 0.2) + Point::axis(n, 0, 1.5);
        struct M {
            const char* name;
            std::function<double(const Point&, const Point&)> d;
        };
        const M ms[] = {{"j", j_ball},
                        {"rho", rho_ball},
                        {"k-punctured", [&](const Point& a, const Point& b) { return k_punctured(z, a, b); }},
                        {"q", [](const Point& a, const Point& b) { return chordal(a, b); }}};
        for (const M& m : ms) {
            const double dxy = m.d(x, y), dyx = m.d(y, x);
            if (std::abs(dxy - dyx) > 1e-10 * (1 + dxy)) return cat(m.name, " not symmetric");
            if (m.d(x, x) != 0.0) return cat(m.name, " d(x,x) != 0");
            if (!(dxy > 0.0)) return cat(m.name, " d(x,y) not positive");
            if (dxy > m.d(x, w) + m.d(w, y) + 1e-10) return cat(m.name, " triangle inequality fails");
        }
        return std::nullopt;
    });
}
