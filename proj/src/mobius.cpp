#include "qhkit/mobius.hpp"

#include <cmath>

#include "qhkit/error.hpp"

namespace qhkit {
namespace {

constexpr double kBoundarySlack = 1e-9;

Point clamp_to_closed_ball(const Point& x) {
    const double r = x.norm();
    if (r <= 1.0) return x;
    if (r <= 1.0 + kBoundarySlack) return x / r;
    fail(ErrorKind::Domain, "point " + x.to_string() + " lies outside the closed unit ball");
}

}  // namespace

ExtendedPoint sphere_inversion(const Point& a, const ExtendedPoint& x) {
    const double na2 = a.norm_squared();
    if (na2 == 0.0 || na2 >= 1.0) {
        fail(ErrorKind::InvalidCenter, "sphere inversion needs 0 < |a| < 1");
    }
    if (x.is_infinity()) return a / na2;
    const Point& p = x.finite();
    require_same_dim(a, p);

    const double xa = dot(p, a);
    const double nx2 = p.norm_squared();
    const double denom = 1.0 - 2.0 * xa + nx2 * na2;  // |a|²|x - a*|²
    const Point astar = a / na2;
    if (denom <= 0.0 || distance(p, astar) <= 1e-14 * astar.norm()) {
        return ExtendedPoint::infinity(a.dim());
    }
    // a* + r²(x - a*)* multiplied out over the common denominator.
    const Point unit = a / std::sqrt(na2);
    Point num = (1.0 - na2) * p + (1.0 + nx2) * a - (2.0 * dot(p, unit)) * unit;
    return num / denom;
}

Point hyperplane_reflection(const Point& a, const Point& x) {
    require_same_dim(a, x);
    const double na2 = a.norm_squared();
    if (na2 == 0.0) return x;
    return x - (2.0 * dot(x, a) / na2) * a;
}

Point canonical_map(const Point& a, const Point& x) {
    require_same_dim(a, x);
    const double na = a.norm();
    if (na >= 1.0) fail(ErrorKind::InvalidCenter, "T_a needs |a| < 1");
    const Point p = clamp_to_closed_ball(x);
    if (na == 0.0) return p;
    const ExtendedPoint s = sphere_inversion(a, p);
    // σ_a only sends a* to ∞, and a* lies outside the closed ball.
    return hyperplane_reflection(a, s.finite());
}

double mobius_bracket(const Point& a, const Point& x) {
    require_same_dim(a, x);
    const double v = 1.0 - 2.0 * dot(x, a) + x.norm_squared() * a.norm_squared();
    return std::sqrt(std::max(v, 0.0));
}

double image_separation(const Point& a, const Point& x, const Point& y) {
    const double na2 = a.norm_squared();
    return (1.0 - na2) * distance(x, y) / (mobius_bracket(a, x) * mobius_bracket(a, y));
}

double image_boundary_gap(const Point& a, const Point& x) {
    const double na2 = a.norm_squared();
    const double nx = x.norm();
    const double br = mobius_bracket(a, x);
    const double gap2 = (1.0 - na2) * (1.0 - nx) * (1.0 + nx) / (br * br);
    const double image_norm = canonical_map(a, x).norm();
    return gap2 / (1.0 + image_norm);
}

BallMobius BallMobius::make(Point a, std::vector<double> kappa) {
    const std::size_t n = a.dim();
    if (a.norm() >= 1.0) fail(ErrorKind::InvalidCenter, "BallMobius needs |a| < 1");
    if (kappa.size() != n * n) {
        fail(ErrorKind::DimensionMismatch, "kappa must be an n×n matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += kappa[k * n + i] * kappa[k * n + j];
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - expected) > 1e-12) {
                fail(ErrorKind::Domain, "kappa is not orthogonal");
            }
        }
    }
    return BallMobius(std::move(a), std::move(kappa));
}

BallMobius BallMobius::canonical(Point a) {
    const std::size_t n = a.dim();
    std::vector<double> id(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1.0;
    return make(std::move(a), std::move(id));
}

Point BallMobius::apply(const Point& x) const {
    const Point t = canonical_map(a_, x);
    const std::size_t n = dim();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += kappa_[i * n + k] * t[k];
        out[i] = s;
    }
    return Point(std::move(out));
}

double BallMobius::bilipschitz_constant() const noexcept {
    const double na = a_.norm();
    return (1.0 + na) / (1.0 - na);
}

std::vector<double> plane_rotation(std::size_t n, std::size_t i, std::size_t j, double theta) {
    if (i >= n || j >= n || i == j) fail(ErrorKind::Domain, "invalid rotation plane");
    std::vector<double> m(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) m[k * n + k] = 1.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    m[i * n + i] = c;
    m[i * n + j] = -s;
    m[j * n + i] = s;
    m[j * n + j] = c;
    return m;
}

}  // namespace qhkit
