#include "qhkit/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "qhkit/error.hpp"

namespace qhkit {
namespace {

void require_in_ball(const Point& p, const char* what) {
    if (!(p.norm() < 1.0)) {
        fail(ErrorKind::Domain, std::string(what) + " must lie in the open unit ball, got " +
                                    p.to_string());
    }
}

}  // namespace

double j_ball(const Point& x, const Point& y) {
    require_in_ball(x, "x");
    require_in_ball(y, "y");
    const double d = std::min(1.0 - x.norm(), 1.0 - y.norm());
    return std::log1p(distance(x, y) / d);
}

double j_punctured(const Point& z, const Point& x, const Point& y) {
    const double dx = distance(x, z);
    const double dy = distance(y, z);
    if (dx == 0.0 || dy == 0.0) fail(ErrorKind::Domain, "x and y must differ from the puncture z");
    return std::log1p(distance(x, y) / std::min(dx, dy));
}

double rho_ball(const Point& x, const Point& y) {
    require_in_ball(x, "x");
    require_in_ball(y, "y");
    const double nx = x.norm();
    const double ny = y.norm();
    const double scale = std::sqrt((1.0 - nx) * (1.0 + nx) * (1.0 - ny) * (1.0 + ny));
    return 2.0 * std::asinh(distance(x, y) / scale);
}

double k_punctured(const Point& z, const Point& x, const Point& y) {
    const Point p = x - z;
    const Point d = y - x;
    const double dx = p.norm();
    const double dy = distance(y, z);
    if (dx == 0.0 || dy == 0.0) fail(ErrorKind::Domain, "x and y must differ from the puncture z");
    const double sep = d.norm();
    if (sep == 0.0) return 0.0;
    if (sep >= 0.5 * dx) return std::hypot(angle(x, z, y), std::log(dx / dy));

    // near-diagonal: work with d = y - x instead of the two long vectors
    const double pd = dot(p, d);
    const double log_ratio = -std::log1p((2.0 * pd + sep * sep) / ((dx + dy) * dx));
    const double wedge = dx * sep * std::sin(angle(p, Point::zero(p.dim()), d));
    const double theta = std::atan2(wedge, dx * dx + pd);
    return std::hypot(theta, log_ratio);
}

double chordal(const ExtendedPoint& x, const ExtendedPoint& y) {
    if (x.dim() != y.dim()) fail(ErrorKind::DimensionMismatch, "chordal of mixed dimensions");
    if (x.is_infinity() && y.is_infinity()) return 0.0;
    if (x.is_infinity()) return 1.0 / std::sqrt(1.0 + y.finite().norm_squared());
    if (y.is_infinity()) return 1.0 / std::sqrt(1.0 + x.finite().norm_squared());
    const Point& p = x.finite();
    const Point& q = y.finite();
    return distance(p, q) / std::sqrt((1.0 + p.norm_squared()) * (1.0 + q.norm_squared()));
}

double cross_ratio(const ExtendedPoint& a, const ExtendedPoint& x, const ExtendedPoint& b,
                   const ExtendedPoint& y) {
    const double qax = chordal(a, x);
    const double qby = chordal(b, y);
    if (qax == 0.0 || qby == 0.0) {
        fail(ErrorKind::DivisionDegenerate, "cross ratio needs a != x and b != y");
    }
    return chordal(a, b) * chordal(x, y) / (qax * qby);
}

double delta(const Boundary& boundary, const Point& x, const Point& y) {
    if (std::holds_alternative<AnalyticBall>(boundary)) return rho_ball(x, y);

    const auto& pts = std::get<std::vector<ExtendedPoint>>(boundary);
    if (pts.size() < 2) fail(ErrorKind::InsufficientBoundary, "delta needs >= 2 boundary points");
    const ExtendedPoint ex(x);
    const ExtendedPoint ey(y);
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (i == k) continue;
            best = std::max(best, std::log1p(cross_ratio(pts[i], ex, pts[k], ey)));
        }
    }
    return best;
}

}  // namespace qhkit
