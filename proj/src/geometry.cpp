#include "qhkit/geometry.hpp"

#include <cmath>
#include <sstream>

#include "qhkit/error.hpp"

namespace qhkit {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::DegenerateVertex: return "degenerate-vertex";
        case ErrorKind::InvalidCenter: return "invalid-center";
        case ErrorKind::NotRadial: return "not-radial";
        case ErrorKind::DivisionDegenerate: return "division-degenerate";
        case ErrorKind::InsufficientBoundary: return "insufficient-boundary";
        case ErrorKind::BudgetExceeded: return "budget-exceeded";
        case ErrorKind::NonConvergence: return "non-convergence";
        case ErrorKind::MissingEta: return "missing-eta";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::EmptySpace: return "empty-space";
    }
    return "unknown";
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        fail(ErrorKind::Domain, "points need dimension >= 2, got " +
                                    std::to_string(coords_.size()));
    }
    for (double c : coords_) {
        if (!std::isfinite(c)) fail(ErrorKind::Domain, "non-finite coordinate");
    }
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

Point Point::zero(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

Point Point::axis(std::size_t dim, std::size_t axis, double scale) {
    std::vector<double> c(dim, 0.0);
    if (axis >= dim) fail(ErrorKind::Domain, "axis index out of range");
    c[axis] = scale;
    return Point(std::move(c));
}

double Point::norm_squared() const noexcept {
    double s = 0.0;
    for (double c : coords_) s += c * c;
    return s;
}

double Point::norm() const noexcept {
    return std::sqrt(norm_squared());
}

bool Point::is_zero() const noexcept {
    for (double c : coords_) {
        if (c != 0.0) return false;
    }
    return true;
}

Point Point::operator-() const {
    Point r = *this;
    for (double& c : r.coords_) c = -c;
    return r;
}

Point& Point::operator+=(const Point& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Point& Point::operator-=(const Point& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Point& Point::operator*=(double s) {
    for (double& c : coords_) c *= s;
    for (double c : coords_) {
        if (!std::isfinite(c)) fail(ErrorKind::Domain, "scaling produced a non-finite coordinate");
    }
    return *this;
}

std::string Point::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

void require_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::DimensionMismatch,
             "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
}

double dot(const Point& a, const Point& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double distance(const Point& a, const Point& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

ExtendedPoint::ExtendedPoint(Point p) : point_(std::move(p)), dim_(point_->dim()) {}

ExtendedPoint ExtendedPoint::infinity(std::size_t dim) {
    if (dim < 2) fail(ErrorKind::Domain, "points need dimension >= 2");
    return ExtendedPoint(dim);
}

const Point& ExtendedPoint::finite() const {
    if (!point_) fail(ErrorKind::Domain, "expected a finite point, got infinity");
    return *point_;
}

std::string ExtendedPoint::to_string() const {
    return point_ ? point_->to_string() : std::string("inf");
}

ExtendedPoint star(const ExtendedPoint& p) {
    if (p.is_infinity()) return Point::zero(p.dim());
    const Point& x = p.finite();
    if (x.is_zero()) return ExtendedPoint::infinity(x.dim());
    return x / x.norm_squared();
}

double angle(const Point& x, const Point& vertex, const Point& y) {
    require_same_dim(x, vertex);
    require_same_dim(y, vertex);
    Point u = x - vertex;
    Point v = y - vertex;
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) {
        fail(ErrorKind::DegenerateVertex, "angle vertex coincides with an endpoint");
    }
    u *= 1.0 / nu;
    v *= 1.0 / nv;
    // 2·atan2(|u−v|, |u+v|) equals arccos(clamp(u·v)) but keeps full relative
    // accuracy near 0 and π.
    const double diff = distance(u, v);
    const double sum = (u + v).norm();
    return 2.0 * std::atan2(diff, sum);
}

}  // namespace qhkit
