#pragma once

#include <string>

#include "qhkit/error.hpp"
#include "qhkit/geometry.hpp"

namespace qhkit {

enum class DistanceMethod {
    ClosedFormRadial,
    Sandwich,
    GeodesicRefined,
};

const char* to_string(DistanceMethod method) noexcept;

/// An interval [lo, hi] that contains the true value of k_B(x, y).
struct CertifiedDistance {
    double lo = 0.0;
    double hi = 0.0;
    DistanceMethod method = DistanceMethod::Sandwich;

    double mid() const noexcept { return 0.5 * (lo + hi); }
    double width() const noexcept { return hi - lo; }
    bool contains(double v, double slack = 0.0) const noexcept {
        return lo - slack <= v && v <= hi + slack;
    }
};

/// Thrown by k_ball_refined when the requested width cannot be reached; the
/// best interval found is attached.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, CertifiedDistance best)
        : Error(ErrorKind::BudgetExceeded, what), best_(best) {}

    const CertifiedDistance& best() const noexcept { return best_; }

private:
    CertifiedDistance best_;
};

inline constexpr double kDefaultQhTolerance = 1e-4;

/// k_B(x, y) for x, y on a common ray from the origin: |log((1-|x|)/(1-|y|))|.
double k_ball_radial(const Point& x, const Point& y);

/// Lower bound max(j, ρ/2); upper bound the quasihyperbolic length of the
/// hyperbolic geodesic from x to y, capped by (1+r)ρ/2 where r = max(|x|,|y|).
CertifiedDistance k_ball_bounds(const Point& x, const Point& y);

/// An interval of width <= tol around k_B(x, y).
///
/// The problem is reduced to the 2-plane through 0, x and y. In the
/// coordinates u = -log(1-|z|), θ the density |dz|/(1-|z|) becomes the
/// surface-of-revolution metric du² + (e^u - 1)² dθ², which has negative
/// curvature, so geodesics between two points are unique and minimizing.
/// Clairaut's relation turns the geodesic into a one-parameter family with
/// closed-form swept angle and length; bisection on the Clairaut constant hits
/// the target angle, and the residual angle bounds the error.
CertifiedDistance k_ball_refined(const Point& x, const Point& y,
                                 double tol = kDefaultQhTolerance);

}  // namespace qhkit
