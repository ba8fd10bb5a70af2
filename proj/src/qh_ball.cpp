#include "qhkit/qh_ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qhkit/metrics.hpp"
#include "qhkit/mobius.hpp"

namespace qhkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.14159265358979323846;
constexpr int kBisectionBudget = 200;

void require_in_ball(const Point& p) {
    if (!(p.norm() < 1.0)) {
        fail(ErrorKind::Domain, "k_B needs points of the open unit ball, got " + p.to_string());
    }
}

// Quasihyperbolic radial coordinate u = -log(1 - r) and circumferential
// factor v = e^u - 1 = r / (1 - r).
struct Radial {
    double u;
    double v;
};

Radial radial(double r) { return {-std::log1p(-r), r / (1.0 - r)}; }

// Integrals from the turning radius (v = c) out to v along a Clairaut
// geodesic with constant c, written through φ = arcosh(v/c):
//   swept angle  gd(φ) - c·J(φ),   length  φ - J(φ),
//   J(φ) = ∫_0^φ dψ / (1 + c cosh ψ).
struct ClairautLeg {
    double angle;
    double length;
    double phi;
};

ClairautLeg clairaut_leg(double v, double c) {
    const double w1 = (v - c) / c;  // v/c - 1
    const double root = std::sqrt(w1 * (w1 + 2.0));
    const double phi = std::log1p(w1 + root);
    const double exp_phi = 1.0 + w1 + root;
    const double tau = std::sqrt((v - c) / (v + c));  // tanh(φ/2)
    const double one_minus_tau = 2.0 / (exp_phi + 1.0);

    double j = 0.0;
    if (c < 1.0) {
        const double s = std::sqrt((1.0 - c) / (1.0 + c));
        const double ts = tau * s;
        if (ts < 1e-4) {
            const double t2 = ts * ts;
            j = 2.0 * tau * (1.0 + t2 / 3.0 + t2 * t2 / 5.0) / (1.0 + c);
        } else {
            const double one_minus_s = (2.0 * c / (1.0 + c)) / (1.0 + s);
            const double one_minus_ts = one_minus_tau + tau * one_minus_s;
            j = std::log((1.0 + ts) / one_minus_ts) / ((1.0 + c) * s);
        }
    } else if (c > 1.0) {
        const double s = std::sqrt((c - 1.0) / (c + 1.0));
        const double ts = tau * s;
        if (ts < 1e-4) {
            const double t2 = ts * ts;
            j = 2.0 * tau * (1.0 - t2 / 3.0 + t2 * t2 / 5.0) / (1.0 + c);
        } else {
            j = 2.0 * std::atan(ts) / ((1.0 + c) * s);
        }
    } else {
        j = tau;
    }
    return {2.0 * std::atan(tau) - c * j, phi - j, phi};
}

struct Sweep {
    double angle;
    double length;
    double phi_max;
};

// Geodesic leaving the inner point (r1 <= r2) with Clairaut constant c. On the
// monotone branch u grows all the way out; on the turning branch u first
// drops to the turning radius where e^u - 1 = c.
Sweep sweep(const Radial& p1, const Radial& p2, double c, bool turning) {
    if (c <= 0.0) {
        return turning ? Sweep{kPi, p1.u + p2.u, 0.0} : Sweep{0.0, p2.u - p1.u, 0.0};
    }
    const ClairautLeg outer = clairaut_leg(p2.v, c);
    const ClairautLeg inner = clairaut_leg(p1.v, c);
    if (turning) {
        return {inner.angle + outer.angle, inner.length + outer.length,
                std::max(inner.phi, outer.phi)};
    }
    return {outer.angle - inner.angle, outer.length - inner.length, outer.phi};
}

struct Bracket {
    double lo;
    double hi;
};

// Converts the geodesic with constant c into bounds on k between the fixed
// endpoints. The geodesic lands on the circle u = u2 at the swept angle;
// the target is within v2·|Δθ| of that landing point along the circle.
Bracket bound_from(const Radial& p2, const Sweep& s, double target_angle) {
    const double angle_err = std::abs(s.angle - target_angle) + 16.0 * kEps * (1.0 + s.phi_max);
    const double length_err = 16.0 * kEps * (1.0 + s.phi_max + s.length);
    const double slack = length_err + p2.v * angle_err;
    return {s.length - slack, s.length + slack};
}

Bracket solve_geodesic(double r1, double r2, double target_angle) {
    if (r1 > r2) std::swap(r1, r2);
    const Radial p1 = radial(r1);
    const Radial p2 = radial(r2);

    if (r1 == 0.0 || target_angle <= 0.0) {
        const double len = p2.u - p1.u;
        const double slack = 8.0 * kEps * (p1.u + p2.u);
        return {len - slack, len + slack};
    }
    if (target_angle >= kPi) {
        const double len = p1.u + p2.u;
        const double slack = 8.0 * kEps * len;
        return {len - slack, len + slack};
    }

    const bool turning = target_angle > sweep(p1, p2, p1.v, false).angle;
    double lo = 0.0;
    double hi = p1.v;
    for (int it = 0; it < kBisectionBudget; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double a = sweep(p1, p2, mid, turning).angle;
        const bool grow = turning ? (a > target_angle) : (a < target_angle);
        (grow ? lo : hi) = mid;
    }
    const Bracket b_lo = bound_from(p2, sweep(p1, p2, lo, turning), target_angle);
    const Bracket b_hi = bound_from(p2, sweep(p1, p2, hi, turning), target_angle);
    return {std::max(b_lo.lo, b_hi.lo), std::min(b_lo.hi, b_hi.hi)};
}

}  // namespace

const char* to_string(DistanceMethod method) noexcept {
    switch (method) {
        case DistanceMethod::ClosedFormRadial: return "closed-form-radial";
        case DistanceMethod::Sandwich: return "sandwich";
        case DistanceMethod::GeodesicRefined: return "geodesic-refined";
    }
    return "unknown";
}

double k_ball_radial(const Point& x, const Point& y) {
    require_in_ball(x);
    require_in_ball(y);
    require_same_dim(x, y);
    if (!x.is_zero() && !y.is_zero() && angle(x, Point::zero(x.dim()), y) > 1e-12) {
        fail(ErrorKind::NotRadial, "points are not on a common ray from the origin");
    }
    double a = x.norm();
    double b = y.norm();
    if (a > b) std::swap(a, b);
    return std::log1p((b - a) / (1.0 - b));
}

CertifiedDistance k_ball_bounds(const Point& x, const Point& y) {
    require_in_ball(x);
    require_in_ball(y);
    require_same_dim(x, y);
    if (x == y) return {0.0, 0.0, DistanceMethod::Sandwich};

    const double rho = rho_ball(x, y);
    const double r = std::max(x.norm(), y.norm());
    const double lo = std::max(j_ball(x, y), 0.5 * rho);
    const double cap = 0.5 * (1.0 + r) * rho;

    // Hyperbolic geodesic parametrized by hyperbolic arclength s ∈ [0, ρ]:
    // γ(s) = T_{-x}(tanh(s/2) ŵ), w = T_x(y). Since |dz| = (1-|z|²)/2 ds, the
    // quasihyperbolic density integrates to ∫ (1 + |γ(s)|)/2 ds.
    const Point w = canonical_map(x, y);
    const Point dir = w / w.norm();
    const Point minus_x = -x;
    // (1 + |z|)/2 = 1 - gap/2, with the gap 1 - |z| free of cancellation near the
    // rim. Integrated over s = ρτ, τ ∈ [0,1]: Boost's error estimate is unreliable
    // on very short intervals.
    auto integrand = [&](double tau) {
        return 1.0 - 0.5 * image_boundary_gap(minus_x, std::tanh(0.5 * rho * tau) * dir);
    };
    double err = 0.0;
    const double q = rho * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                               integrand, 0.0, 1.0, 8, 1e-13, &err);
    err *= rho;
    const double hi = std::min(q + err + 8.0 * kEps * rho, cap);
    return {std::min(lo, hi), hi, DistanceMethod::Sandwich};
}

CertifiedDistance k_ball_refined(const Point& x, const Point& y, double tol) {
    if (!(tol > 0.0)) fail(ErrorKind::Precondition, "tolerance must be positive");
    require_in_ball(x);
    require_in_ball(y);
    require_same_dim(x, y);
    if (x == y) return {0.0, 0.0, DistanceMethod::GeodesicRefined};

    const double rho = rho_ball(x, y);
    const double r = std::max(x.norm(), y.norm());
    const double floor = std::max(j_ball(x, y), 0.5 * rho);
    const double cap = 0.5 * (1.0 + r) * rho;

    const double theta =
        (x.is_zero() || y.is_zero()) ? 0.0 : angle(x, Point::zero(x.dim()), y);
    const Bracket g = solve_geodesic(x.norm(), y.norm(), theta);

    CertifiedDistance out{std::max(g.lo, floor), std::min(g.hi, cap),
                          DistanceMethod::GeodesicRefined};
    if (out.lo > out.hi) {
        // u = -log(1-r) carries an absolute error of about eps/(1-r)
        const double slack = 1e-12 * (1.0 + out.hi) + 16.0 * kEps / (1.0 - r);
        if (out.lo - out.hi > slack) {
            fail(ErrorKind::NonConvergence, "geodesic bounds disagree with the analytic sandwich");
        }
        // Within rounding of the analytic bounds; collapse onto the geodesic value.
        const double mid = std::clamp(0.5 * (g.lo + g.hi), floor, cap);
        out.lo = out.hi = mid;
    }
    if (out.width() > tol) {
        throw BudgetExceeded("interval width " + std::to_string(out.width()) +
                                 " exceeds tolerance " + std::to_string(tol),
                             out);
    }
    return out;
}

}  // namespace qhkit
