#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qhkit/geometry.hpp"

namespace qhkit {

/// R^n \ {z}.
struct PuncturedSpace {
    Point z;
};

/// The open unit ball B^n.
struct UnitBall {
    std::size_t dim = 2;
};

/// Distance-ratio metric of B^n: log(1 + |x-y| / min(1-|x|, 1-|y|)).
double j_ball(const Point& x, const Point& y);

/// Distance-ratio metric of R^n \ {z}.
double j_punctured(const Point& z, const Point& x, const Point& y);

/// Hyperbolic metric of B^n: 2 arsh(|x-y| / sqrt((1-|x|²)(1-|y|²))).
double rho_ball(const Point& x, const Point& y);

/// Quasihyperbolic metric of R^n \ {z}: sqrt(θ² + log²(|x-z|/|y-z|)) with
/// θ = ∠(x, z, y).
double k_punctured(const Point& z, const Point& x, const Point& y);

/// Chordal metric of R^n ∪ {∞}; values lie in [0, 1].
double chordal(const ExtendedPoint& x, const ExtendedPoint& y);

/// |a,x,b,y| = q(a,b) q(x,y) / (q(a,x) q(b,y)).
double cross_ratio(const ExtendedPoint& a, const ExtendedPoint& x, const ExtendedPoint& b,
                   const ExtendedPoint& y);

/// Selects the exact shortcut δ_B = ρ_B for the unit ball.
struct AnalyticBall {};

/// A boundary for Seittenranta's metric: either the unit sphere (analytic) or
/// an explicit finite sample of ∂D supplied by the caller.
using Boundary = std::variant<AnalyticBall, std::vector<ExtendedPoint>>;

/// δ_D(x,y) = sup over a ≠ b in the boundary of log(1 + |a,x,b,y|).
double delta(const Boundary& boundary, const Point& x, const Point& y);

}  // namespace qhkit
