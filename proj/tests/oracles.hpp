#pragma once

#include "qhkit/geometry.hpp"

namespace qhtest::oracle {

using qhkit::Point;

/// k of the unit disk by Dijkstra on a Cartesian grid of spacing 1/resolution,
/// edges to lattice offsets up to `stencil` with coprime coordinates, each
/// weighted by Simpson's rule on the density 1/(1-|z|). Planar points only.
/// Overestimates by at most the stencil's direction error (about 0.5% at 5).
double k_disk_dijkstra(const Point& x, const Point& y, int resolution = 300, int stencil = 5);

/// k of the unit disk by shooting the geodesic equation of the conformal
/// density 1/(1-|z|) from x and bisecting on the initial direction. Planar
/// points only; the geodesic must stay away from the origin, where the
/// density has a cone point.
double k_disk_shooting(const Point& x, const Point& y, double step = 1e-4);

/// ρ of the unit disk as the length of the arc of the circle through x and y
/// orthogonal to the unit circle, integrated with composite Simpson.
double rho_disk_arc(const Point& x, const Point& y);

/// μ(r) from Boost's complete elliptic integral of the first kind.
double mu_ellint(double r);

/// max over [0,span]² of (r+s+a)²/((1+r²)(1+s²)) by a 2000×2000 grid followed
/// by alternating golden-section line searches.
double lemma33_brute(double a, double span = 4.0);

}  // namespace qhtest::oracle
