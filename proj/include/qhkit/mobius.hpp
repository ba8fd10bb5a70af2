#pragma once

#include <cstddef>
#include <vector>

#include "qhkit/geometry.hpp"

namespace qhkit {

/// Inversion in the sphere S^{n-1}(a*, r), r² = |a|^{-2} - 1, for 0 < |a| < 1.
/// Sends a to 0 and a* to ∞.
ExtendedPoint sphere_inversion(const Point& a, const ExtendedPoint& x);

/// Reflection in the hyperplane through 0 orthogonal to a (identity for a = 0).
Point hyperplane_reflection(const Point& a, const Point& x);

/// T_a = p_a ∘ σ_a, the sense-preserving self-map of the closed unit ball with
/// T_a(a) = 0; T_0 is the identity. |x| may exceed 1 by at most 1e-9, in
/// which case x is pulled back onto the sphere.
Point canonical_map(const Point& a, const Point& x);

/// [x, a] = sqrt(1 - 2 x·a + |x|²|a|²) = |a| |x - a*|.
double mobius_bracket(const Point& a, const Point& x);

/// |T_a x - T_a y| from (1-|a|²)|x-y| / ([x,a][y,a]), which avoids
/// subtracting two nearly equal images.
double image_separation(const Point& a, const Point& x, const Point& y);

/// 1 - |T_a x|, from 1 - |T_a x|² = (1-|a|²)(1-|x|²)/[x,a]².
double image_boundary_gap(const Point& a, const Point& x);

/// A Möbius self-map of the unit ball written as g = κ ∘ T_a with κ orthogonal
/// and a = g^{-1}(0).
class BallMobius {
public:
    /// κ is row-major n×n; it must satisfy κᵀκ = I to 1e-12.
    static BallMobius make(Point a, std::vector<double> kappa);
    static BallMobius canonical(Point a);

    const Point& center() const noexcept { return a_; }
    const std::vector<double>& kappa() const noexcept { return kappa_; }
    std::size_t dim() const noexcept { return a_.dim(); }

    Point apply(const Point& x) const;

    /// (1+|a|)/(1-|a|).
    double bilipschitz_constant() const noexcept;

private:
    BallMobius(Point a, std::vector<double> kappa)
        : a_(std::move(a)), kappa_(std::move(kappa)) {}

    Point a_;
    std::vector<double> kappa_;
};

/// Row-major rotation by `theta` in the (i, j) coordinate plane of R^n.
std::vector<double> plane_rotation(std::size_t n, std::size_t i, std::size_t j, double theta);

}  // namespace qhkit
