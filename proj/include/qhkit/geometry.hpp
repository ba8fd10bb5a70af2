#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qhkit {

/// A point of R^n, n >= 2, with finite coordinates. The dimension is a
/// runtime property; arithmetic between points of different dimension throws.
class Point {
public:
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    static Point zero(std::size_t dim);
    /// The standard basis vector e_{axis+1} scaled by `scale`.
    static Point axis(std::size_t dim, std::size_t axis, double scale = 1.0);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }

    double norm() const noexcept;
    double norm_squared() const noexcept;
    bool is_zero() const noexcept;

    Point operator-() const;
    Point& operator+=(const Point& other);
    Point& operator-=(const Point& other);
    Point& operator*=(double s);

    friend Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
    friend Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
    friend Point operator*(Point p, double s) { return p *= s; }
    friend Point operator*(double s, Point p) { return p *= s; }
    friend Point operator/(Point p, double s) { return p *= (1.0 / s); }

    bool operator==(const Point& other) const = default;

    std::string to_string() const;

private:
    std::vector<double> coords_;
};

void require_same_dim(const Point& a, const Point& b);
double dot(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

/// A point of the extended space R^n ∪ {∞}. The point at infinity still
/// records n so that ∞* = 0 lands in the right space.
class ExtendedPoint {
public:
    ExtendedPoint(Point p);  // NOLINT: implicit, a finite point is an extended point
    static ExtendedPoint infinity(std::size_t dim);

    bool is_infinity() const noexcept { return !point_.has_value(); }
    std::size_t dim() const noexcept { return dim_; }
    /// Throws Domain if this is ∞.
    const Point& finite() const;

    bool operator==(const ExtendedPoint& other) const = default;

    std::string to_string() const;

private:
    explicit ExtendedPoint(std::size_t dim) : dim_(dim) {}
    std::optional<Point> point_;
    std::size_t dim_;
};

/// x ↦ x* = x/|x|², with 0* = ∞ and ∞* = 0.
ExtendedPoint star(const ExtendedPoint& p);

/// The angle ∠(x, vertex, y) in [0, π].
double angle(const Point& x, const Point& vertex, const Point& y);

}  // namespace qhkit
