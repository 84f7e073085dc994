#pragma once

#include <optional>
#include <utility>

namespace realsurf {

// Point of the upper half-plane model; y > 0.
struct H2Point {
    double x = 0.0;
    double y = 1.0;
};

// Euclidean unit direction attached to a point (tangent vector).
struct H2Dir {
    double dx = 0.0;
    double dy = 0.0;
};

// Geodesic of the model: a vertical line at abscissa c, or a half-circle with
// center c and radius r > 0 on the real axis.
struct H2Geodesic {
    enum class Kind { VerticalLine, HalfCircle };

    Kind kind = Kind::VerticalLine;
    double c = 0.0;
    double r = 0.0;

    static H2Geodesic vertical(double c) { return {Kind::VerticalLine, c, 0.0}; }
    static H2Geodesic circle(double c, double r);
    static H2Geodesic through(H2Point p, H2Point q);
    // Ideal endpoints on the boundary; vertical lines report {c, +inf}.
    static H2Geodesic from_endpoints(double e1, double e2);
    std::pair<double, double> endpoints() const;

    bool contains(H2Point p, double tol = 1e-9) const;
};

// Hyperbolic distance, evaluated as 2*asinh(|p-q| / (2*sqrt(py*qy))), which is
// exact for cosh d = 1 + (|p-q|^2) / (2*py*qy) and keeps precision for nearby
// points.
double distance(H2Point p, H2Point q);

// Distance from a point to a complete geodesic (closed form via sinh).
double distance_to_geodesic(const H2Geodesic& g, H2Point p);

struct FootResult {
    H2Point foot;
    double dist = 0.0;
};

// Foot of the unique perpendicular from p to g, and the distance.
FootResult perpendicular_foot(const H2Geodesic& g, H2Point p);

// Geodesic through p perpendicular to g; p must lie on g.
H2Geodesic perpendicular_at(const H2Geodesic& g, H2Point p);

// Unit-speed parameter along a geodesic: ln(y) on vertical lines,
// ln(tan(theta/2)) on half-circles. Strictly increasing along the geodesic.
double geodesic_param(const H2Geodesic& g, H2Point p);

// Point at arc length d from p along g; direction +1 moves toward increasing
// parameter. p must lie on g.
H2Point point_along(const H2Geodesic& g, H2Point p, double d, int direction);

// Unit Euclidean tangent of g at p in the direction of increasing parameter
// (times `direction`).
H2Dir tangent_at(const H2Geodesic& g, H2Point p, int direction);

// Tangent of g at `from`, oriented toward `toward` (both on g).
H2Dir direction_toward(const H2Geodesic& g, H2Point from, H2Point toward);

// Unsigned angle between two directions in [0, pi]. Angles in this conformal
// model equal Euclidean angles.
double angle_between(H2Dir u, H2Dir v);

// Intersection point of two geodesics in the open half-plane, if any.
std::optional<H2Point> intersect(const H2Geodesic& a, const H2Geodesic& b);

struct CommonPerp {
    H2Geodesic geodesic;
    H2Point foot_a;  // on the first geodesic
    H2Point foot_b;  // on the second
    double dist = 0.0;
};

// Unique common perpendicular of two disjoint non-asymptotic geodesics;
// nullopt when they intersect or share an ideal endpoint.
std::optional<CommonPerp> common_perpendicular(const H2Geodesic& a, const H2Geodesic& b);

// Orientation-preserving isometry z -> (az+b)/(cz+d), ad - bc > 0.
struct Mobius {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    H2Point apply(H2Point p) const;
    H2Geodesic apply(const H2Geodesic& g) const;
    double apply_boundary(double x) const;  // extended real line, inf-aware
    Mobius compose(const Mobius& rhs) const;  // this after rhs
    Mobius inverse() const;

    static Mobius identity() { return {}; }
    static Mobius translation(double t) { return {1.0, t, 0.0, 1.0}; }
    static Mobius scaling(double s) { return {s, 0.0, 0.0, 1.0}; }
    // Maps g to the imaginary axis (endpoints to 0 and infinity).
    static Mobius to_imaginary_axis(const H2Geodesic& g);
};

}  // namespace realsurf
