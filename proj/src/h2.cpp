#include "realsurf/h2.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace realsurf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

H2Geodesic H2Geodesic::circle(double c, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("geodesic half-circle needs r > 0");
    return {Kind::HalfCircle, c, r};
}

H2Geodesic H2Geodesic::through(H2Point p, H2Point q) {
    if (p.x == q.x) return vertical(p.x);
    const double m = (p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y) / (2.0 * (p.x - q.x));
    return circle(m, std::hypot(p.x - m, p.y));
}

H2Geodesic H2Geodesic::from_endpoints(double e1, double e2) {
    if (std::isinf(e1)) return vertical(e2);
    if (std::isinf(e2)) return vertical(e1);
    if (e1 == e2) throw std::invalid_argument("coincident ideal endpoints");
    return circle(0.5 * (e1 + e2), 0.5 * std::abs(e1 - e2));
}

std::pair<double, double> H2Geodesic::endpoints() const {
    if (kind == Kind::VerticalLine) return {c, kInf};
    return {c - r, c + r};
}

bool H2Geodesic::contains(H2Point p, double tol) const {
    if (kind == Kind::VerticalLine) return std::abs(p.x - c) <= tol;
    return std::abs(std::hypot(p.x - c, p.y) - r) <= tol * std::max(1.0, r);
}

double distance(H2Point p, H2Point q) {
    const double chord = std::hypot(p.x - q.x, p.y - q.y);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y * q.y)));
}

double distance_to_geodesic(const H2Geodesic& g, H2Point p) {
    if (g.kind == H2Geodesic::Kind::VerticalLine) return std::asinh(std::abs(p.x - g.c) / p.y);
    const double u = p.x - g.c;
    return std::asinh(std::abs(u * u + p.y * p.y - g.r * g.r) / (2.0 * g.r * p.y));
}

FootResult perpendicular_foot(const H2Geodesic& g, H2Point p) {
    if (g.kind == H2Geodesic::Kind::VerticalLine) {
        const double radius = std::hypot(p.x - g.c, p.y);
        return {{g.c, radius}, distance_to_geodesic(g, p)};
    }
    // Normalize to the unit circle; the foot has cos(theta) = 2u/(u^2+v^2+1).
    const double u = (p.x - g.c) / g.r;
    const double v = p.y / g.r;
    const double ct = 2.0 * u / (u * u + v * v + 1.0);
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    return {{g.c + g.r * ct, g.r * st}, distance_to_geodesic(g, p)};
}

H2Geodesic perpendicular_at(const H2Geodesic& g, H2Point p) {
    if (g.kind == H2Geodesic::Kind::VerticalLine) return H2Geodesic::circle(g.c, p.y);
    if (p.x == g.c) return H2Geodesic::vertical(p.x);
    const double m = (p.x * p.x + p.y * p.y + g.r * g.r - g.c * g.c) / (2.0 * (p.x - g.c));
    return H2Geodesic::circle(m, std::hypot(p.x - m, p.y));
}

double geodesic_param(const H2Geodesic& g, H2Point p) {
    if (g.kind == H2Geodesic::Kind::VerticalLine) return std::log(p.y);
    const double theta = std::atan2(p.y, p.x - g.c);
    return std::log(std::tan(0.5 * theta));
}

H2Point point_along(const H2Geodesic& g, H2Point p, double d, int direction) {
    const double tau = geodesic_param(g, p) + (direction >= 0 ? d : -d);
    if (g.kind == H2Geodesic::Kind::VerticalLine) return {g.c, std::exp(tau)};
    const double theta = 2.0 * std::atan(std::exp(tau));
    return {g.c + g.r * std::cos(theta), g.r * std::sin(theta)};
}

H2Dir tangent_at(const H2Geodesic& g, H2Point p, int direction) {
    const double s = direction >= 0 ? 1.0 : -1.0;
    if (g.kind == H2Geodesic::Kind::VerticalLine) return {0.0, s};
    const double theta = std::atan2(p.y, p.x - g.c);
    return {-s * std::sin(theta), s * std::cos(theta)};
}

H2Dir direction_toward(const H2Geodesic& g, H2Point from, H2Point toward) {
    const int dir = geodesic_param(g, toward) >= geodesic_param(g, from) ? 1 : -1;
    return tangent_at(g, from, dir);
}

double angle_between(H2Dir u, H2Dir v) {
    const double dot = u.dx * v.dx + u.dy * v.dy;
    const double cross = u.dx * v.dy - u.dy * v.dx;
    return std::atan2(std::abs(cross), dot);
}

std::optional<H2Point> intersect(const H2Geodesic& a, const H2Geodesic& b) {
    using Kind = H2Geodesic::Kind;
    if (a.kind == Kind::VerticalLine && b.kind == Kind::VerticalLine) return std::nullopt;
    if (a.kind == Kind::VerticalLine || b.kind == Kind::VerticalLine) {
        const H2Geodesic& line = a.kind == Kind::VerticalLine ? a : b;
        const H2Geodesic& circ = a.kind == Kind::VerticalLine ? b : a;
        const double dy2 = circ.r * circ.r - (line.c - circ.c) * (line.c - circ.c);
        if (dy2 <= 0.0) return std::nullopt;
        return H2Point{line.c, std::sqrt(dy2)};
    }
    if (a.c == b.c) return std::nullopt;  // concentric
    const double x =
        (a.r * a.r - b.r * b.r + b.c * b.c - a.c * a.c) / (2.0 * (b.c - a.c));
    const double y2 = a.r * a.r - (x - a.c) * (x - a.c);
    if (y2 <= 0.0) return std::nullopt;
    return H2Point{x, std::sqrt(y2)};
}

std::optional<CommonPerp> common_perpendicular(const H2Geodesic& a, const H2Geodesic& b) {
    const Mobius to_axis = Mobius::to_imaginary_axis(a);
    const H2Geodesic h = to_axis.apply(b);
    if (h.kind == H2Geodesic::Kind::VerticalLine) return std::nullopt;  // shares an endpoint
    if (std::abs(h.c) <= h.r) return std::nullopt;                      // intersecting or tangent
    const double rho = std::sqrt(h.c * h.c - h.r * h.r);
    const H2Point foot_axis{0.0, rho};
    const double xf = rho * rho / h.c;
    const H2Point foot_h{xf, rho * h.r / std::abs(h.c)};
    const Mobius back = to_axis.inverse();
    CommonPerp cp;
    cp.foot_a = back.apply(foot_axis);
    cp.foot_b = back.apply(foot_h);
    cp.geodesic = back.apply(H2Geodesic::circle(0.0, rho));
    cp.dist = distance(cp.foot_a, cp.foot_b);
    return cp;
}

H2Point Mobius::apply(H2Point p) const {
    // (az+b)(conj(cz+d)) / |cz+d|^2 with z = x+iy.
    const double rx = c * p.x + d;
    const double ry = c * p.y;
    const double den = rx * rx + ry * ry;
    const double nx = (a * p.x + b) * rx + a * p.y * ry;
    const double ny = (a * d - b * c) * p.y;
    return {nx / den, ny / den};
}

double Mobius::apply_boundary(double x) const {
    if (std::isinf(x)) return c == 0.0 ? kInf : a / c;
    const double den = c * x + d;
    if (den == 0.0) return kInf;
    return (a * x + b) / den;
}

H2Geodesic Mobius::apply(const H2Geodesic& g) const {
    const auto [e1, e2] = g.endpoints();
    return H2Geodesic::from_endpoints(apply_boundary(e1), apply_boundary(e2));
}

Mobius Mobius::compose(const Mobius& rhs) const {
    return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d, c * rhs.a + d * rhs.c,
            c * rhs.b + d * rhs.d};
}

Mobius Mobius::inverse() const { return {d, -b, -c, a}; }

Mobius Mobius::to_imaginary_axis(const H2Geodesic& g) {
    if (g.kind == H2Geodesic::Kind::VerticalLine) return translation(-g.c);
    // (z - (c+r)) / (z - (c-r)): determinant 2r > 0.
    return {1.0, -(g.c + g.r), 1.0, -(g.c - g.r)};
}

}  // namespace realsurf
