#pragma once

#include <array>
#include <span>
#include <vector>

namespace tactile {

// Normalized image/screen coordinates: origin top-left, x right, y down.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }

using Polygon = std::vector<Point>;
using Triangle = std::array<Point, 3>;

// Inclusive boundary tolerance for containment tests, in normalized units.
inline constexpr double kBoundaryTolerance = 1e-9;

// Axis-aligned rectangle [x0,x1] x [y0,y1], inclusive.
struct Rect {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;

    bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    Polygon to_polygon() const { return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}; }
    Point center() const { return {(x0 + x1) / 2.0, (y0 + y1) / 2.0}; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

double cross(Point o, Point a, Point b);
double distance(Point a, Point b);
double distance_to_segment(Point p, Point a, Point b);

double signed_area(std::span<const Point> poly);
double polygon_area(std::span<const Point> poly);

/// Area-weighted centroid. Falls back to the vertex mean when the polygon's
/// absolute area is below `degenerate_area`.
Point centroid(std::span<const Point> poly, double degenerate_area = 1e-12);

Rect bounding_box(std::span<const Point> poly);

/// Even-odd containment; points within `tolerance` of an edge count as inside.
bool contains(std::span<const Point> poly, Point p, double tolerance = kBoundaryTolerance);

/// Closed-segment intersection (touching endpoints and collinear overlap count).
bool segments_intersect(Point a, Point b, Point c, Point d);

/// No two non-adjacent edges meet, adjacent edges share only their common vertex.
bool is_simple(std::span<const Point> poly);

/// Ear-clipping triangulation of a simple polygon. Collinear vertices are
/// dropped; the returned triangles are counter-clockwise in the (x, y) plane.
std::vector<Triangle> triangulate(std::span<const Point> poly);

/// Area of the intersection of two convex polygons (Sutherland-Hodgman).
double convex_intersection_area(std::span<const Point> subject, std::span<const Point> clip);

/// Area shared by two simple polygons.
double overlap_area(std::span<const Point> a, std::span<const Point> b);

}  // namespace tactile
