#include "tactile/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace tactile {

namespace {

bool on_segment(Point p, Point a, Point b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

std::vector<Point> ccw_copy(std::span<const Point> poly) {
    std::vector<Point> pts(poly.begin(), poly.end());
    if (signed_area(pts) < 0.0) {
        std::reverse(pts.begin(), pts.end());
    }
    return pts;
}

bool in_closed_triangle(Point p, Point a, Point b, Point c) {
    // Triangle is CCW; points on the edges count as blocking so that ears never
    // swallow a reflex vertex sitting on their boundary.
    return cross(a, b, p) >= 0.0 && cross(b, c, p) >= 0.0 && cross(c, a, p) >= 0.0;
}

}  // namespace

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double distance(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double distance_to_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) {
        return distance(p, a);
    }
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + ab * t);
}

double signed_area(std::span<const Point> poly) {
    if (poly.size() < 3) {
        return 0.0;
    }
    double sum = 0.0;
    const Point o = poly[0];
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        sum += cross(o, poly[i], poly[i + 1]);
    }
    return 0.5 * sum;
}

double polygon_area(std::span<const Point> poly) { return std::abs(signed_area(poly)); }

Point centroid(std::span<const Point> poly, double degenerate_area) {
    if (poly.empty()) {
        return {};
    }
    const double area = signed_area(poly);
    if (std::abs(area) < degenerate_area) {
        Point mean;
        for (const Point& p : poly) {
            mean = mean + p;
        }
        return mean * (1.0 / static_cast<double>(poly.size()));
    }
    // Fan decomposition around the first vertex keeps magnitudes small.
    const Point o = poly[0];
    double cx = 0.0;
    double cy = 0.0;
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        const Point a = poly[i] - o;
        const Point b = poly[i + 1] - o;
        const double w = a.x * b.y - b.x * a.y;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    return {o.x + cx / (6.0 * area), o.y + cy / (6.0 * area)};
}

Rect bounding_box(std::span<const Point> poly) {
    if (poly.empty()) {
        return {};
    }
    Rect r{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
    for (const Point& p : poly) {
        r.x0 = std::min(r.x0, p.x);
        r.y0 = std::min(r.y0, p.y);
        r.x1 = std::max(r.x1, p.x);
        r.y1 = std::max(r.y1, p.y);
    }
    return r;
}

bool contains(std::span<const Point> poly, Point p, double tolerance) {
    const std::size_t n = poly.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (distance_to_segment(p, poly[i], poly[(i + 1) % n]) <= tolerance) {
            return true;
        }
    }
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = poly[j];
        const Point b = poly[i];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_cross) {
                inside = !inside;
            }
        }
    }
    return inside;
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
    const int d1 = sign(cross(c, d, a));
    const int d2 = sign(cross(c, d, b));
    const int d3 = sign(cross(a, b, c));
    const int d4 = sign(cross(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) {
        return true;
    }
    return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) ||
           (d3 == 0 && on_segment(c, a, b)) || (d4 == 0 && on_segment(d, a, b));
}

bool is_simple(std::span<const Point> poly) {
    const std::size_t n = poly.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (poly[i] == poly[(i + 1) % n]) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i];
        const Point b = poly[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point c = poly[j];
            const Point d = poly[(j + 1) % n];
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (!adjacent) {
                if (segments_intersect(a, b, c, d)) {
                    return false;
                }
                continue;
            }
            // Adjacent edges may only fold back onto each other when collinear.
            const Point shared = (j == i + 1) ? b : a;
            const Point other_ab = (j == i + 1) ? a : b;
            const Point other_cd = (j == i + 1) ? d : c;
            if (cross(shared, other_ab, other_cd) == 0.0) {
                const Point u = other_ab - shared;
                const Point v = other_cd - shared;
                if (u.x * v.x + u.y * v.y > 0.0) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Triangle> triangulate(std::span<const Point> poly) {
    std::vector<Triangle> out;
    std::vector<Point> pts = ccw_copy(poly);
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::size_t guard = 0;
    while (idx.size() > 3 && guard < 4 * pts.size() * pts.size() + 16) {
        ++guard;
        const std::size_t m = idx.size();
        bool clipped = false;
        for (std::size_t k = 0; k < m; ++k) {
            const Point a = pts[idx[(k + m - 1) % m]];
            const Point b = pts[idx[k]];
            const Point c = pts[idx[(k + 1) % m]];
            const double turn = cross(a, b, c);
            if (turn == 0.0) {
                idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
                clipped = true;
                break;
            }
            if (turn < 0.0) {
                continue;
            }
            bool blocked = false;
            for (std::size_t q = 0; q < m && !blocked; ++q) {
                const Point p = pts[idx[q]];
                if (p == a || p == b || p == c) {
                    continue;
                }
                blocked = in_closed_triangle(p, a, b, c);
            }
            if (!blocked) {
                out.push_back({a, b, c});
                idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
                clipped = true;
                break;
            }
        }
        if (!clipped) {
            break;  // not simple; return what was clipped so far
        }
    }
    if (idx.size() == 3) {
        const Triangle t{pts[idx[0]], pts[idx[1]], pts[idx[2]]};
        if (cross(t[0], t[1], t[2]) > 0.0) {
            out.push_back(t);
        }
    }
    return out;
}

double convex_intersection_area(std::span<const Point> subject, std::span<const Point> clip) {
    std::vector<Point> out = ccw_copy(subject);
    const std::vector<Point> window = ccw_copy(clip);
    const std::size_t n = window.size();
    for (std::size_t i = 0; i < n && !out.empty(); ++i) {
        const Point e0 = window[i];
        const Point e1 = window[(i + 1) % n];
        std::vector<Point> input;
        input.swap(out);
        for (std::size_t k = 0; k < input.size(); ++k) {
            const Point cur = input[k];
            const Point prev = input[(k + input.size() - 1) % input.size()];
            const double s_cur = cross(e0, e1, cur);
            const double s_prev = cross(e0, e1, prev);
            if (s_cur >= 0.0) {
                if (s_prev < 0.0) {
                    const double t = s_prev / (s_prev - s_cur);
                    out.push_back(prev + (cur - prev) * t);
                }
                out.push_back(cur);
            } else if (s_prev >= 0.0) {
                const double t = s_prev / (s_prev - s_cur);
                out.push_back(prev + (cur - prev) * t);
            }
        }
    }
    return polygon_area(out);
}

double overlap_area(std::span<const Point> a, std::span<const Point> b) {
    const Rect ba = bounding_box(a);
    const Rect bb = bounding_box(b);
    if (ba.x1 < bb.x0 || bb.x1 < ba.x0 || ba.y1 < bb.y0 || bb.y1 < ba.y0) {
        return 0.0;
    }
    const std::vector<Triangle> ta = triangulate(a);
    const std::vector<Triangle> tb = triangulate(b);
    double total = 0.0;
    for (const Triangle& x : ta) {
        for (const Triangle& y : tb) {
            total += convex_intersection_area(x, y);
        }
    }
    return total;
}

}  // namespace tactile
