#include "tactile/image_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

namespace tactile {

namespace {

// Top-level polygons sharing less than this much area are treated as touching.
constexpr double kOverlapAreaEpsilon = 1e-9;
constexpr double kZeroArea = 1e-12;

bool all_collinear(const Polygon& poly) {
    for (std::size_t i = 2; i < poly.size(); ++i) {
        const Point u = poly[1] - poly[0];
        const Point v = poly[i] - poly[0];
        if (std::abs(u.x * v.y - u.y * v.x) > kZeroArea) {
            return false;
        }
    }
    return true;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>((c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c);
    });
    return out;
}

std::string area_issue_path(std::size_t top, std::optional<std::size_t> sub) {
    std::string p = "areas/" + std::to_string(top);
    if (sub) {
        p += "/sub_areas/" + std::to_string(*sub);
    }
    return p;
}

void check_polygon(const Area& area, const std::string& path, std::vector<ValidationIssue>& out) {
    if (area.label.empty()) {
        out.push_back({Severity::error, path, "empty label"});
    }
    if (area.polygon.size() < 3) {
        out.push_back({Severity::error, path, "polygon needs at least 3 vertices"});
        return;
    }
    bool finite = true;
    for (const Point& p : area.polygon) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            finite = false;
        } else if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0) {
            out.push_back({Severity::error, path, "vertex out of bounds"});
            break;
        }
    }
    if (!finite) {
        out.push_back({Severity::error, path, "non-finite vertex"});
        return;
    }
    if (polygon_area(area.polygon) <= kZeroArea && all_collinear(area.polygon)) {
        out.push_back({Severity::error, path, "polygon has zero area"});
    } else if (!is_simple(area.polygon)) {
        out.push_back({Severity::error, path, "polygon is self-intersecting"});
    } else if (polygon_area(area.polygon) <= kZeroArea) {
        out.push_back({Severity::error, path, "polygon has zero area"});
    }
    if (area.prominence && (!std::isfinite(*area.prominence) || *area.prominence < 0.0 || *area.prominence > 1.0)) {
        out.push_back({Severity::error, path, "prominence outside [0,1]"});
    }
}

void check_unique_labels(const std::vector<Area>& areas, const std::string& parent_path,
                         std::optional<std::size_t> parent_index, std::vector<ValidationIssue>& out) {
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < areas.size(); ++i) {
        const auto [it, inserted] = seen.emplace(lowercase(areas[i].label), i);
        if (!inserted) {
            const std::string path =
                parent_index ? area_issue_path(*parent_index, i) : area_issue_path(i, std::nullopt);
            out.push_back({Severity::error, path, "duplicate label \"" + areas[i].label + "\"" +
                                                      (parent_path.empty() ? "" : " within " + parent_path)});
        }
    }
}

bool polygon_usable(const Area& a) {
    return a.polygon.size() >= 3 && polygon_area(a.polygon) > kZeroArea && is_simple(a.polygon);
}

}  // namespace

std::string AreaPath::to_string() const {
    std::string s = std::to_string(top);
    if (sub) {
        s += "/" + std::to_string(*sub);
    }
    return s;
}

AreaPath AreaPath::parse(std::string_view text) {
    auto parse_index = [](std::string_view part) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw std::invalid_argument("malformed area path");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return AreaPath{parse_index(text), std::nullopt};
    }
    return AreaPath{parse_index(text.substr(0, slash)), parse_index(text.substr(slash + 1))};
}

std::vector<ValidationIssue> validate(const AnnotatedImage& image) {
    std::vector<ValidationIssue> out;
    if (image.width_px <= 0 || image.height_px <= 0) {
        out.push_back({Severity::error, "", "image dimensions must be positive"});
    }
    if (image.areas.empty()) {
        out.push_back({Severity::warning, "areas", "image has no areas"});
    }
    check_unique_labels(image.areas, "", std::nullopt, out);

    for (std::size_t i = 0; i < image.areas.size(); ++i) {
        const Area& area = image.areas[i];
        const std::string path = area_issue_path(i, std::nullopt);
        check_polygon(area, path, out);
        check_unique_labels(area.sub_areas, area.label, i, out);
        for (std::size_t j = 0; j < area.sub_areas.size(); ++j) {
            const Area& sub = area.sub_areas[j];
            const std::string sub_path = area_issue_path(i, j);
            check_polygon(sub, sub_path, out);
            if (!sub.sub_areas.empty()) {
                out.push_back({Severity::error, sub_path, "sub-areas cannot have sub-areas"});
            }
            if (sub.recommended) {
                out.push_back({Severity::error, sub_path, "only top-level areas can be recommended"});
            }
            if (area.polygon.size() >= 3 && sub.polygon.size() >= 3 && !contains(area.polygon, centroid(sub))) {
                out.push_back({Severity::error, sub_path, "sub-area centroid outside parent"});
            }
        }
    }

    for (std::size_t i = 0; i < image.areas.size(); ++i) {
        for (std::size_t j = i + 1; j < image.areas.size(); ++j) {
            const Area& a = image.areas[i];
            const Area& b = image.areas[j];
            if (polygon_usable(a) && polygon_usable(b) && overlap_area(a.polygon, b.polygon) > kOverlapAreaEpsilon) {
                out.push_back({Severity::warning, area_issue_path(j, std::nullopt),
                               "top-level overlap with " + area_issue_path(i, std::nullopt)});
            }
        }
    }

    // A beacon steers to the centroid, so the centroid must lie on the area.
    for (const AreaPath& p : all_paths(image)) {
        const Area& a = area_at(image, p);
        if (polygon_usable(a) && !contains(a.polygon, centroid(a))) {
            out.push_back({Severity::warning, area_issue_path(p.top, p.sub), "centroid outside polygon"});
        }
    }

    if (image.cam) {
        const CamGrid& cam = *image.cam;
        if (cam.rows <= 0 || cam.cols <= 0) {
            out.push_back({Severity::error, "cam", "grid dimensions must be positive"});
        } else if (cam.values.size() != static_cast<std::size_t>(cam.rows) * static_cast<std::size_t>(cam.cols)) {
            out.push_back({Severity::error, "cam", "values length must equal rows*cols"});
        }
        for (double v : cam.values) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                out.push_back({Severity::error, "cam", "values must be finite and within [0,1]"});
                break;
            }
        }
    }

    for (const std::string& key : image.unknown_keys) {
        out.push_back({Severity::warning, key, "unknown key"});
    }
    return out;
}

bool has_errors(const std::vector<ValidationIssue>& issues) {
    return std::any_of(issues.begin(), issues.end(),
                       [](const ValidationIssue& i) { return i.severity == Severity::error; });
}

std::string format_issue(const ValidationIssue& issue) {
    std::string s = issue.severity == Severity::error ? "error" : "warning";
    if (!issue.path.empty()) {
        s += " [" + issue.path + "]";
    }
    return s + ": " + issue.message;
}

bool path_exists(const AnnotatedImage& image, const AreaPath& path) {
    if (path.top >= image.areas.size()) {
        return false;
    }
    return !path.sub || *path.sub < image.areas[path.top].sub_areas.size();
}

const Area& area_at(const AnnotatedImage& image, const AreaPath& path) {
    if (!path_exists(image, path)) {
        throw NoSuchArea();
    }
    const Area& top = image.areas[path.top];
    return path.sub ? top.sub_areas[*path.sub] : top;
}

std::vector<AreaPath> level_paths(const AnnotatedImage& image, Level level) {
    std::vector<AreaPath> out;
    if (level.is_top()) {
        for (std::size_t i = 0; i < image.areas.size(); ++i) {
            out.push_back({i, std::nullopt});
        }
        return out;
    }
    const Area& parent = area_at(image, AreaPath{*level.parent, std::nullopt});
    for (std::size_t j = 0; j < parent.sub_areas.size(); ++j) {
        out.push_back({*level.parent, j});
    }
    return out;
}

std::vector<AreaPath> all_paths(const AnnotatedImage& image) {
    std::vector<AreaPath> out;
    for (std::size_t i = 0; i < image.areas.size(); ++i) {
        out.push_back({i, std::nullopt});
        for (std::size_t j = 0; j < image.areas[i].sub_areas.size(); ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

std::optional<AreaPath> hit_test(const AnnotatedImage& image, Point point, Level level) {
    const std::vector<Area>* candidates = &image.areas;
    if (!level.is_top()) {
        const Area& parent = area_at(image, AreaPath{*level.parent, std::nullopt});
        if (!contains(parent.polygon, point)) {
            return std::nullopt;
        }
        candidates = &parent.sub_areas;
    }
    std::optional<std::size_t> best;
    double best_area = 0.0;
    for (std::size_t i = 0; i < candidates->size(); ++i) {
        const Polygon& poly = (*candidates)[i].polygon;
        if (!contains(poly, point)) {
            continue;
        }
        const double a = polygon_area(poly);
        if (!best || a < best_area) {
            best = i;
            best_area = a;
        }
    }
    if (!best) {
        return std::nullopt;
    }
    if (level.is_top()) {
        return AreaPath{*best, std::nullopt};
    }
    return AreaPath{*level.parent, *best};
}

Point centroid(const Area& area) { return centroid(area.polygon); }

double area_prominence(const Area& area, const CamGrid& cam) {
    double sum = 0.0;
    std::size_t count = 0;
    for (int r = 0; r < cam.rows; ++r) {
        for (int c = 0; c < cam.cols; ++c) {
            if (contains(area.polygon, cam.cell_center(r, c))) {
                sum += cam.at(r, c);
                ++count;
            }
        }
    }
    if (count > 0) {
        return sum / static_cast<double>(count);
    }
    const Point g = centroid(area);
    const int col = std::clamp(static_cast<int>(std::floor(g.x * cam.cols)), 0, cam.cols - 1);
    const int row = std::clamp(static_cast<int>(std::floor(g.y * cam.rows)), 0, cam.rows - 1);
    return cam.at(row, col);
}

}  // namespace tactile
