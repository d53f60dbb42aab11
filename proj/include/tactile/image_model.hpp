#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/geometry.hpp"

namespace tactile {

/// Index path to an area: a top-level index, optionally followed by a
/// sub-area index. Rendered as "2" or "2/1".
struct AreaPath {
    std::size_t top = 0;
    std::optional<std::size_t> sub;

    bool is_top_level() const { return !sub.has_value(); }
    AreaPath parent() const { return AreaPath{top, std::nullopt}; }
    std::string to_string() const;
    static AreaPath parse(std::string_view text);

    friend auto operator<=>(const AreaPath&, const AreaPath&) = default;
    friend bool operator==(const AreaPath&, const AreaPath&) = default;
};

/// Which areas are currently announced: the top level, or the sub-areas of
/// one entered top-level area.
struct Level {
    std::optional<std::size_t> parent;

    static Level top() { return {}; }
    static Level inside(std::size_t top_index) { return Level{top_index}; }
    bool is_top() const { return !parent.has_value(); }

    friend bool operator==(const Level&, const Level&) = default;
};

struct CamGrid {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;  // row-major

    double at(int row, int col) const { return values[static_cast<std::size_t>(row * cols + col)]; }
    Point cell_center(int row, int col) const {
        return {(col + 0.5) / static_cast<double>(cols), (row + 0.5) / static_cast<double>(rows)};
    }
};

struct Area {
    std::string label;
    Polygon polygon;
    std::vector<Area> sub_areas;
    bool recommended = false;
    std::optional<double> prominence;
};

struct AnnotatedImage {
    std::string image_id;
    long long width_px = 0;
    long long height_px = 0;
    std::string caption;
    std::vector<Area> areas;
    std::optional<CamGrid> cam;
    // Keys present in the source file that the schema does not define,
    // as JSON-pointer-ish paths. Reported by validate().
    std::vector<std::string> unknown_keys;
};

enum class Severity { error, warning };

struct ValidationIssue {
    Severity severity = Severity::error;
    std::string path;  // "areas/2/sub_areas/0", "cam", "" for the image itself
    std::string message;
};

class NoSuchArea : public std::out_of_range {
public:
    NoSuchArea() : std::out_of_range("no such area") {}
};

std::vector<ValidationIssue> validate(const AnnotatedImage& image);
bool has_errors(const std::vector<ValidationIssue>& issues);
std::string format_issue(const ValidationIssue& issue);

/// Throws NoSuchArea for a path that does not resolve.
const Area& area_at(const AnnotatedImage& image, const AreaPath& path);
bool path_exists(const AnnotatedImage& image, const AreaPath& path);

/// Paths of the areas announced at `level`, in annotation order.
std::vector<AreaPath> level_paths(const AnnotatedImage& image, Level level);

/// Every top-level area and sub-area, depth-first in annotation order.
std::vector<AreaPath> all_paths(const AnnotatedImage& image);

/// Area whose polygon contains `point` at `level`. Overlaps resolve to the
/// smallest polygon area, then to list order. Sub-areas only match inside
/// their parent polygon. Throws NoSuchArea for an invalid entered parent.
std::optional<AreaPath> hit_test(const AnnotatedImage& image, Point point, Level level);

Point centroid(const Area& area);

/// Mean CAM value over the cells whose centers fall inside the polygon
/// (row-major summation). With no covered cell, the value of the cell that
/// holds the polygon centroid.
double area_prominence(const Area& area, const CamGrid& cam);

}  // namespace tactile
