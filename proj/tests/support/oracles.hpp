#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tactile/engine.hpp"
#include "tactile/image_model.hpp"

// Reference implementations written independently of the library, used as
// test oracles. None of them call into the code under test.
namespace oracle {

using tactile::AnnotatedImage;
using tactile::AreaPath;
using tactile::CamGrid;
using tactile::Point;
using tactile::Polygon;

/// Even-odd rule with a vertical (upward) ray; points within `tol` of an
/// edge count as inside.
bool contains(const Polygon& poly, Point p, double tol = 1e-9);

double abs_area(const Polygon& poly);

/// Area centroid; the vertex mean for degenerate polygons.
Point shoelace_centroid(const Polygon& poly);

/// Smallest containing polygon, ties to the earlier one.
std::optional<std::size_t> smallest_containing(const std::vector<Polygon>& polys, Point p);

Point monte_carlo_centroid(const Polygon& poly, std::size_t samples, std::mt19937_64& rng);

/// Row-major mean over covered cell centers, or the centroid cell.
double prominence(const Polygon& poly, const CamGrid& cam);

/// Index 0..7 in the order right, down-right, down, down-left, left,
/// up-left, up, up-right: the unit direction with the largest dot product,
/// earlier index on ties.
int direction_index(Point v);

/// Expected beep interval by direct evaluation.
int beep_interval(double d);

/// Unexplored entries at the top level (parent == nullopt) or inside a
/// parent, recomputed from a touched set.
std::size_t unexplored(const AnnotatedImage& image, const std::set<AreaPath>& touched,
                       std::optional<std::size_t> parent);

/// Total ordering the menu must follow, as a strict-weak "a before b".
struct MenuItem {
    std::string label;
    bool explored = false;
    bool recommended = false;
    std::size_t sub_count = 0;
    std::size_t index = 0;  // annotation order
};
bool menu_before(const MenuItem& a, const MenuItem& b, bool hints);

/// Overlap of two polygons estimated on an n×n grid of sample points.
bool grid_overlap(const Polygon& a, const Polygon& b, int n = 200);

}  // namespace oracle

namespace gen {

using tactile::Point;
using tactile::Polygon;

/// Star-shaped (hence simple) polygon with `n` vertices around `center`.
Polygon star_polygon(std::mt19937_64& rng, Point center, double r_min, double r_max, int n);

/// Random polygon of 3..12 vertices fully inside the unit square.
Polygon random_polygon(std::mt19937_64& rng);

Point random_point(std::mt19937_64& rng);

tactile::CamGrid random_cam(std::mt19937_64& rng, int max_rows = 16, int max_cols = 16);

/// A valid image with up to `max_top` top-level areas (some with sub-areas
/// whose centroids sit inside the parent). Labels are unique per level.
tactile::AnnotatedImage random_image(std::mt19937_64& rng, int max_top = 6, int max_sub = 4);

}  // namespace gen
