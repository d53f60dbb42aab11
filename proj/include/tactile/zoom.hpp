#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tactile/audio_event.hpp"
#include "tactile/geometry.hpp"
#include "tactile/state.hpp"

namespace tactile {

/// Quadrant holding `p`. Points on x = 0.5 or y = 0.5 go to the lower index.
Quadrant quadrant_of(Point p);
Rect quadrant_rect(Quadrant q);
std::string_view quadrant_label(Quadrant q);  // "Q1".."Q4"

/// Full screen onto the quadrant at 2x: image = corner + screen / 2.
Point to_image_coords(Quadrant q, Point screen);
Point to_screen_coords(Quadrant q, Point image);

/// Whether a finger at `image_point` is in the warning band of an area that
/// continues past the quadrant. `area` is the area under the finger.
bool in_bleed_band(const Area& area, Quadrant q, Point image_point, double guard_band);

/// Screen point to image point under the current zoom (identity when not zoomed).
Point screen_to_image(const ExplorationState& state, Point screen);

void zoom_in(const EngineContext& ctx, ExplorationState& state, Point tap_midpoint, std::int64_t now_ms,
             std::vector<AudioEvent>& out);
void zoom_out(const EngineContext& ctx, ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out);

/// Starts or stops the bleed warning for a finger at `image_point`.
void bleed_check(const EngineContext& ctx, ExplorationState& state, Point image_point, std::int64_t now_ms,
                 std::vector<AudioEvent>& out);

/// Stops the bleed tone if it is sounding.
void stop_bleed(ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out);

}  // namespace tactile
