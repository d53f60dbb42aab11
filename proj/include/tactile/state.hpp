#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "tactile/config.hpp"
#include "tactile/geometry.hpp"
#include "tactile/image_model.hpp"

namespace tactile {

struct ProminenceTable;

struct MenuEntry {
    AreaPath area;
    bool explored = false;
    bool recommended = false;
    std::size_t sub_count = 0;

    friend bool operator==(const MenuEntry&, const MenuEntry&) = default;
};

struct MenuState {
    bool open = false;
    std::vector<MenuEntry> entries;
    std::size_t cursor = 0;
    // False right after opening: the first scroll speaks entry 0 instead of advancing.
    bool cursor_spoken = false;
};

struct BeaconState {
    AreaPath target;
    Point target_point;  // image coordinates (centroid)
    std::optional<std::int64_t> last_announce_ms;
    std::optional<int> last_interval_ms;  // last beep_rate emitted
};

// Reading order: Q1 top-left, Q2 top-right, Q3 bottom-left, Q4 bottom-right.
enum class Quadrant { q1 = 0, q2 = 1, q3 = 2, q4 = 3 };

struct ZoomState {
    Quadrant active_quadrant = Quadrant::q1;
    bool in_bleed = false;
};

struct SessionCounters {
    std::vector<std::int64_t> top_level_scroll_ms;  // time of each scroll press at the top level
    int beacons_placed = 0;
};

struct ExplorationState {
    Level level;
    std::set<AreaPath> explored;
    std::set<AreaPath> touched_once;
    MenuState menu;
    std::optional<BeaconState> beacon;
    std::optional<ZoomState> zoom;
    Tools enabled_tools;

    bool finger_down = false;
    bool off_area_tone = false;
    std::optional<AreaPath> last_announced;  // most recent top-level area spoken
    bool completion_announced = false;
    SessionCounters counters;
};

/// Read-only inputs shared by every step.
struct EngineContext {
    const AnnotatedImage& image;
    const EngineConfig& config;
    Tools tools;
    const ProminenceTable* prominence = nullptr;  // set when the image has a CAM
};

}  // namespace tactile
