#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tactile/geometry.hpp"

namespace tactile {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TimingConfig {
    int tap_max_ms = 250;        // longest down->up that still counts as a tap
    int multi_tap_gap_ms = 300;  // longest up->down gap joining taps into a group
    int hold_ms = 500;           // press on a button at least this long is a hold
    double slop = 0.02;          // movement (normalized) that turns a press into a drag
};

struct MenuBeaconConfig {
    Rect open_button{0.0, 0.0, 0.18, 0.10};    // upper-left: open menu
    Rect scroll_button{0.0, 0.90, 0.18, 1.0};  // lower-left: scroll, hold for beacon
    int min_interval_ms = 120;
    int max_interval_ms = 900;
    int announce_period_ms = 1500;
};

struct HintsConfig {
    double volume_min = 0.3;
    double volume_max = 1.0;
};

struct ZoomConfig {
    double guard_band = 0.03;
    std::array<std::string, 4> quadrant_names{"top left", "top right", "bottom left", "bottom right"};
};

struct EngineConfig {
    TimingConfig timing;
    MenuBeaconConfig menu_beacon;
    HintsConfig hints;
    ZoomConfig zoom;
};

/// Which assistive tools are switched on. All off is the baseline explorer.
struct Tools {
    bool menu_beacon = false;
    bool hints = false;
    bool zoom = false;

    static Tools none() { return {}; }
    static Tools all() { return {true, true, true}; }
    /// Comma-separated list of menu_beacon, hints, zoom (or quadrant_zoom);
    /// "none" or empty selects the baseline.
    static Tools parse(std::string_view csv);
    std::string to_string() const;

    friend bool operator==(const Tools&, const Tools&) = default;
};

/// Parses `key = value` lines grouped under `[timing]`, `[menu_beacon]`,
/// `[hints]` and `[zoom]`. `#` starts a comment. Unspecified keys keep
/// their defaults; unknown sections or keys are an error.
EngineConfig parse_config(std::string_view text);
EngineConfig load_config(const std::filesystem::path& path);

/// The defaults rendered in the same format, with comments.
std::string default_config_text();

}  // namespace tactile
