#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "tactile/audio_event.hpp"

namespace tactile {

struct SessionMetrics {
    double coverage_pct = 0.0;  // touched areas (both levels) / all areas * 100
    std::int64_t duration_ms = 0;
    std::array<int, 10> menu_scrolls_by_decile{};  // top-level scroll presses by elapsed tenth
    int beacons_placed = 0;
    std::size_t touched_areas = 0;
    std::size_t total_areas = 0;

    friend bool operator==(const SessionMetrics&, const SessionMetrics&) = default;
};

/// Tenth of the session each timestamp falls in; times at or past the end
/// land in the last bin, and a zero-length session puts everything in bin 0.
std::array<int, 10> bin_by_decile(std::span<const std::int64_t> times_ms, std::int64_t duration_ms);

double coverage_percent(std::size_t touched, std::size_t total);

/// Recomputes metrics from an event log. Touches are read from area and
/// arrival announcements, scrolls from top-level menu entries and beacons
/// from "in beacon mode" announcements.
SessionMetrics metrics_from_log(std::span<const AudioEvent> log, std::size_t total_areas, std::int64_t duration_ms);

std::string metrics_to_json(const SessionMetrics& m);
SessionMetrics metrics_from_json(std::string_view text);

}  // namespace tactile
