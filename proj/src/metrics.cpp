#include "tactile/metrics.hpp"

#include <set>

#include <json.hpp>

#include "tactile/annotation_io.hpp"

namespace tactile {

std::array<int, 10> bin_by_decile(std::span<const std::int64_t> times_ms, std::int64_t duration_ms) {
    std::array<int, 10> bins{};
    for (const std::int64_t t : times_ms) {
        std::int64_t bin = 0;
        if (duration_ms > 0) {
            bin = (10 * std::max<std::int64_t>(t, 0)) / duration_ms;
        }
        ++bins[static_cast<std::size_t>(std::min<std::int64_t>(bin, 9))];
    }
    return bins;
}

double coverage_percent(std::size_t touched, std::size_t total) {
    if (total == 0) {
        return 0.0;
    }
    return 100.0 * static_cast<double>(touched) / static_cast<double>(total);
}

SessionMetrics metrics_from_log(std::span<const AudioEvent> log, std::size_t total_areas, std::int64_t duration_ms) {
    std::set<AreaPath> touched;
    std::vector<std::int64_t> scrolls;
    SessionMetrics m;
    for (const AudioEvent& e : log) {
        const Speech* s = as_speech(e);
        if (!s) {
            continue;
        }
        switch (s->cue) {
            case Cue::area:
            case Cue::arrived:
                if (s->area) {
                    touched.insert(*s->area);
                }
                break;
            case Cue::menu_entry:
                if (s->area && s->area->is_top_level()) {
                    scrolls.push_back(e.time_ms);
                }
                break;
            case Cue::beacon_on:
                ++m.beacons_placed;
                break;
            default:
                break;
        }
    }
    m.duration_ms = duration_ms;
    m.touched_areas = touched.size();
    m.total_areas = total_areas;
    m.coverage_pct = coverage_percent(m.touched_areas, total_areas);
    m.menu_scrolls_by_decile = bin_by_decile(scrolls, duration_ms);
    return m;
}

std::string metrics_to_json(const SessionMetrics& m) {
    nlohmann::ordered_json j;
    j["coverage_pct"] = round9(m.coverage_pct);
    j["duration_ms"] = m.duration_ms;
    j["menu_scrolls_by_decile"] = m.menu_scrolls_by_decile;
    j["beacons_placed"] = m.beacons_placed;
    j["touched_areas"] = m.touched_areas;
    j["total_areas"] = m.total_areas;
    return j.dump(2) + "\n";
}

SessionMetrics metrics_from_json(std::string_view text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        SessionMetrics m;
        m.coverage_pct = j.at("coverage_pct").get<double>();
        m.duration_ms = j.at("duration_ms").get<std::int64_t>();
        m.menu_scrolls_by_decile = j.at("menu_scrolls_by_decile").get<std::array<int, 10>>();
        m.beacons_placed = j.at("beacons_placed").get<int>();
        m.touched_areas = j.at("touched_areas").get<std::size_t>();
        m.total_areas = j.at("total_areas").get<std::size_t>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed metrics: ") + e.what());
    }
}

}  // namespace tactile
