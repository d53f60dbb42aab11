#include "tactile/menu_beacon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "tactile/engine.hpp"
#include "tactile/zoom.hpp"

namespace tactile {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
    }
    return out;
}

bool label_less(const AnnotatedImage& image, const MenuEntry& a, const MenuEntry& b) {
    const std::string& la = area_at(image, a.area).label;
    const std::string& lb = area_at(image, b.area).label;
    const std::string ka = lower(la);
    const std::string kb = lower(lb);
    if (ka != kb) {
        return ka < kb;
    }
    if (la != lb) {
        return la < lb;
    }
    return a.area < b.area;
}

void order_block(const AnnotatedImage& image, std::vector<MenuEntry>& block) {
    std::stable_sort(block.begin(), block.end(), [&image](const MenuEntry& a, const MenuEntry& b) {
        if (a.recommended != b.recommended) {
            return a.recommended;
        }
        if (!a.recommended && a.sub_count != b.sub_count) {
            return a.sub_count > b.sub_count;
        }
        return label_less(image, a, b);
    });
}

std::string count_suffix(std::size_t k) {
    return ", " + std::to_string(k) + (k == 1 ? " sub-area" : " sub-areas");
}

void open_menu(const EngineContext& ctx, ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out) {
    state.menu.entries = build_menu(ctx, state);
    state.menu.cursor = 0;
    state.menu.cursor_spoken = false;
    state.menu.open = true;
    out.push_back({now_ms, Speech{unexplored_phrase(unexplored_count(ctx.image, state, state.level)), 1.0,
                                  Voice::primary, Cue::menu_count, std::nullopt}});
}

void scroll_once(const EngineContext& ctx, ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out) {
    MenuState& menu = state.menu;
    if (menu.entries.empty()) {
        return;
    }
    if (state.level.is_top()) {
        state.counters.top_level_scroll_ms.push_back(now_ms);
    }
    if (!menu.cursor_spoken) {
        menu.cursor_spoken = true;
        menu.cursor = 0;
    } else if (++menu.cursor >= menu.entries.size()) {
        menu.cursor = 0;
        out.push_back({now_ms, Earcon{EarconKind::menu_wrap}});
    }
    out.push_back({now_ms, menu_entry_speech(ctx, menu.entries[menu.cursor])});
}

void activate_beacon(const EngineContext& ctx, ExplorationState& state, const MenuEntry& entry, std::int64_t now_ms,
                     std::vector<AudioEvent>& out) {
    const Point target = centroid(area_at(ctx.image, entry.area));
    if (state.zoom && !quadrant_rect(state.zoom->active_quadrant).contains(target)) {
        out.push_back({now_ms, Speech{"target outside zoomed quadrant", 1.0, Voice::primary, Cue::beacon_rejected,
                                      entry.area}});
        return;
    }
    state.beacon = BeaconState{entry.area, target, std::nullopt, std::nullopt};
    state.menu.open = false;
    ++state.counters.beacons_placed;
    out.push_back({now_ms, Speech{"in beacon mode", 1.0, Voice::primary, Cue::beacon_on, entry.area}});
}

}  // namespace

std::vector<MenuEntry> build_menu(const EngineContext& ctx, const ExplorationState& state) {
    std::vector<MenuEntry> unexplored;
    std::vector<MenuEntry> explored;
    for (const AreaPath& p : level_paths(ctx.image, state.level)) {
        const Area& area = area_at(ctx.image, p);
        if (state.zoom) {
            const Polygon quad = quadrant_rect(state.zoom->active_quadrant).to_polygon();
            if (overlap_area(area.polygon, quad) <= 0.0) {
                continue;
            }
        }
        MenuEntry e{p, state.explored.contains(p), p.is_top_level() && area.recommended, area.sub_areas.size()};
        (e.explored ? explored : unexplored).push_back(e);
    }
    if (ctx.tools.hints) {
        order_block(ctx.image, unexplored);
        order_block(ctx.image, explored);
    }
    unexplored.insert(unexplored.end(), explored.begin(), explored.end());
    return unexplored;
}

Speech menu_entry_speech(const EngineContext& ctx, const MenuEntry& entry) {
    const Area& area = area_at(ctx.image, entry.area);
    std::string text;
    if (ctx.tools.hints && entry.recommended) {
        text += "recommended ";
    }
    if (entry.explored) {
        text += "explored ";
    }
    text += area.label;
    if (ctx.tools.hints && entry.sub_count > 0) {
        text += count_suffix(entry.sub_count);
    }
    return Speech{text, 1.0, entry.explored ? Voice::secondary : Voice::primary, Cue::menu_entry, entry.area};
}

void menu_tap(const EngineContext& ctx, ExplorationState& state, Button button, int presses, std::int64_t now_ms,
              std::vector<AudioEvent>& out) {
    if (button == Button::open) {
        open_menu(ctx, state, now_ms, out);
        return;
    }
    if (!state.menu.open) {
        return;
    }
    for (int i = 0; i < presses; ++i) {
        scroll_once(ctx, state, now_ms, out);
    }
}

void menu_hold(const EngineContext& ctx, ExplorationState& state, Button button, std::int64_t now_ms,
               std::vector<AudioEvent>& out) {
    if (button != Button::scroll) {
        return;
    }
    if (state.beacon) {
        cancel_beacon(state, now_ms, out);
        return;
    }
    if (!state.menu.open || state.menu.entries.empty()) {
        return;
    }
    const MenuEntry entry = state.menu.entries[state.menu.cursor];
    activate_beacon(ctx, state, entry, now_ms, out);
}

void cancel_beacon(ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out) {
    if (!state.beacon) {
        return;
    }
    const bool beeping = state.beacon->last_interval_ms.has_value();
    state.beacon.reset();
    if (beeping) {
        out.push_back({now_ms, BeepRate{std::nullopt}});
    }
    out.push_back({now_ms, Speech{"beacon canceled", 1.0, Voice::primary, Cue::beacon_off, std::nullopt}});
}

void beacon_guide(const EngineContext& ctx, ExplorationState& state, Point finger, std::int64_t now_ms,
                  std::vector<AudioEvent>& out) {
    if (!state.beacon) {
        return;
    }
    BeaconState& beacon = *state.beacon;
    if (hit_test(ctx.image, finger, state.level) == beacon.target) {
        const AreaPath target = beacon.target;
        state.beacon.reset();
        out.push_back({now_ms, Earcon{EarconKind::beacon_arrived}});
        out.push_back({now_ms, Speech{"arrived at " + area_at(ctx.image, target).label, 1.0, Voice::primary,
                                      Cue::arrived, target}});
        out.push_back({now_ms, BeepRate{std::nullopt}});
        if (target.is_top_level()) {
            state.last_announced = target;
        }
        mark_touched(ctx, state, target, now_ms, out);
        return;
    }
    const Point v = beacon.target_point - finger;
    const int interval = beep_interval_ms(distance(beacon.target_point, finger), ctx.config.menu_beacon);
    if (beacon.last_interval_ms != interval) {
        beacon.last_interval_ms = interval;
        out.push_back({now_ms, BeepRate{interval}});
    }
    if (!beacon.last_announce_ms || now_ms - *beacon.last_announce_ms >= ctx.config.menu_beacon.announce_period_ms) {
        beacon.last_announce_ms = now_ms;
        out.push_back({now_ms, Speech{std::string(direction_phrase(direction_of(v))), 1.0, Voice::primary,
                                      Cue::direction, beacon.target}});
    }
}

Direction direction_of(Point v) {
    constexpr double kSector = std::numbers::pi / 4.0;
    const double theta = std::atan2(v.y, v.x);
    const double s = (theta + kSector / 2.0) / kSector;
    const double base = std::floor(s);
    long k = static_cast<long>(base);
    if (s == base) {
        // Boundary between sectors k-1 and k: the lower index wins.
        const long a = ((k - 1) % 8 + 8) % 8;
        const long b = (k % 8 + 8) % 8;
        k = std::min(a, b);
    }
    return static_cast<Direction>(((k % 8) + 8) % 8);
}

std::string_view direction_phrase(Direction d) {
    static constexpr std::array<std::string_view, 8> kPhrases{
        "right", "down and right", "down", "down and left", "left", "up and left", "up", "up and right"};
    return kPhrases[static_cast<std::size_t>(d)];
}

int beep_interval_ms(double distance, const MenuBeaconConfig& cfg) {
    const double fraction = std::min(distance / std::numbers::sqrt2, 1.0);
    const double raw = cfg.min_interval_ms + (cfg.max_interval_ms - cfg.min_interval_ms) * fraction;
    return static_cast<int>(std::lround(raw / 10.0)) * 10;
}

}  // namespace tactile
