#include "tactile/engine.hpp"

#include <algorithm>

#include "tactile/menu_beacon.hpp"
#include "tactile/zoom.hpp"

namespace tactile {

namespace {

bool on_button(const EngineContext& ctx, Point screen) {
    if (!ctx.tools.menu_beacon) {
        return false;
    }
    const MenuBeaconConfig& m = ctx.config.menu_beacon;
    return m.open_button.contains(screen) || m.scroll_button.contains(screen);
}

bool path_at_level(const AreaPath& p, Level level) {
    if (level.is_top()) {
        return p.is_top_level();
    }
    return !p.is_top_level() && p.top == *level.parent;
}

void set_off_area_tone(ExplorationState& state, bool on, std::int64_t now_ms, std::vector<AudioEvent>& out) {
    if (state.off_area_tone == on) {
        return;
    }
    state.off_area_tone = on;
    out.push_back({now_ms, Tone{ToneKind::off_area_warning, on ? ToneAction::start : ToneAction::stop}});
}

void handle_touch(const EngineContext& ctx, ExplorationState& state, const gesture::Touch& touch, std::int64_t now_ms,
                  std::vector<AudioEvent>& out) {
    if (touch.phase == Phase::up) {
        state.finger_down = false;
        set_off_area_tone(state, false, now_ms, out);
        stop_bleed(state, now_ms, out);
        return;
    }
    state.finger_down = true;
    if (on_button(ctx, touch.position)) {
        return;
    }
    const Point image_point = screen_to_image(state, touch.position);
    if (state.zoom) {
        bleed_check(ctx, state, image_point, now_ms, out);
    }
    if (state.beacon) {
        beacon_guide(ctx, state, image_point, now_ms, out);
    }
    if (!state.level.is_top()) {
        const Area& parent = area_at(ctx.image, AreaPath{*state.level.parent, std::nullopt});
        set_off_area_tone(state, !contains(parent.polygon, image_point), now_ms, out);
    }
}

void handle_drag_enter(const EngineContext& ctx, ExplorationState& state, const gesture::DragEnter& enter,
                       std::int64_t now_ms, std::vector<AudioEvent>& out) {
    if (state.beacon || !path_exists(ctx.image, enter.area) || !path_at_level(enter.area, state.level)) {
        return;
    }
    const Area& area = area_at(ctx.image, enter.area);
    std::string text = area.label;
    if (enter.area.is_top_level() && !area.sub_areas.empty()) {
        text += ". Double-tap to explore";
    }
    double volume = 1.0;
    if (ctx.tools.hints && ctx.prominence) {
        volume = speech_volume(*ctx.prominence, enter.area, ctx.config.hints);
    }
    AudioEvent speech{now_ms, Speech{std::move(text), volume, Voice::primary, Cue::area, enter.area}};
    if (ctx.tools.hints) {
        const std::vector<AudioEvent> decorated = first_touch_decorate(state, enter.area, std::move(speech));
        out.insert(out.end(), decorated.begin(), decorated.end());
    } else {
        out.push_back(std::move(speech));
    }
    if (enter.area.is_top_level()) {
        state.last_announced = enter.area;
    }
    mark_touched(ctx, state, enter.area, now_ms, out);
}

void enter_parent(const EngineContext& ctx, ExplorationState& state, const AreaPath& parent, std::int64_t now_ms,
                  std::vector<AudioEvent>& out) {
    cancel_beacon(state, now_ms, out);
    state.level = Level::inside(parent.top);
    state.menu.open = false;
    out.push_back({now_ms, Speech{"Entered " + area_at(ctx.image, parent).label, 1.0, Voice::primary, Cue::entered,
                                  parent}});
}

void leave_parent(const EngineContext& ctx, ExplorationState& state, std::int64_t now_ms,
                  std::vector<AudioEvent>& out) {
    cancel_beacon(state, now_ms, out);
    set_off_area_tone(state, false, now_ms, out);
    state.level = Level::top();
    state.menu.open = false;
    out.push_back({now_ms, Speech{unexplored_phrase(unexplored_count(ctx.image, state, state.level)), 1.0,
                                  Voice::primary, Cue::count, std::nullopt}});
}

void handle_tap(const EngineContext& ctx, ExplorationState& state, const gesture::Tap& tap, std::int64_t now_ms,
                std::vector<AudioEvent>& out) {
    if (tap.finger_count == 2) {
        if (!ctx.tools.zoom) {
            return;
        }
        if (tap.tap_count == 2 && !state.zoom) {
            zoom_in(ctx, state, tap.position, now_ms, out);
        } else if (tap.tap_count == 3 && state.zoom) {
            zoom_out(ctx, state, now_ms, out);
        }
        return;
    }
    if (ctx.tools.menu_beacon) {
        const MenuBeaconConfig& m = ctx.config.menu_beacon;
        if (m.open_button.contains(tap.position)) {
            menu_tap(ctx, state, Button::open, tap.tap_count, now_ms, out);
            return;
        }
        if (m.scroll_button.contains(tap.position)) {
            menu_tap(ctx, state, Button::scroll, tap.tap_count, now_ms, out);
            return;
        }
    }
    if (tap.tap_count == 2 && state.level.is_top() && state.last_announced &&
        !area_at(ctx.image, *state.last_announced).sub_areas.empty()) {
        enter_parent(ctx, state, *state.last_announced, now_ms, out);
    } else if (tap.tap_count == 3 && !state.level.is_top()) {
        leave_parent(ctx, state, now_ms, out);
    }
}

}  // namespace

bool is_explored(const AnnotatedImage& image, const std::set<AreaPath>& touched, const AreaPath& path) {
    const Area& area = area_at(image, path);
    if (!path.is_top_level() || area.sub_areas.empty()) {
        return touched.contains(path);
    }
    for (std::size_t j = 0; j < area.sub_areas.size(); ++j) {
        if (!touched.contains(AreaPath{path.top, j})) {
            return false;
        }
    }
    return true;
}

std::size_t unexplored_count(const AnnotatedImage& image, const ExplorationState& state, Level level) {
    const std::vector<AreaPath> paths = level_paths(image, level);
    return static_cast<std::size_t>(
        std::count_if(paths.begin(), paths.end(), [&state](const AreaPath& p) { return !state.explored.contains(p); }));
}

std::string unexplored_phrase(std::size_t n) {
    return std::to_string(n) + (n == 1 ? " unexplored area" : " unexplored areas");
}

void mark_touched(const EngineContext& ctx, ExplorationState& state, const AreaPath& path, std::int64_t now_ms,
                  std::vector<AudioEvent>& out) {
    state.touched_once.insert(path);
    if (is_explored(ctx.image, state.touched_once, path)) {
        state.explored.insert(path);
    }
    if (!path.is_top_level() && is_explored(ctx.image, state.touched_once, path.parent())) {
        state.explored.insert(path.parent());
    }
    if (state.completion_announced || ctx.image.areas.empty()) {
        return;
    }
    if (unexplored_count(ctx.image, state, Level::top()) == 0) {
        state.completion_announced = true;
        out.push_back({now_ms, Speech{kCompletionPhrase, 1.0, Voice::primary, Cue::completion, std::nullopt}});
    }
}

std::optional<AreaPath> resolve_hover(const EngineContext& ctx, const ExplorationState& state, Point screen) {
    if (on_button(ctx, screen)) {
        return std::nullopt;
    }
    return hit_test(ctx.image, screen_to_image(state, screen), state.level);
}

std::vector<AudioEvent> apply_gesture(const EngineContext& ctx, ExplorationState& state, const GestureEvent& g) {
    std::vector<AudioEvent> out;
    const std::int64_t now = g.time_ms;
    std::visit(
        [&](const auto& kind) {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, gesture::Touch>) {
                handle_touch(ctx, state, kind, now, out);
            } else if constexpr (std::is_same_v<T, gesture::DragEnter>) {
                handle_drag_enter(ctx, state, kind, now, out);
            } else if constexpr (std::is_same_v<T, gesture::Tap>) {
                handle_tap(ctx, state, kind, now, out);
            } else if constexpr (std::is_same_v<T, gesture::HoldStart>) {
                if (ctx.tools.menu_beacon) {
                    menu_hold(ctx, state, kind.region, now, out);
                }
            }
            // DragExit and HoldEnd carry no feedback of their own.
        },
        g.kind);
    return out;
}

std::optional<ButtonLayout> button_layout(const EngineConfig& config, Tools tools) {
    if (!tools.menu_beacon) {
        return std::nullopt;
    }
    return ButtonLayout{config.menu_beacon.open_button, config.menu_beacon.scroll_button};
}

Engine::Engine(AnnotatedImage image, EngineConfig config, Tools tools)
    : image_(std::move(image)), config_(std::move(config)), tools_(tools) {
    if (image_.cam) {
        prominence_ = bake_prominence(image_);
    }
    state_.enabled_tools = tools_;
}

EngineContext Engine::context() const { return EngineContext{image_, config_, tools_, prominence()}; }

std::vector<AudioEvent> Engine::step(const GestureEvent& g) {
    const EngineContext ctx = context();
    return apply_gesture(ctx, state_, g);
}

std::optional<AreaPath> Engine::resolve(Point screen) const { return resolve_hover(context(), state_, screen); }

}  // namespace tactile
