#include "tactile/zoom.hpp"

#include <array>

namespace tactile {

namespace {

constexpr double kExitEpsilon = 1e-9;

std::size_t index_of(Quadrant q) { return static_cast<std::size_t>(q); }

}  // namespace

Quadrant quadrant_of(Point p) {
    const bool right = p.x > 0.5;
    const bool bottom = p.y > 0.5;
    if (!bottom) {
        return right ? Quadrant::q2 : Quadrant::q1;
    }
    return right ? Quadrant::q4 : Quadrant::q3;
}

Rect quadrant_rect(Quadrant q) {
    const double x0 = (q == Quadrant::q2 || q == Quadrant::q4) ? 0.5 : 0.0;
    const double y0 = (q == Quadrant::q3 || q == Quadrant::q4) ? 0.5 : 0.0;
    return Rect{x0, y0, x0 + 0.5, y0 + 0.5};
}

std::string_view quadrant_label(Quadrant q) {
    static constexpr std::array<std::string_view, 4> kLabels{"Q1", "Q2", "Q3", "Q4"};
    return kLabels[index_of(q)];
}

Point to_image_coords(Quadrant q, Point screen) {
    const Rect r = quadrant_rect(q);
    return {r.x0 + screen.x / 2.0, r.y0 + screen.y / 2.0};
}

Point to_screen_coords(Quadrant q, Point image) {
    const Rect r = quadrant_rect(q);
    return {(image.x - r.x0) * 2.0, (image.y - r.y0) * 2.0};
}

bool in_bleed_band(const Area& area, Quadrant q, Point image_point, double guard_band) {
    const Rect quad = quadrant_rect(q);
    const Rect box = bounding_box(area.polygon);
    const bool exits_left = box.x0 < quad.x0 - kExitEpsilon;
    const bool exits_right = box.x1 > quad.x1 + kExitEpsilon;
    const bool exits_top = box.y0 < quad.y0 - kExitEpsilon;
    const bool exits_bottom = box.y1 > quad.y1 + kExitEpsilon;
    return (exits_left && image_point.x - quad.x0 <= guard_band) ||
           (exits_right && quad.x1 - image_point.x <= guard_band) ||
           (exits_top && image_point.y - quad.y0 <= guard_band) ||
           (exits_bottom && quad.y1 - image_point.y <= guard_band);
}

Point screen_to_image(const ExplorationState& state, Point screen) {
    return state.zoom ? to_image_coords(state.zoom->active_quadrant, screen) : screen;
}

void zoom_in(const EngineContext& ctx, ExplorationState& state, Point tap_midpoint, std::int64_t now_ms,
             std::vector<AudioEvent>& out) {
    if (state.zoom) {
        return;
    }
    const Quadrant q = quadrant_of(tap_midpoint);
    state.zoom = ZoomState{q, false};
    state.menu.open = false;
    out.push_back({now_ms, Earcon{EarconKind::zoom_confirm}});
    out.push_back({now_ms, Speech{"zoomed into " + ctx.config.zoom.quadrant_names[index_of(q)], 1.0,
                                  Voice::primary, Cue::zoom, std::nullopt}});
}

void stop_bleed(ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out) {
    if (state.zoom && state.zoom->in_bleed) {
        state.zoom->in_bleed = false;
        out.push_back({now_ms, Tone{ToneKind::bleed_warning, ToneAction::stop}});
    }
}

void zoom_out(const EngineContext&, ExplorationState& state, std::int64_t now_ms, std::vector<AudioEvent>& out) {
    if (!state.zoom) {
        return;
    }
    stop_bleed(state, now_ms, out);
    state.zoom.reset();
    state.menu.open = false;
    out.push_back({now_ms, Earcon{EarconKind::zoom_confirm}});
    out.push_back({now_ms, Speech{"zoomed out", 1.0, Voice::primary, Cue::zoom, std::nullopt}});
}

void bleed_check(const EngineContext& ctx, ExplorationState& state, Point image_point, std::int64_t now_ms,
                 std::vector<AudioEvent>& out) {
    if (!state.zoom) {
        return;
    }
    bool bleeding = false;
    if (const auto hit = hit_test(ctx.image, image_point, state.level)) {
        bleeding = in_bleed_band(area_at(ctx.image, *hit), state.zoom->active_quadrant, image_point,
                                 ctx.config.zoom.guard_band);
    }
    if (bleeding && !state.zoom->in_bleed) {
        state.zoom->in_bleed = true;
        out.push_back({now_ms, Tone{ToneKind::bleed_warning, ToneAction::start}});
        out.push_back({now_ms, Speech{"continues beyond this quadrant — zoom out to explore", 1.0, Voice::primary,
                                      Cue::bleed, std::nullopt}});
    } else if (!bleeding) {
        stop_bleed(state, now_ms, out);
    }
}

}  // namespace tactile
