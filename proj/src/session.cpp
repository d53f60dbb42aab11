#include "tactile/session.hpp"

#include <algorithm>

namespace tactile {

Session::Session(AnnotatedImage image, EngineConfig config, Tools tools)
    : engine_(std::move(image), std::move(config), tools),
      classifier_(engine_.config().timing, button_layout(engine_.config(), tools)) {}

void Session::deliver(const GestureEvent& g, std::vector<AudioEvent>& out) {
    gestures_.push_back(g);
    end_ms_ = std::max(end_ms_, g.time_ms);
    std::vector<AudioEvent> produced = engine_.step(g);
    out.insert(out.end(), produced.begin(), produced.end());
    log_.insert(log_.end(), produced.begin(), produced.end());
}

std::vector<AudioEvent> Session::feed(const TouchEvent& event) {
    std::vector<AudioEvent> out;
    end_ms_ = std::max(end_ms_, event.time_ms);
    classifier_.feed(
        event, [this](Point p) { return engine_.resolve(p); }, [&](const GestureEvent& g) { deliver(g, out); });
    return out;
}

std::vector<AudioEvent> Session::advance_to(std::int64_t time_ms) {
    std::vector<AudioEvent> out;
    classifier_.advance_to(time_ms, [&](const GestureEvent& g) { deliver(g, out); });
    return out;
}

std::vector<AudioEvent> Session::finish() {
    std::vector<AudioEvent> out;
    classifier_.finish([&](const GestureEvent& g) { deliver(g, out); });
    return out;
}

SessionMetrics Session::metrics() const {
    const ExplorationState& s = engine_.state();
    SessionMetrics m;
    m.duration_ms = clock();
    m.touched_areas = s.touched_once.size();
    m.total_areas = all_paths(engine_.image()).size();
    m.coverage_pct = coverage_percent(m.touched_areas, m.total_areas);
    m.menu_scrolls_by_decile = bin_by_decile(s.counters.top_level_scroll_ms, m.duration_ms);
    m.beacons_placed = s.counters.beacons_placed;
    return m;
}

ReplayResult replay(const AnnotatedImage& image, std::span<const TouchEvent> trace, Tools tools,
                    const EngineConfig& config) {
    Session session(image, config, tools);
    for (const TouchEvent& e : trace) {
        session.feed(e);
    }
    session.finish();
    return {session.log(), session.metrics()};
}

}  // namespace tactile
