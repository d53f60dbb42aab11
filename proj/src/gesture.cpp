#include "tactile/gesture.hpp"

#include <algorithm>
#include <limits>

namespace tactile {

std::optional<Button> ButtonLayout::button_at(Point screen) const {
    if (open.contains(screen)) {
        return Button::open;
    }
    if (scroll.contains(screen)) {
        return Button::scroll;
    }
    return std::nullopt;
}

GestureClassifier::GestureClassifier(TimingConfig timing, std::optional<ButtonLayout> buttons)
    : timing_(timing), buttons_(buttons) {}

void GestureClassifier::flush_group(std::int64_t time_ms, const GestureSink& sink) {
    if (!group_) {
        return;
    }
    const TapGroup g = *group_;
    group_.reset();
    sink(GestureEvent{time_ms, gesture::Tap{g.finger_count, g.count, g.position}});
}

void GestureClassifier::disqualify_tap(std::int64_t time_ms, const GestureSink& sink) {
    if (episode_ && episode_->tap_candidate) {
        episode_->tap_candidate = false;
        flush_group(time_ms, sink);
    }
}

void GestureClassifier::register_tap(std::int64_t time_ms, const GestureSink& sink) {
    const Episode& ep = *episode_;
    const int fingers = ep.max_pointers;
    Point position = ep.first_downs.front();
    if (fingers == 2 && ep.first_downs.size() >= 2) {
        position = (ep.first_downs[0] + ep.first_downs[1]) * 0.5;
    }
    if (group_ && group_->finger_count == fingers && group_->count < 3) {
        ++group_->count;
        group_->last_up_ms = time_ms;
    } else {
        flush_group(time_ms, sink);
        group_ = TapGroup{fingers, 1, position, time_ms};
    }
    if (group_->count == 3) {
        flush_group(time_ms, sink);
    }
}

void GestureClassifier::fire_timers(std::int64_t time_ms, bool inclusive_end, const GestureSink& sink) {
    enum class Timer { group, tap, hold };
    for (;;) {
        std::optional<std::pair<std::int64_t, Timer>> next;
        auto consider = [&](std::int64_t deadline, Timer which, bool fires) {
            if (fires && (!next || deadline < next->first)) {
                next = std::make_pair(deadline, which);
            }
        };
        if (group_ && !episode_) {
            const std::int64_t d = group_->last_up_ms + timing_.multi_tap_gap_ms;
            consider(d, Timer::group, inclusive_end || d < time_ms);
        }
        if (episode_ && episode_->tap_candidate) {
            const std::int64_t d = episode_->start_ms + timing_.tap_max_ms;
            consider(d, Timer::tap, inclusive_end || d < time_ms);
        }
        if (episode_ && episode_->hold_button && !episode_->hold_fired) {
            const std::int64_t d = episode_->start_ms + timing_.hold_ms;
            consider(d, Timer::hold, inclusive_end || d <= time_ms);
        }
        if (!next) {
            return;
        }
        const auto [deadline, which] = *next;
        switch (which) {
            case Timer::group:
                flush_group(deadline, sink);
                break;
            case Timer::tap:
                disqualify_tap(deadline, sink);
                break;
            case Timer::hold:
                disqualify_tap(deadline, sink);
                episode_->hold_fired = true;
                sink(GestureEvent{deadline, gesture::HoldStart{*episode_->hold_button}});
                break;
        }
        last_time_ = std::max(last_time_, deadline);
    }
}

void GestureClassifier::update_hover(Point position, std::int64_t time_ms, const HitResolver& resolve,
                                     const GestureSink& sink) {
    const std::optional<AreaPath> next = resolve ? resolve(position) : std::nullopt;
    if (next == hover_) {
        return;
    }
    if (hover_) {
        sink(GestureEvent{time_ms, gesture::DragExit{*hover_, position}});
    }
    if (next) {
        sink(GestureEvent{time_ms, gesture::DragEnter{*next, position}});
    }
    hover_ = next;
}

void GestureClassifier::feed(const TouchEvent& event, const HitResolver& resolve, const GestureSink& sink) {
    if (started_ && event.time_ms < last_time_) {
        throw TraceError("non-monotonic trace");
    }
    if (event.time_ms < 0) {
        throw TraceError("negative timestamp");
    }
    fire_timers(event.time_ms, false, sink);
    started_ = true;
    last_time_ = event.time_ms;
    const std::int64_t t = event.time_ms;
    const Point pos = event.position;

    switch (event.phase) {
        case Phase::down: {
            if (pointers_.contains(event.pointer_id)) {
                throw TraceError("pointer " + std::to_string(event.pointer_id) + " is already down");
            }
            pointers_.emplace(event.pointer_id, Pointer{pos, false});
            if (!episode_) {
                Episode ep;
                ep.start_ms = t;
                ep.primary = event.pointer_id;
                ep.first_downs.push_back(pos);
                if (buttons_) {
                    ep.hold_button = buttons_->button_at(pos);
                }
                episode_ = ep;
                update_hover(pos, t, resolve, sink);
                sink(GestureEvent{t, gesture::Touch{Phase::down, pos}});
            } else {
                episode_->max_pointers = std::max(episode_->max_pointers, static_cast<int>(pointers_.size()));
                if (episode_->first_downs.size() < 2) {
                    episode_->first_downs.push_back(pos);
                }
                if (!episode_->hold_fired) {
                    episode_->hold_button.reset();
                }
                if (episode_->max_pointers > 2) {
                    disqualify_tap(t, sink);
                }
            }
            break;
        }
        case Phase::move: {
            const auto it = pointers_.find(event.pointer_id);
            if (it == pointers_.end()) {
                throw TraceError("move for pointer " + std::to_string(event.pointer_id) + " that is not down");
            }
            if (!it->second.moved && distance(pos, it->second.down_position) >= timing_.slop) {
                it->second.moved = true;
                disqualify_tap(t, sink);
                if (!episode_->hold_fired) {
                    episode_->hold_button.reset();
                }
            }
            if (event.pointer_id == episode_->primary && episode_->primary_down) {
                update_hover(pos, t, resolve, sink);
                sink(GestureEvent{t, gesture::Touch{Phase::move, pos}});
            }
            break;
        }
        case Phase::up: {
            const auto it = pointers_.find(event.pointer_id);
            if (it == pointers_.end()) {
                throw TraceError("up for pointer " + std::to_string(event.pointer_id) + " that is not down");
            }
            pointers_.erase(it);
            if (event.pointer_id == episode_->primary && episode_->primary_down) {
                episode_->primary_down = false;
                hover_.reset();
                sink(GestureEvent{t, gesture::Touch{Phase::up, pos}});
                if (episode_->hold_fired) {
                    sink(GestureEvent{t, gesture::HoldEnd{*episode_->hold_button}});
                }
            }
            if (pointers_.empty()) {
                if (episode_->tap_candidate) {
                    register_tap(t, sink);
                }
                episode_.reset();
            }
            break;
        }
    }
}

void GestureClassifier::advance_to(std::int64_t time_ms, const GestureSink& sink) {
    if (started_ && time_ms < last_time_) {
        throw TraceError("non-monotonic trace");
    }
    fire_timers(time_ms, false, sink);
    started_ = true;
    last_time_ = time_ms;
}

void GestureClassifier::finish(const GestureSink& sink) { fire_timers(std::numeric_limits<std::int64_t>::max(), true, sink); }

std::vector<GestureEvent> classify(std::span<const TouchEvent> trace, const TimingConfig& timing,
                                   const HitResolver& resolve, std::optional<ButtonLayout> buttons) {
    std::vector<GestureEvent> out;
    GestureClassifier classifier(timing, buttons);
    const GestureSink sink = [&out](const GestureEvent& g) { out.push_back(g); };
    for (const TouchEvent& e : trace) {
        classifier.feed(e, resolve, sink);
    }
    classifier.finish(sink);
    return out;
}

}  // namespace tactile
