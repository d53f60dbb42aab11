#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tactile/config.hpp"
#include "tactile/geometry.hpp"
#include "tactile/image_model.hpp"

namespace tactile {

enum class Phase { down, move, up };

struct TouchEvent {
    std::int64_t time_ms = 0;
    int pointer_id = 0;
    Phase phase = Phase::down;
    Point position;  // screen, normalized

    friend bool operator==(const TouchEvent&, const TouchEvent&) = default;
};

/// Thrown for traces that violate ordering or pointer pairing.
class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Button { open, scroll };

/// Screen rectangles of the two menu buttons. Holds are only recognized on them.
struct ButtonLayout {
    Rect open;
    Rect scroll;

    std::optional<Button> button_at(Point screen) const;
};

namespace gesture {

struct DragEnter {
    AreaPath area;
    Point position;
    friend bool operator==(const DragEnter&, const DragEnter&) = default;
};

struct DragExit {
    AreaPath area;
    Point position;
    friend bool operator==(const DragExit&, const DragExit&) = default;
};

struct Tap {
    int finger_count = 1;  // 1 or 2
    int tap_count = 1;     // 1..3
    Point position;        // first finger for one-finger taps, midpoint for two
    friend bool operator==(const Tap&, const Tap&) = default;
};

struct HoldStart {
    Button region = Button::scroll;
    friend bool operator==(const HoldStart&, const HoldStart&) = default;
};

struct HoldEnd {
    Button region = Button::scroll;
    friend bool operator==(const HoldEnd&, const HoldEnd&) = default;
};

/// Raw position of the primary finger. Carries what the engine needs for
/// continuous feedback (beacon, warning tones) between area transitions.
struct Touch {
    Phase phase = Phase::down;
    Point position;
    friend bool operator==(const Touch&, const Touch&) = default;
};

}  // namespace gesture

struct GestureEvent {
    std::int64_t time_ms = 0;
    std::variant<gesture::DragEnter, gesture::DragExit, gesture::Tap, gesture::HoldStart, gesture::HoldEnd,
                 gesture::Touch>
        kind;

    friend bool operator==(const GestureEvent&, const GestureEvent&) = default;
};

/// Maps a screen point to the area the finger is over, given whatever state
/// the caller is in. An empty function never reports an area.
using HitResolver = std::function<std::optional<AreaPath>(Point)>;
using GestureSink = std::function<void(const GestureEvent&)>;

/// Streaming touch classifier.
///
/// Timers (tap-group expiry, tap disqualification, hold) fire lazily when a
/// later event or advance_to() shows the deadline has passed; the resulting
/// gesture is stamped with the deadline itself, so output times never
/// decrease. Gestures go to the sink one at a time and the resolver is only
/// consulted after every earlier gesture has been delivered, letting a
/// caller update its state between them.
class GestureClassifier {
public:
    explicit GestureClassifier(TimingConfig timing, std::optional<ButtonLayout> buttons = std::nullopt);

    void feed(const TouchEvent& event, const HitResolver& resolve, const GestureSink& sink);
    void advance_to(std::int64_t time_ms, const GestureSink& sink);
    /// Fires every pending timer as if time ran on indefinitely.
    void finish(const GestureSink& sink);

    std::int64_t now() const { return last_time_; }
    bool any_pointer_down() const { return !pointers_.empty(); }

private:
    struct Pointer {
        Point down_position;
        bool moved = false;
    };

    struct Episode {
        std::int64_t start_ms = 0;
        int primary = 0;
        bool primary_down = true;
        int max_pointers = 1;
        bool tap_candidate = true;
        std::optional<Button> hold_button;  // still eligible for a hold on this button
        bool hold_fired = false;
        std::vector<Point> first_downs;  // down positions of the first two pointers
    };

    struct TapGroup {
        int finger_count = 1;
        int count = 0;
        Point position;
        std::int64_t last_up_ms = 0;
    };

    void fire_timers(std::int64_t time_ms, bool inclusive_end, const GestureSink& sink);
    void disqualify_tap(std::int64_t time_ms, const GestureSink& sink);
    void flush_group(std::int64_t time_ms, const GestureSink& sink);
    void register_tap(std::int64_t time_ms, const GestureSink& sink);
    void update_hover(Point position, std::int64_t time_ms, const HitResolver& resolve, const GestureSink& sink);

    TimingConfig timing_;
    std::optional<ButtonLayout> buttons_;
    std::map<int, Pointer> pointers_;
    std::optional<Episode> episode_;
    std::optional<TapGroup> group_;
    std::optional<AreaPath> hover_;
    std::int64_t last_time_ = 0;
    bool started_ = false;
};

/// Batch classification of a whole trace.
std::vector<GestureEvent> classify(std::span<const TouchEvent> trace, const TimingConfig& timing,
                                   const HitResolver& resolve = {},
                                   std::optional<ButtonLayout> buttons = std::nullopt);

}  // namespace tactile
