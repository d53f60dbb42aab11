#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tactile/image_model.hpp"

namespace tactile {

enum class Voice { primary, secondary };

enum class EarconKind { first_touch, menu_wrap, zoom_confirm, beacon_arrived };

enum class ToneKind { off_area_warning, bleed_warning };

enum class ToneAction { start, stop };

// What an utterance is about. Rendering ignores it; the harness reads it to
// recompute metrics from a log without access to engine state.
enum class Cue {
    area,             // area name announced by touch
    entered,          // "Entered <label>"
    count,            // unexplored count after leaving a parent
    completion,       // "no more unexplored areas"
    menu_count,       // count spoken when the menu opens
    menu_entry,       // menu scroll
    beacon_on,
    beacon_off,
    beacon_rejected,
    direction,
    arrived,
    zoom,
    bleed,
};

struct Speech {
    std::string text;
    double volume = 1.0;
    Voice voice = Voice::primary;
    Cue cue = Cue::area;
    std::optional<AreaPath> area;

    friend bool operator==(const Speech&, const Speech&) = default;
};

struct Earcon {
    EarconKind kind = EarconKind::first_touch;
    friend bool operator==(const Earcon&, const Earcon&) = default;
};

struct Tone {
    ToneKind kind = ToneKind::off_area_warning;
    ToneAction action = ToneAction::start;
    friend bool operator==(const Tone&, const Tone&) = default;
};

/// Beacon click cadence. An empty interval means silent.
struct BeepRate {
    std::optional<int> interval_ms;
    friend bool operator==(const BeepRate&, const BeepRate&) = default;
};

using AudioPayload = std::variant<Speech, Earcon, Tone, BeepRate>;

struct AudioEvent {
    std::int64_t time_ms = 0;
    AudioPayload payload;

    friend bool operator==(const AudioEvent&, const AudioEvent&) = default;
};

std::string_view to_string(Voice v);
std::string_view to_string(EarconKind k);
std::string_view to_string(ToneKind k);
std::string_view to_string(ToneAction a);
std::string_view to_string(Cue c);

/// One `.events.jsonl` line, without the trailing newline. Keys appear in a
/// fixed order per type and volume is printed with three decimals.
std::string to_json_line(const AudioEvent& event);
AudioEvent parse_json_line(std::string_view line);

std::string to_jsonl(std::span<const AudioEvent> events);
std::vector<AudioEvent> parse_jsonl(std::string_view text);

const Speech* as_speech(const AudioEvent& e);

}  // namespace tactile
