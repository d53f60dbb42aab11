#include "tactile/audio_event.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "tactile/annotation_io.hpp"

namespace tactile {

namespace {

using nlohmann::json;

template <typename Enum, std::size_t N>
Enum from_name(const std::array<std::pair<Enum, std::string_view>, N>& table, std::string_view name,
               const char* what) {
    for (const auto& [value, text] : table) {
        if (text == name) {
            return value;
        }
    }
    throw ParseError(std::string("unknown ") + what + " \"" + std::string(name) + "\"");
}

template <typename Enum, std::size_t N>
std::string_view to_name(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum value) {
    for (const auto& [v, text] : table) {
        if (v == value) {
            return text;
        }
    }
    return "?";
}

constexpr std::array<std::pair<Voice, std::string_view>, 2> kVoices{{
    {Voice::primary, "primary"},
    {Voice::secondary, "secondary"},
}};

constexpr std::array<std::pair<EarconKind, std::string_view>, 4> kEarcons{{
    {EarconKind::first_touch, "first_touch"},
    {EarconKind::menu_wrap, "menu_wrap"},
    {EarconKind::zoom_confirm, "zoom_confirm"},
    {EarconKind::beacon_arrived, "beacon_arrived"},
}};

constexpr std::array<std::pair<ToneKind, std::string_view>, 2> kTones{{
    {ToneKind::off_area_warning, "off_area_warning"},
    {ToneKind::bleed_warning, "bleed_warning"},
}};

constexpr std::array<std::pair<ToneAction, std::string_view>, 2> kActions{{
    {ToneAction::start, "start"},
    {ToneAction::stop, "stop"},
}};

constexpr std::array<std::pair<Cue, std::string_view>, 13> kCues{{
    {Cue::area, "area"},
    {Cue::entered, "entered"},
    {Cue::count, "count"},
    {Cue::completion, "completion"},
    {Cue::menu_count, "menu_count"},
    {Cue::menu_entry, "menu_entry"},
    {Cue::beacon_on, "beacon_on"},
    {Cue::beacon_off, "beacon_off"},
    {Cue::beacon_rejected, "beacon_rejected"},
    {Cue::direction, "direction"},
    {Cue::arrived, "arrived"},
    {Cue::zoom, "zoom"},
    {Cue::bleed, "bleed"},
}};

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string format_volume(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3f", v);
    return buf.data();
}

}  // namespace

std::string_view to_string(Voice v) { return to_name(kVoices, v); }
std::string_view to_string(EarconKind k) { return to_name(kEarcons, k); }
std::string_view to_string(ToneKind k) { return to_name(kTones, k); }
std::string_view to_string(ToneAction a) { return to_name(kActions, a); }
std::string_view to_string(Cue c) { return to_name(kCues, c); }

std::string to_json_line(const AudioEvent& event) {
    std::string out = "{\"t\":" + std::to_string(event.time_ms) + ",\"type\":";
    std::visit(
        [&out](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Speech>) {
                out += "\"speech\",\"text\":" + json_string(p.text) + ",\"volume\":" + format_volume(p.volume) +
                       ",\"voice\":" + json_string(to_string(p.voice)) + ",\"cue\":" + json_string(to_string(p.cue)) +
                       ",\"area\":" + (p.area ? json_string(p.area->to_string()) : std::string("null"));
            } else if constexpr (std::is_same_v<T, Earcon>) {
                out += "\"earcon\",\"kind\":" + json_string(to_string(p.kind));
            } else if constexpr (std::is_same_v<T, Tone>) {
                out += "\"tone\",\"kind\":" + json_string(to_string(p.kind)) + ",\"action\":" + json_string(to_string(p.action));
            } else {
                out += "\"beep_rate\",\"interval_ms\":" +
                       (p.interval_ms ? std::to_string(*p.interval_ms) : std::string("null"));
            }
        },
        event.payload);
    out += "}";
    return out;
}

AudioEvent parse_json_line(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid event line: ") + e.what());
    }
    try {
        AudioEvent ev;
        ev.time_ms = j.at("t").get<std::int64_t>();
        const std::string type = j.at("type").get<std::string>();
        if (type == "speech") {
            Speech s;
            s.text = j.at("text").get<std::string>();
            s.volume = j.at("volume").get<double>();
            s.voice = from_name(kVoices, j.at("voice").get<std::string>(), "voice");
            s.cue = from_name(kCues, j.at("cue").get<std::string>(), "cue");
            if (const json& a = j.at("area"); !a.is_null()) {
                s.area = AreaPath::parse(a.get<std::string>());
            }
            ev.payload = std::move(s);
        } else if (type == "earcon") {
            ev.payload = Earcon{from_name(kEarcons, j.at("kind").get<std::string>(), "earcon")};
        } else if (type == "tone") {
            ev.payload = Tone{from_name(kTones, j.at("kind").get<std::string>(), "tone"),
                              from_name(kActions, j.at("action").get<std::string>(), "tone action")};
        } else if (type == "beep_rate") {
            BeepRate b;
            if (const json& v = j.at("interval_ms"); !v.is_null()) {
                b.interval_ms = v.get<int>();
            }
            ev.payload = b;
        } else {
            throw ParseError("unknown event type \"" + type + "\"");
        }
        return ev;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed event: ") + e.what());
    }
}

std::string to_jsonl(std::span<const AudioEvent> events) {
    std::string out;
    for (const AudioEvent& e : events) {
        out += to_json_line(e);
        out += '\n';
    }
    return out;
}

std::vector<AudioEvent> parse_jsonl(std::string_view text) {
    std::vector<AudioEvent> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(pos, end - pos);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            out.push_back(parse_json_line(line));
        }
        pos = end + 1;
    }
    return out;
}

const Speech* as_speech(const AudioEvent& e) { return std::get_if<Speech>(&e.payload); }

}  // namespace tactile
